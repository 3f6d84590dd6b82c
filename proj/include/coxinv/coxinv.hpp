#pragma once

#include "coxinv/algebra.hpp"
#include "coxinv/diagram.hpp"
#include "coxinv/dihedral.hpp"
#include "coxinv/error.hpp"
#include "coxinv/folding.hpp"
#include "coxinv/golden.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/parallel.hpp"
#include "coxinv/perm.hpp"
#include "coxinv/report.hpp"
#include "coxinv/root_system.hpp"
#include "coxinv/weyl.hpp"
