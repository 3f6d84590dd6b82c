// coxinv: involution classes of finite Coxeter groups and the w_o pairing.
//
// exit codes: 0 ok, 1 verification failure, 2 bad input, 3 resource budget exceeded

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxinv/coxinv.hpp"

using namespace coxinv;

namespace {

struct Settings {
  std::string type;
  std::string subgroup;  // empty: full when w_o = -1, else wo
  std::string sigma;
  std::string mode = "auto";
  std::uint64_t cap = 3'000'000;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  std::string format;
  std::string golden_file;
  std::string realization = "C";
  int threads = 1;
};

Realization realization_of(const Settings& s) {
  if (s.realization == "B") return Realization::B;
  if (s.realization == "C") return Realization::C;
  throw PreconditionError("realization must be B or C");
}

ClassifyOptions classify_options(const Settings& s) {
  ClassifyOptions o;
  if (s.mode == "exhaustive") o.mode = ClassifyMode::exhaustive;
  else if (s.mode == "orbit") o.mode = ClassifyMode::orbit;
  else if (s.mode == "auto") o.mode = ClassifyMode::automatic;
  else throw PreconditionError("unknown mode '" + s.mode + "'");
  o.cap = s.cap;
  o.memory_budget = s.memory_budget;
  o.threads = s.threads;
  return o;
}

/// "2 1 3" or "2,1,3": images of nodes 1..n.
NodePermutation parse_sigma(const std::string& text, int n) {
  std::string t = text;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  NodePermutation p;
  int v = 0;
  while (in >> v) p.push_back(v - 1);
  if (!in.eof()) throw PreconditionError("cannot parse sigma '" + text + "'");
  if (static_cast<int>(p.size()) != n) throw PreconditionError("sigma must list " + std::to_string(n) + " node images");
  return p;
}

/// The given sigma, or the first diagram automorphism of order 2.
NodePermutation choose_sigma(const RootSystem& R, const std::string& text) {
  if (!text.empty()) return parse_sigma(text, R.rank());
  for (const auto& p : diagram_automorphisms(R.gram())) {
    bool involutive = true;
    for (std::size_t i = 0; i < p.size(); ++i) involutive = involutive && p[static_cast<std::size_t>(p[i])] == static_cast<int>(i);
    if (!is_identity(p) && involutive) return p;
  }
  throw PreconditionError(R.type().name() + " has no diagram automorphism of order 2");
}

SubgroupKind subgroup_kind(const Settings& s, bool w0_central) {
  if (s.subgroup.empty()) return w0_central ? SubgroupKind::full : SubgroupKind::centralizer_of_w0;
  if (s.subgroup == "full") return SubgroupKind::full;
  if (s.subgroup == "wo") return SubgroupKind::centralizer_of_w0;
  if (s.subgroup == "sigma") return SubgroupKind::sigma_fixed;
  throw PreconditionError("unknown subgroup '" + s.subgroup + "'");
}

ClassTable compute_table(const Settings& s, bool with_pairing) {
  const DiagramType t = parse_type(s.type, realization_of(s));
  if (t.is_dihedral() && !has_exact_realization(t)) {
    const SubgroupKind kind = subgroup_kind(s, t.gonality % 2 == 0);
    if (!s.sigma.empty()) throw PreconditionError("--sigma is not supported for dihedral types");
    return dihedral::classify(t.gonality, kind);
  }
  const RootSystem R = RootSystem::build(t);
  const GroupElement w0 = longest_element(R);
  SubgroupSpec spec;
  switch (subgroup_kind(s, is_minus_one(R, w0))) {
    case SubgroupKind::full: spec = full_group(R); break;
    case SubgroupKind::centralizer_of_w0: spec = centralizer_of_w0(R); break;
    case SubgroupKind::sigma_fixed: spec = sigma_fixed(R, choose_sigma(R, s.sigma)); break;
  }
  return with_pairing ? classify_with_pairing(R, spec, classify_options(s)) : classify(R, spec, classify_options(s));
}

int run_classify(const Settings& s) {
  std::cout << render_classes(compute_table(s, false), parse_format(s.format.empty() ? "text" : s.format));
  return 0;
}

int run_pair(const Settings& s) {
  std::cout << render_pairing(compute_table(s, true), parse_format(s.format.empty() ? "text" : s.format));
  return 0;
}

int run_table(const Settings& s) {
  const ClassTable t = compute_table(s, true);
  const Format f = parse_format(s.format.empty() ? "json" : s.format);
  if (f == Format::json) std::cout << dump_json(table_json(t));
  else std::cout << render_classes(t, f) << render_pairing(t, f);
  return 0;
}

int run_fold(const Settings& s) {
  const DiagramType t = parse_type(s.type, realization_of(s));
  auto R = std::make_shared<const RootSystem>(RootSystem::build(t));
  const Folding f = fold(R, choose_sigma(*R, s.sigma));
  std::cout << render_folding(f, parse_format(s.format.empty() ? "text" : s.format));
  return 0;
}

int run_verify(const Settings& s) {
  const Format f = parse_format(s.format.empty() ? "text" : s.format);
  const std::string golden = s.golden_file.empty() ? std::string(kGoldenText) : read_text_file(s.golden_file);
  VerifyOptions opts;
  opts.classify = classify_options(s);
  std::vector<DiagramType> types;
  const bool all = s.type == "all" || s.type == "ALL";
  if (all) types = verify_all_types();
  else types.push_back(parse_type(s.type, realization_of(s)));

  bool ok = true;
  Json reports = Json::array();
  for (const auto& t : types) {
    const VerifyReport r = verify(expected_table(t, golden), opts);
    ok = ok && r.passed();
    if (f == Format::json) reports.push_back(verify_json(r));
    else std::cout << render_verify(r, f);
  }
  if (f == Format::json) std::cout << dump_json(all ? reports : reports.front());
  else if (all) std::cout << (ok ? "PASS" : "FAIL") << " all " << types.size() << " types\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Involution classes of finite Coxeter groups and multiplication by the longest element"};
  app.require_subcommand(1);
  Settings s;

  auto common = [&](CLI::App* sub, bool subgroup_flags) {
    sub->add_option("type", s.type, "Diagram type: A5, BC5, D6, E7, F4, H4, G2, G2:8")->required();
    if (subgroup_flags) {
      sub->add_option("--subgroup", s.subgroup, "full | wo | sigma (default: full when w_o = -1, else wo)")
          ->check(CLI::IsMember({"full", "wo", "sigma"}));
    }
    sub->add_option("--sigma", s.sigma, "Diagram automorphism as images of nodes 1..n, e.g. \"5 4 3 2 1\"");
    sub->add_option("--mode", s.mode, "exhaustive | orbit | auto")->check(CLI::IsMember({"exhaustive", "orbit", "auto"}));
    sub->add_option("--cap", s.cap, "Largest subgroup enumerated exhaustively");
    sub->add_option("--memory-budget", s.memory_budget, "Bytes for orbit storage (suffixes k, M, G)")
        ->transform(CLI::AsSizeValue(false));
    sub->add_option("--format", s.format, "json | md | text")->check(CLI::IsMember({"json", "md", "text"}));
    sub->add_option("--threads", s.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--realization", s.realization, "Realization of BC_n: B or C")->check(CLI::IsMember({"B", "C"}));
  };

  auto* classify_cmd = app.add_subcommand("classify", "Involution conjugacy classes");
  common(classify_cmd, true);
  auto* pair_cmd = app.add_subcommand("pair", "Pairing of classes under multiplication by w_o");
  common(pair_cmd, true);
  auto* table_cmd = app.add_subcommand("table", "Classes and pairing (JSON by default)");
  common(table_cmd, true);
  auto* fold_cmd = app.add_subcommand("fold", "Folding along a diagram automorphism");
  common(fold_cmd, false);
  auto* verify_cmd = app.add_subcommand("verify", "Compare against the expected tables; type 'all' runs every tabulated type");
  common(verify_cmd, false);
  verify_cmd->add_option("--golden-file", s.golden_file, "Expected-table file replacing the built-in data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classify_cmd) return run_classify(s);
    if (*pair_cmd) return run_pair(s);
    if (*table_cmd) return run_table(s);
    if (*fold_cmd) return run_fold(s);
    if (*verify_cmd) return run_verify(s);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::bad_alloc&) {
    std::cerr << "out of memory\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
