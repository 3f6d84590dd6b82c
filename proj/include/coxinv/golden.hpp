#pragma once

// Expected classification tables and their verification against computed
// classifications. Exceptional tables come from a text file; the classical
// families and the dihedral types are generated.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxinv/diagram.hpp"
#include "coxinv/dihedral.hpp"
#include "coxinv/error.hpp"
#include "coxinv/golden_data.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/parallel.hpp"
#include "coxinv/root_system.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

struct Provenance {
  enum class Kind { table, derived };
  Kind kind = Kind::table;
  std::string note;

  std::string to_string() const { return (kind == Kind::table ? "table(" : "derived(") + note + ")"; }
};

struct GoldenLine {
  int number = 0;
  std::vector<NodeSet> left;
  /// nullopt means SELF.
  std::optional<std::vector<NodeSet>> right;
  Provenance provenance;
  /// Expected (dim^- left, dim^- right) where a closed formula is known.
  std::optional<std::pair<int, int>> expected_dims;
};

struct GoldenTable {
  DiagramType type;
  SubgroupKind kind = SubgroupKind::full;
  std::vector<GoldenLine> lines;
  /// Distinct sides name distinct classes.
  bool distinct_classes = true;
};

inline std::string subsets_to_string(const std::vector<NodeSet>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].to_string();
  return s;
}

namespace detail {
inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

inline std::vector<NodeSet> parse_subsets(const std::string& s) {
  std::vector<NodeSet> out;
  for (const auto& part : split(s, ';')) out.push_back(NodeSet::parse(part));
  if (out.empty()) throw PreconditionError("empty subset list");
  return out;
}

inline Provenance parse_provenance(const std::string& s) {
  Provenance p;
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw PreconditionError("bad provenance '" + s + "'");
  const std::string tag = s.substr(0, open);
  if (tag == "table") p.kind = Provenance::Kind::table;
  else if (tag == "derived") p.kind = Provenance::Kind::derived;
  else throw PreconditionError("unknown provenance tag '" + tag + "'");
  p.note = s.substr(open + 1, s.size() - open - 2);
  return p;
}

inline SubgroupKind parse_kind(const std::string& s) {
  if (s == "W") return SubgroupKind::full;
  if (s == "Wo") return SubgroupKind::centralizer_of_w0;
  if (s == "Wsigma") return SubgroupKind::sigma_fixed;
  throw PreconditionError("unknown subgroup '" + s + "'");
}
}  // namespace detail

/// Parses the golden file format; tables keyed by type name.
inline std::map<std::string, GoldenTable> parse_golden(std::string_view text) {
  std::map<std::string, GoldenTable> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto f = detail::split(t, '|');
    if (f.size() != 6) throw PreconditionError("golden line " + std::to_string(lineno) + ": expected 6 fields");
    try {
      const DiagramType type = parse_type(f[0]);
      GoldenTable& table = out[type.name()];
      table.type = type;
      table.kind = detail::parse_kind(f[1]);
      GoldenLine gl;
      gl.number = std::stoi(f[2]);
      gl.left = detail::parse_subsets(f[3]);
      if (f[4] != "SELF") gl.right = detail::parse_subsets(f[4]);
      gl.provenance = detail::parse_provenance(f[5]);
      for (NodeSet s : gl.left)
        if (!s.within(type.rank)) throw PreconditionError("node out of range");
      if (gl.right)
        for (NodeSet s : *gl.right)
          if (!s.within(type.rank)) throw PreconditionError("node out of range");
      table.lines.push_back(std::move(gl));
    } catch (const std::exception& e) {
      throw PreconditionError("golden line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline GoldenLine pattern_line(int number, PatternFamily fam, int n, int k, int l) {
  const auto [k2, l2] = dagger_prediction(n, k, l);
  GoldenLine gl;
  gl.number = number;
  gl.left = {pattern_nodes({fam, n, k, l})};
  if (l2 != l) gl.right = std::vector<NodeSet>{pattern_nodes({fam, n, k2, l2})};
  gl.provenance = {Provenance::Kind::table,
                   "c(" + std::to_string(k) + "," + std::to_string(l) + ") <-> c(" + std::to_string(k2) + "," +
                       std::to_string(l2) + ")"};
  switch (fam) {
    case PatternFamily::A_even:
    case PatternFamily::A_odd: gl.expected_dims = {2 * k + l, n - l}; break;
    case PatternFamily::BC: gl.expected_dims = {k + l, n - k - l}; break;
    case PatternFamily::D:
      if ((n + 1) % 2 == 1) {
        if (l % 2 == 0) gl.expected_dims = {k + l, n - k - l};
        else gl.expected_dims = {k + l + 1, n - k - l + 1};
      }
      break;
    default: break;
  }
  return gl;
}

inline GoldenTable family_table(DiagramType type, SubgroupKind kind, PatternFamily fam, int n) {
  GoldenTable t;
  t.type = type;
  t.kind = kind;
  int number = 1;
  for (auto [k, l] : pattern_indices(n)) {
    const int l2 = n - 2 * k - l;
    if (l2 < l) continue;
    t.lines.push_back(pattern_line(number++, fam, n, k, l));
  }
  return t;
}

}  // namespace detail

/// Dihedral table: in W (n even) the reflection classes swap exactly when n = 2 mod 4;
/// for odd n only W_o = {id, w_o} is tabulated.
inline GoldenTable dihedral_table(int n) {
  GoldenTable t;
  t.type = DiagramType::G2(n);
  const NodeSet e, s1 = NodeSet::of({1}), s2 = NodeSet::of({2}), both = NodeSet::of({1, 2});
  const Provenance derived{Provenance::Kind::derived, "symbolic dihedral model"};
  if (n % 2 == 1) {
    t.kind = SubgroupKind::centralizer_of_w0;
    t.lines.push_back({1, {e}, std::vector<NodeSet>{both}, {Provenance::Kind::table, "G2 odd,1"}, std::pair{0, 1}});
    return t;
  }
  t.kind = SubgroupKind::full;
  t.lines.push_back({1, {e}, std::vector<NodeSet>{both}, derived, std::pair{0, 2}});
  if (n % 4 == 2) {
    t.lines.push_back({2, {s1}, std::vector<NodeSet>{s2}, derived, std::pair{1, 1}});
  } else {
    t.lines.push_back({2, {s1}, std::nullopt, derived, std::pair{1, 1}});
    t.lines.push_back({3, {s2}, std::nullopt, derived, std::pair{1, 1}});
  }
  return t;
}

/// Whether the printed dihedral tables show the two reflection classes swapped.
inline bool printed_dihedral_swaps(int n) { return n % 4 == 0; }

/// The expected table for a type. Exceptional types are read from `golden_text`
/// (the embedded copy of data/golden.txt by default).
inline GoldenTable expected_table(const DiagramType& t, std::string_view golden_text = kGoldenText) {
  if (!t.valid()) throw PreconditionError("invalid type");
  const int r = t.rank;
  switch (t.series) {
    case Series::A:
      if (r >= 2 && r % 2 == 0) return detail::family_table(t, SubgroupKind::centralizer_of_w0, PatternFamily::A_even, r / 2);
      if (r >= 3) return detail::family_table(t, SubgroupKind::centralizer_of_w0, PatternFamily::A_odd, (r + 1) / 2);
      break;
    case Series::B:
    case Series::C: return detail::family_table(t, SubgroupKind::full, PatternFamily::BC, r);
    case Series::D: {
      if (r < 4) break;
      const int n = r - 1;
      if (r % 2 == 1) return detail::family_table(t, SubgroupKind::centralizer_of_w0, PatternFamily::D, n);
      GoldenTable tab = detail::family_table(t, SubgroupKind::full, PatternFamily::D, n);
      tab.distinct_classes = false;
      const int m = r / 2;
      const NodeSet cm = pattern_nodes({PatternFamily::spin_minus, m, 0, 0});
      const NodeSet cp = pattern_nodes({PatternFamily::spin_plus, m, 0, 0});
      int number = static_cast<int>(tab.lines.size()) + 1;
      const Provenance prov{Provenance::Kind::table, "D even, c- and c+"};
      if (r % 4 == 0) {
        tab.lines.push_back({number++, {cm}, std::nullopt, prov, std::nullopt});
        tab.lines.push_back({number++, {cp}, std::nullopt, prov, std::nullopt});
      } else {
        tab.lines.push_back({number++, {cm}, std::vector<NodeSet>{cp}, prov, std::nullopt});
      }
      return tab;
    }
    case Series::G: return dihedral_table(t.gonality);
    default: {
      auto tables = parse_golden(golden_text);
      auto it = tables.find(t.name());
      if (it != tables.end()) return it->second;
      break;
    }
  }
  throw PreconditionError("no expected table for " + t.name());
}

// ---------------------------------------------------------------------------
// Verification

struct LineResult {
  int number = 0;
  bool pass = false;
  std::string left;
  std::string right;  // "SELF" for self-paired lines
  std::string detail;
  Provenance provenance;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string type_name;
  SubgroupKind kind = SubgroupKind::full;
  ClassifyMode mode = ClassifyMode::orbit;
  std::vector<LineResult> lines;
  std::vector<CheckResult> checks;
  /// Discrepancies against printed data that do not count as failures.
  std::vector<std::string> flags;
  ClassTable table;

  bool passed() const {
    for (const auto& l : lines)
      if (!l.pass) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  ClassifyOptions classify;
};

namespace detail {

/// Class of w_I, or nullopt when w_I is outside the subgroup or unclassified.
inline std::optional<int> class_of_subset(const ClassTable& table, const RootSystem* R, const SubgroupSpec* spec, NodeSet I) {
  if (auto c = table.class_of(I)) return c;
  if (!R || !spec) return std::nullopt;
  if (!I.within(R->rank())) return std::nullopt;
  const GroupElement w = longest_parabolic(*R, I);
  if (!in_subgroup(*R, w, *spec)) return std::nullopt;
  return table.locate(*R, w);
}

inline VerifyReport compare(const GoldenTable& golden, ClassTable table, const RootSystem* R, const SubgroupSpec* spec,
                            bool w0_is_minus_one, int threads) {
  VerifyReport rep;
  rep.type_name = golden.type.name();
  rep.kind = golden.kind;
  rep.mode = table.mode_used;
  const int n = table.rank;

  std::vector<std::vector<int>> sides(golden.lines.size() * 2);
  rep.lines.resize(golden.lines.size());
  parallel_for(golden.lines.size(), threads, [&](std::size_t li) {
    const auto& gl = golden.lines[li];
    LineResult& lr = rep.lines[li];
    lr.number = gl.number;
    lr.left = subsets_to_string(gl.left);
    lr.right = gl.right ? subsets_to_string(*gl.right) : "SELF";
    lr.provenance = gl.provenance;
    std::string why;
    auto one_class = [&](const std::vector<NodeSet>& subsets, std::vector<int>& classes) -> std::optional<int> {
      for (NodeSet I : subsets) {
        auto c = class_of_subset(table, R, spec, I);
        if (!c) {
          why += I.to_string() + " is not an involution class of the subgroup; ";
          return std::nullopt;
        }
        classes.push_back(*c);
      }
      std::sort(classes.begin(), classes.end());
      classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
      if (classes.size() != 1) {
        why += subsets_to_string(subsets) + " spans " + std::to_string(classes.size()) + " classes; ";
        return std::nullopt;
      }
      return classes.front();
    };
    auto L = one_class(gl.left, sides[2 * li]);
    std::optional<int> Rc = L;
    if (gl.right) Rc = one_class(*gl.right, sides[2 * li + 1]);
    bool ok = L && Rc;
    if (ok) {
      const int image = table.pairing[static_cast<std::size_t>(*L)];
      if (image != *Rc) {
        ok = false;
        why += "w_o maps class " + std::to_string(*L) + " to class " + std::to_string(image) + ", expected " +
               std::to_string(*Rc) + "; ";
      }
      const int dl = table.classes[static_cast<std::size_t>(*L)].dim_minus;
      const int dr = table.classes[static_cast<std::size_t>(*Rc)].dim_minus;
      if (w0_is_minus_one && dl + dr != n) {
        ok = false;
        why += "dim^- " + std::to_string(dl) + " + " + std::to_string(dr) + " != " + std::to_string(n) + "; ";
      }
      if (gl.expected_dims && (gl.expected_dims->first != dl || gl.expected_dims->second != dr)) {
        ok = false;
        why += "dim^- (" + std::to_string(dl) + "," + std::to_string(dr) + ") differs from (" +
               std::to_string(gl.expected_dims->first) + "," + std::to_string(gl.expected_dims->second) + "); ";
      }
      if (ok)
        lr.detail = "class " + std::to_string(*L) + (gl.right ? " <-> class " + std::to_string(*Rc) : " self-paired") +
                    ", dim^- " + std::to_string(dl) + (gl.right ? "/" + std::to_string(dr) : "");
    }
    lr.pass = ok;
    if (!ok) lr.detail = why;
  });

  // every class appears in the table
  std::set<int> used;
  std::map<int, int> uses;
  for (std::size_t li = 0; li < golden.lines.size(); ++li) {
    std::set<int> line_classes;
    for (int s = 0; s < 2; ++s)
      for (int c : sides[2 * li + static_cast<std::size_t>(s)]) line_classes.insert(c);
    for (int c : line_classes) {
      used.insert(c);
      ++uses[c];
    }
  }
  std::string missing;
  for (std::size_t c = 0; c < table.classes.size(); ++c)
    if (!used.count(static_cast<int>(c))) missing += " " + std::to_string(c);
  rep.checks.push_back({"every class is listed", missing.empty(),
                        missing.empty() ? std::to_string(table.classes.size()) + " classes" : "unlisted classes:" + missing});
  if (golden.distinct_classes) {
    std::string dup;
    for (auto [c, k] : uses)
      if (k > 1) dup += " " + std::to_string(c);
    rep.checks.push_back({"lines name distinct classes", dup.empty(), dup.empty() ? "ok" : "repeated classes:" + dup});
  }
  if (table.involution_count) {
    rep.checks.push_back({"classes cover all involutions", table.coverage_verified,
                          std::to_string(*table.involution_count) + " involutions in a subgroup of order " +
                              std::to_string(table.subgroup_order.value_or(0))});
  }
  bool involutive = table.pairing.size() == table.classes.size();
  for (std::size_t i = 0; involutive && i < table.pairing.size(); ++i)
    involutive = table.pairing[static_cast<std::size_t>(table.pairing[i])] == static_cast<int>(i);
  rep.checks.push_back({"pairing is an involution", involutive, ""});
  rep.table = std::move(table);
  return rep;
}

}  // namespace detail

/// The subgroup a golden table refers to.
inline SubgroupSpec table_subgroup(const RootSystem& R, SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::full: return full_group(R);
    case SubgroupKind::centralizer_of_w0: return centralizer_of_w0(R);
    case SubgroupKind::sigma_fixed: break;
  }
  throw PreconditionError("tables for sigma-fixed subgroups are not supported");
}

inline VerifyReport verify(const GoldenTable& golden, const VerifyOptions& opts = {}) {
  const DiagramType t = golden.type;
  if (t.is_dihedral()) {
    const int n = t.gonality;
    ClassTable table = dihedral::classify(n, golden.kind);
    VerifyReport rep = detail::compare(golden, std::move(table), nullptr, nullptr, n % 2 == 0, opts.classify.threads);
    if (has_exact_realization(t)) {
      // cross-check the symbolic model against the vector realization
      const RootSystem R = RootSystem::build(t);
      const SubgroupSpec spec = table_subgroup(R, golden.kind);
      ClassTable vec = classify_with_pairing(R, spec, opts.classify);
      bool same = vec.classes.size() == rep.table.classes.size() && vec.pairing == rep.table.pairing;
      for (std::size_t c = 0; same && c < vec.classes.size(); ++c)
        same = vec.classes[c].reps == rep.table.classes[c].reps && vec.classes[c].dim_minus == rep.table.classes[c].dim_minus;
      rep.checks.push_back({"symbolic model agrees with the vector realization", same, ""});
    }
    if (n % 2 == 0) {
      const bool computed_swap = n % 4 == 2;
      if (computed_swap != printed_dihedral_swaps(n))
        rep.flags.push_back(std::string("printed table for n = ") + (n % 4 == 0 ? "0" : "2") +
                            " mod 4 shows the reflection classes {1},{2} as " +
                            (printed_dihedral_swaps(n) ? "swapped" : "self-paired") + "; computed: " +
                            (computed_swap ? "swapped" : "self-paired"));
    }
    return rep;
  }
  const RootSystem R = RootSystem::build(t);
  const SubgroupSpec spec = table_subgroup(R, golden.kind);
  ClassTable table = classify_with_pairing(R, spec, opts.classify);
  return detail::compare(golden, std::move(table), &R, &spec, is_minus_one(R, spec.w0), opts.classify.threads);
}

/// Types covered by `verify all`.
inline std::vector<DiagramType> verify_all_types() {
  std::vector<DiagramType> out = {DiagramType::F4(), DiagramType::H(3), DiagramType::H(4),
                                  DiagramType::E(6), DiagramType::E(7), DiagramType::E(8)};
  for (int r = 2; r <= 8; ++r) out.push_back(DiagramType::A(r));
  for (int r = 2; r <= 6; ++r) out.push_back(DiagramType::C(r));
  for (int r = 4; r <= 8; ++r) out.push_back(DiagramType::D(r));
  for (int n = 2; n <= 24; ++n) out.push_back(DiagramType::G2(n));
  return out;
}

}  // namespace coxinv
