#pragma once

// Rendering of class tables, pairings, foldings and verification reports as
// JSON, markdown or plain text. Output depends only on the data, never on timing
// or thread count.

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxinv/error.hpp"
#include "coxinv/folding.hpp"
#include "coxinv/golden.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

enum class Format { json, md, text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "md") return Format::md;
  if (s == "text") return Format::text;
  throw PreconditionError("unknown format '" + s + "'");
}

using Json = nlohmann::ordered_json;

/// Representatives shown in human-readable output: the standard ones when any exist.
inline const std::vector<NodeSet>& display_reps(const InvolutionClass& c) {
  return c.standard_reps.empty() ? c.reps : c.standard_reps;
}

/// {type, spec, classes:[{reps, dim_minus, neg_type}], pairing:[[i,j]]}
inline Json table_json(const ClassTable& t) {
  Json j;
  j["type"] = t.type_name;
  j["spec"] = to_string(t.kind);
  Json classes = Json::array();
  for (const auto& c : t.classes) {
    Json reps = Json::array();
    for (NodeSet I : c.reps) reps.push_back(I.to_string());
    classes.push_back(Json{{"reps", reps}, {"dim_minus", c.dim_minus}, {"neg_type", to_string(c.neg_type)}});
  }
  j["classes"] = classes;
  Json pairing = Json::array();
  for (std::size_t i = 0; i < t.pairing.size(); ++i) pairing.push_back(Json::array({static_cast<int>(i), t.pairing[i]}));
  j["pairing"] = pairing;
  return j;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {
inline std::string md_escape(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}
}  // namespace detail

inline std::string render_classes(const ClassTable& t, Format f) {
  if (f == Format::json) return dump_json(table_json(t));
  std::ostringstream os;
  const std::string head = t.type_name + " in " + to_string(t.kind) + " (" + to_string(t.mode_used) + ")";
  if (f == Format::md) {
    os << "## " << head << "\n\n| # | representatives | dim- | dim+ | -1 roots | +1 roots | size |\n|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
      const auto& c = t.classes[i];
      os << "| " << i << " | " << detail::md_escape(subsets_to_string(c.reps)) << " | " << c.dim_minus << " | "
         << c.dim_plus << " | " << to_string(c.neg_type) << " | " << to_string(c.plus_type) << " | "
         << (c.size ? std::to_string(*c.size) : "") << " |\n";
    }
  } else {
    os << head << ": " << t.classes.size() << " involution classes\n";
    for (std::size_t i = 0; i < t.classes.size(); ++i) {
      const auto& c = t.classes[i];
      os << "  [" << i << "] " << subsets_to_string(c.reps) << "  dim-=" << c.dim_minus << " dim+=" << c.dim_plus
         << "  -1: " << to_string(c.neg_type) << "  +1: " << to_string(c.plus_type);
      if (c.size) os << "  size " << *c.size;
      os << "\n";
    }
  }
  if (t.involution_count)
    os << (f == Format::md ? "\n" : "") << "involutions: " << *t.involution_count << " in a subgroup of order "
       << t.subgroup_order.value_or(0) << ", coverage " << (t.coverage_verified ? "verified" : "FAILED") << "\n";
  return os.str();
}

/// One arrow line per pair of classes, in class order.
inline std::string render_pairing(const ClassTable& t, Format f) {
  if (f == Format::json) return dump_json(table_json(t));
  std::ostringstream os;
  if (f == Format::md) os << "## w_o pairing, " << t.type_name << " in " << to_string(t.kind) << "\n\n";
  else os << "w_o pairing, " << t.type_name << " in " << to_string(t.kind) << "\n";
  int line = 1;
  for (std::size_t i = 0; i < t.pairing.size(); ++i) {
    const auto j = static_cast<std::size_t>(t.pairing[i]);
    if (j < i) continue;
    const std::string left = subsets_to_string(display_reps(t.classes[i]));
    const std::string right = j == i ? "(self)" : subsets_to_string(display_reps(t.classes[j]));
    if (f == Format::md) os << "- (" << line++ << ") `" << left << "` " << (j == i ? "&#8634;" : "&harr; `" + right + "`") << "\n";
    else os << "(" << line++ << ") " << left << (j == i ? "  <->  self" : "  <->  " + right) << "\n";
  }
  return os.str();
}

inline Json folding_json(const Folding& fo) {
  Json j;
  j["type"] = fo.ambient->type().name();
  Json sigma = Json::array();
  for (int s : fo.sigma) sigma.push_back(s + 1);
  j["sigma"] = sigma;
  Json orbits = Json::array();
  for (NodeSet o : fo.orbits) orbits.push_back(o.to_string());
  j["orbits"] = orbits;
  j["folded_type"] = fo.folded_type().name();
  Json gens = Json::array();
  for (const auto& g : fo.generators) {
    Json word = Json::array();
    for (int l : reduced_word(*fo.ambient, g)) word.push_back(l);
    gens.push_back(word);
  }
  j["generator_words"] = gens;
  return j;
}

inline std::string render_folding(const Folding& fo, Format f) {
  if (f == Format::json) return dump_json(folding_json(fo));
  std::ostringstream os;
  const auto& R = *fo.ambient;
  std::string sig;
  for (std::size_t i = 0; i < fo.sigma.size(); ++i) sig += (i ? " " : "") + std::to_string(fo.sigma[i] + 1);
  const std::string bullet = f == Format::md ? "- " : "  ";
  if (f == Format::md) os << "## Folding of " << R.type().name() << "\n\n";
  else os << "folding of " << R.type().name() << "\n";
  os << bullet << "sigma: " << sig << "\n";
  os << bullet << "folded type: " << fo.folded_type().name() << "\n";
  for (std::size_t j = 0; j < fo.orbits.size(); ++j) {
    std::string word;
    for (int l : reduced_word(R, fo.generators[j])) word += (word.empty() ? "" : " ") + std::to_string(l);
    os << bullet << "node " << j + 1 << ": orbit " << fo.orbits[j].to_string() << ", iota(s" << j + 1 << ") = s[" << word
       << "]\n";
  }
  return os.str();
}

inline Json verify_json(const VerifyReport& r) {
  Json j;
  j["type"] = r.type_name;
  j["spec"] = to_string(r.kind);
  j["mode"] = to_string(r.mode);
  j["result"] = r.passed() ? "PASS" : "FAIL";
  Json lines = Json::array();
  for (const auto& l : r.lines)
    lines.push_back(Json{{"line", l.number},
                         {"left", l.left},
                         {"right", l.right},
                         {"result", l.pass ? "PASS" : "FAIL"},
                         {"provenance", l.provenance.to_string()},
                         {"detail", l.detail}});
  j["lines"] = lines;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"check", c.name}, {"result", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  j["checks"] = checks;
  Json flags = Json::array();
  for (const auto& fl : r.flags) flags.push_back(fl);
  j["flags"] = flags;
  return j;
}

inline std::string render_verify(const VerifyReport& r, Format f) {
  if (f == Format::json) return dump_json(verify_json(r));
  std::ostringstream os;
  const std::string head = r.type_name + " in " + to_string(r.kind) + " (" + to_string(r.mode) + "): " +
                           (r.passed() ? "PASS" : "FAIL");
  if (f == Format::md) {
    os << "## " << head << "\n\n| line | left | right | result | provenance | detail |\n|---|---|---|---|---|---|\n";
    for (const auto& l : r.lines)
      os << "| " << l.number << " | " << l.left << " | " << l.right << " | " << (l.pass ? "PASS" : "FAIL") << " | "
         << detail::md_escape(l.provenance.to_string()) << " | " << detail::md_escape(l.detail) << " |\n";
    os << "\n";
    for (const auto& c : r.checks) os << "- " << (c.pass ? "PASS" : "FAIL") << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (const auto& fl : r.flags) os << "- FLAG " << fl << "\n";
  } else {
    os << head << "\n";
    for (const auto& l : r.lines)
      os << "  (" << l.number << ") " << (l.pass ? "PASS" : "FAIL") << "  " << l.left << "  <->  " << l.right << "  ["
         << l.provenance.to_string() << "]  " << l.detail << "\n";
    for (const auto& c : r.checks)
      os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (const auto& fl : r.flags) os << "  FLAG  " << fl << "\n";
  }
  return os.str();
}

}  // namespace coxinv
