#pragma once

#include <json.hpp>

#include "latvol/tau.hpp"
#include "latvol/bounds.hpp"
#include "latvol/prodsum.hpp"
#include "latvol/verify.hpp"

// JSON (and CSV) serialization.  Rationals are rendered as canonical "p/q"
// strings so every value survives a round trip exactly; integers become JSON
// numbers while they fit in 64 bits and decimal strings beyond that.
// nlohmann::json keeps object keys sorted, so dumps are byte-deterministic.

namespace latvol {

using nlohmann::json;

inline json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

inline json rat_to_json(const Rat& v) { return json(to_string(v)); }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("expected a rational \"p/q\" string");
}

inline json int_vec_to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& c : v) a.push_back(int_to_json(c));
  return a;
}

inline json rat_vec_to_json(const std::vector<Rat>& v) {
  json a = json::array();
  for (const Rat& c : v) a.push_back(rat_to_json(c));
  return a;
}

inline json simplex_to_json(const LatticeSimplex& s) {
  json j;
  j["dimension"] = s.dimension();
  json verts = json::array();
  for (const IntVec& v : s.vertices()) verts.push_back(int_vec_to_json(v));
  j["vertices"] = verts;
  return j;
}

inline LatticeSimplex simplex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dimension") || !j.contains("vertices"))
    throw std::invalid_argument(
        "simplex JSON needs \"dimension\" and \"vertices\"");
  if (!j["dimension"].is_number_integer() || j["dimension"].get<long>() < 1)
    throw std::invalid_argument("\"dimension\" must be a positive integer");
  unsigned d = j["dimension"].get<unsigned>();
  if (!j["vertices"].is_array() || j["vertices"].size() != d + 1)
    throw std::invalid_argument("\"vertices\" must list dimension+1 points");
  std::vector<IntVec> verts;
  for (const json& vj : j["vertices"]) {
    if (!vj.is_array() || vj.size() != d)
      throw std::invalid_argument("each vertex needs dimension coordinates");
    IntVec v;
    for (const json& c : vj) v.push_back(int_from_json(c));
    verts.push_back(std::move(v));
  }
  return LatticeSimplex(d, std::move(verts));
}

inline json beta_to_json(const BetaVector& b) {
  json a = json::array();
  for (std::size_t i = 0; i < b.size(); ++i) a.push_back(rat_to_json(b[i]));
  return a;
}

inline BetaVector beta_from_json(const json& j, bool expect_sorted = false) {
  if (!j.is_array()) throw std::invalid_argument("beta must be an array");
  std::vector<Rat> v;
  for (const json& c : j) v.push_back(rat_from_json(c));
  return BetaVector(std::move(v), expect_sorted);
}

inline json ps_report_to_json(const PsCheckReport& rep) {
  json entries = json::array();
  for (const PsCheckEntry& e : rep.entries) {
    json je;
    je["t"] = e.t;
    je["lhs"] = rat_to_json(e.lhs);
    je["rhs"] = rat_to_json(e.rhs);
    je["holds"] = e.holds;
    je["tight"] = e.tight;
    entries.push_back(je);
  }
  json j;
  j["entries"] = entries;
  j["all_hold"] = rep.all_hold();
  j["first_violation"] = rep.first_violation();
  return j;
}

inline json maxmin_to_json(const MaxMinResult& m) {
  json j;
  j["point"] = int_vec_to_json(m.point);
  j["beta"] = beta_to_json(m.beta);
  j["gamma"] = rat_to_json(m.gamma);
  return j;
}

inline json witness_to_json(const ImprovementWitness& w) {
  json j;
  j["t"] = w.t;
  j["m"] = int_to_json(w.m);
  j["m_parts"] = int_vec_to_json(w.m_parts);
  j["r"] = rat_vec_to_json(w.r);
  j["q"] = int_vec_to_json(w.q);
  j["old_gamma"] = rat_to_json(w.old_gamma);
  j["new_gamma"] = rat_to_json(w.new_gamma);
  return j;
}

inline json feasibility_to_json(const FeasibilityReport& rep) {
  json j;
  j["feasible"] = rep.feasible;
  j["sum_is_one"] = rep.sum_is_one;
  j["nonneg"] = to_string(rep.nonneg);
  json ord = json::array(), ps = json::array();
  for (ConstraintStatus s : rep.ord) ord.push_back(to_string(s));
  for (ConstraintStatus s : rep.ps) ps.push_back(to_string(s));
  j["ord"] = ord;
  j["ps"] = ps;
  return j;
}

inline json tau_to_json(const TauResult& r) {
  json j;
  j["d"] = r.d;
  j["lower_bound"] = rat_to_json(r.lower_bound);
  j["attaining_ell"] = r.attaining_ell;
  j["attaining_beta"] = beta_to_json(r.attaining_beta);
  j["is_exact"] = r.is_exact;
  return j;
}

inline json bounds_to_json(const BoundsReport& rep) {
  json j;
  j["d"] = rep.d;
  j["k"] = int_to_json(rep.k);
  j["zpw_volume"] = rat_to_json(rep.zpw_volume);
  j["thm12"] = rat_to_json(rep.thm12);
  j["ratio"] = rat_to_json(rep.ratio);
  if (rep.thm32) {
    j["thm32"] = rat_to_json(*rep.thm32);
    j["tau_source"] = rep.tau_source;
  }
  j["pikhurko_old"] = rat_to_json(rep.pikhurko_old);
  j["pikhurko_old_log10"] = rep.pikhurko_old_log10;
  j["thm15a"] = rat_to_json(rep.thm15a);
  j["thm15b"] = int_to_json(rep.thm15b);
  j["thm15b_log10"] = rep.thm15b_log10;
  json lit = json::array();
  for (const LiteratureValue& v : rep.literature) {
    json e;
    e["label"] = v.label;
    e["value"] = rat_to_json(v.value);
    lit.push_back(e);
  }
  j["literature"] = lit;
  return j;
}

inline json verify_to_json(const VerifyAllReport& rep) {
  json checks = json::array();
  for (const CheckResult& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    checks.push_back(e);
  }
  json j;
  j["checks"] = checks;
  j["all_pass"] = rep.all_pass;
  j["no_checks_run"] = rep.no_checks_run;
  return j;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}
}  // namespace detail

// Two-column quantity,value table for one (d, k) report.
inline std::string bounds_to_csv(const BoundsReport& rep) {
  std::string out = "quantity,value\n";
  auto row = [&](const std::string& name, const std::string& value) {
    out += detail::csv_field(name) + "," + detail::csv_field(value) + "\n";
  };
  row("dimension", std::to_string(rep.d));
  row("interior_points", rep.k.get_str());
  row("zpw_volume", to_string(rep.zpw_volume));
  row("thm12", to_string(rep.thm12));
  row("ratio", to_string(rep.ratio));
  if (rep.thm32) {
    row("thm32", to_string(*rep.thm32));
    row("tau_source", rep.tau_source);
  }
  row("pikhurko_old", to_string(rep.pikhurko_old));
  row("pikhurko_old_log10", rep.pikhurko_old_log10);
  row("thm15a", to_string(rep.thm15a));
  row("thm15b", rep.thm15b.get_str());
  row("thm15b_log10", rep.thm15b_log10);
  for (const LiteratureValue& v : rep.literature)
    row("literature: " + v.label, to_string(v.value));
  return out;
}

}  // namespace latvol
