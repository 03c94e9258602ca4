#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "latvol/latvol.hpp"

namespace {

using namespace latvol;

bool log_enabled() {
  const char* v = std::getenv("LATVOL_LOG");
  return v != nullptr && *v != '\0';
}

// progress chatter goes to stderr and never changes stdout
void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[latvol] " << msg << "\n";
}

LatticeSimplex load_simplex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open simplex file: " + path);
  json j = json::parse(in);
  return simplex_from_json(j);
}

IntVec parse_point(const std::string& text, unsigned dim) {
  IntVec out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_int(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.size() != dim)
    throw std::invalid_argument("point needs " + std::to_string(dim) +
                                " comma-separated coordinates");
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact volume bounds for lattice simplices with interior points"};
  app.require_subcommand(1);
  int rc = 0;

  // sylvester --upto N
  auto* c_syl = app.add_subcommand("sylvester", "print the Sylvester sequence");
  long syl_upto = 0;
  c_syl->add_option("--upto", syl_upto, "largest index to print")->required();
  c_syl->callback([&] {
    json values = json::array();
    for (long i = 1; i <= syl_upto; ++i) values.push_back(int_to_json(sylvester(i)));
    json j;
    j["upto"] = syl_upto;
    j["values"] = values;
    emit(j);
  });

  // zpw --dim D --k K [--verify]
  auto* c_zpw = app.add_subcommand(
      "zpw", "witness simplex with exactly k interior lattice points");
  long zpw_d = 0, zpw_k = 0;
  bool zpw_verify = false;
  c_zpw->add_option("--dim", zpw_d, "dimension")->required();
  c_zpw->add_option("--k", zpw_k, "interior lattice point count")->required();
  c_zpw->add_flag("--verify", zpw_verify,
                  "recount interior points and recheck the volume formula");
  c_zpw->callback([&] {
    LatticeSimplex s = zpw_simplex(zpw_d, zpw_k);
    json j;
    j["simplex"] = simplex_to_json(s);
    j["volume"] = rat_to_json(volume(s));
    j["normalized_volume"] = int_to_json(normalized_volume(s));
    if (zpw_verify) {
      log_line("recounting interior points");
      auto pts = interior_points(s);
      j["interior_count"] = pts.size();
      j["count_matches"] = (long)pts.size() == zpw_k;
      j["volume_matches"] = volume(s) == zpw_volume(zpw_d, zpw_k);
      if (!j["count_matches"].get<bool>() || !j["volume_matches"].get<bool>())
        rc = 1;
    }
    emit(j);
  });

  // enumerate --simplex FILE
  auto* c_enum =
      app.add_subcommand("enumerate", "list all interior lattice points");
  std::string enum_file;
  c_enum->add_option("--simplex", enum_file, "simplex JSON file")->required();
  c_enum->callback([&] {
    LatticeSimplex s = load_simplex(enum_file);
    auto pts = interior_points(s);
    log_line("found " + std::to_string(pts.size()) + " interior points");
    json arr = json::array();
    for (const IntVec& p : pts) arr.push_back(int_vec_to_json(p));
    json j;
    j["count"] = pts.size();
    j["points"] = arr;
    emit(j);
  });

  // check-ps --simplex FILE [--point "x1,...,xd"]
  auto* c_ps = app.add_subcommand(
      "check-ps", "product-sum inequalities at an interior point");
  std::string ps_file, ps_point;
  c_ps->add_option("--simplex", ps_file, "simplex JSON file")->required();
  c_ps->add_option("--point", ps_point,
                   "interior lattice point (default: max-min point)");
  c_ps->callback([&] {
    LatticeSimplex s = load_simplex(ps_file);
    IntVec x;
    if (ps_point.empty()) {
      x = maxmin_point(s).point;
      log_line("using the max-min interior point");
    } else {
      x = parse_point(ps_point, s.dimension());
      if (!is_interior(s, x))
        throw std::domain_error("point is not an interior lattice point");
    }
    SortedBarycentric sb = sort_descending(barycentric(s, x));
    json j;
    j["point"] = int_vec_to_json(x);
    j["beta"] = beta_to_json(sb.beta);
    j["plain"] = ps_report_to_json(check_product_sum(sb.beta));
    j["generalized"] = ps_report_to_json(check_generalized(sb.beta));
    emit(j);
  });

  // improve --simplex FILE --point "x1,...,xd"
  auto* c_imp = app.add_subcommand(
      "improve", "one improvement step towards a larger minimum coordinate");
  std::string imp_file, imp_point;
  c_imp->add_option("--simplex", imp_file, "simplex JSON file")->required();
  c_imp->add_option("--point", imp_point, "interior lattice point")->required();
  c_imp->callback([&] {
    LatticeSimplex s = load_simplex(imp_file);
    IntVec x = parse_point(imp_point, s.dimension());
    auto w = improve_point(s, x);
    json j;
    j["improved"] = w.has_value();
    if (w)
      j["witness"] = witness_to_json(*w);
    else
      j["message"] = "already-satisfies";
    emit(j);
  });

  // tau --dim D [--tolerance P/Q] [--grid N]
  auto* c_tau = app.add_subcommand(
      "tau", "certified lower bound for the objective minimum");
  long tau_d = 0, tau_grid = 0;
  std::string tau_tol;
  c_tau->add_option("--dim", tau_d, "dimension")->required();
  c_tau->add_option("--tolerance", tau_tol,
                    "certification tolerance as a rational p/q");
  c_tau->add_option("--grid", tau_grid,
                    "also scan the grid with this many steps");
  c_tau->callback([&] {
    if (tau_d < 1) throw std::domain_error("tau: --dim must be >= 1");
    Rat tol = tau_tol.empty() ? default_tau_tolerance() : parse_rat(tau_tol);
    log_line("minimizing over " + std::to_string(tau_d) + " windows");
    TauResult r = tau_lower_bound((unsigned)tau_d, tol);
    json j = tau_to_json(r);
    if (tau_grid > 0) {
      log_line("grid scan with " + std::to_string(tau_grid) + " steps");
      GridOracleResult g = grid_oracle((unsigned)tau_d, (unsigned)tau_grid);
      json gj;
      gj["min_objective"] = rat_to_json(g.min_objective);
      gj["argmin"] = beta_to_json(g.argmin);
      gj["feasible_count"] = g.feasible_count;
      gj["grid_count"] = g.grid_count;
      j["grid"] = gj;
    }
    emit(j);
  });

  // bounds --dim D --k K [--format csv|json]
  auto* c_bnd = app.add_subcommand(
      "bounds", "volume bounds and comparison values for given d and k");
  long bnd_d = 0;
  std::string bnd_k, bnd_format = "json";
  c_bnd->add_option("--dim", bnd_d, "dimension")->required();
  c_bnd->add_option("--k", bnd_k, "interior lattice point count")->required();
  c_bnd->add_option("--format", bnd_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  c_bnd->callback([&] {
    if (bnd_d < 1) throw std::domain_error("bounds: --dim must be >= 1");
    BoundsReport rep = make_bounds_report((unsigned)bnd_d, parse_int(bnd_k));
    if (bnd_format == "csv")
      std::cout << bounds_to_csv(rep);
    else
      emit(bounds_to_json(rep));
  });

  // verify-all [--max-dim D] [--seed S] [--budget B]
  auto* c_ver = app.add_subcommand(
      "verify-all", "re-derive frozen values and replay structural checks");
  VerifyConfig vcfg;
  c_ver->add_option("--max-dim", vcfg.max_dim, "largest corpus dimension");
  c_ver->add_option("--seed", vcfg.seed, "corpus seed");
  c_ver->add_option("--budget", vcfg.corpus_budget, "corpus size");
  c_ver->add_flag("--selftest-corrupt", vcfg.corrupt_oracle_selftest,
                  "deliberately break one oracle to prove failures are caught");
  c_ver->callback([&] {
    VerifyAllReport rep = verify_all(vcfg);
    for (const CheckResult& c : rep.checks)
      log_line(c.name + (c.pass ? ": ok" : ": FAILED " + c.witness));
    emit(verify_to_json(rep));
    if (!rep.all_pass) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
