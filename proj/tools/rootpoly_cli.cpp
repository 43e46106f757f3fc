#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "rootpoly/json_io.hpp"
#include "rootpoly/paper_checks.hpp"
#include "rootpoly/splitting.hpp"

using namespace rootpoly;

namespace {

constexpr int EXIT_PROPERTY_FAIL = 1;
constexpr int EXIT_INPUT_ERROR = 2;

void emit(const json& j, const std::string& out_path) {
  std::string text = j.dump(2);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text << "\n";
  }
}

std::string poly_str(const std::vector<Rat>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0 && !(first && k == 0)) continue;
    if (!first) os << (coeffs[k] > 0 ? " + " : " - ");
    Rat c = first ? coeffs[k] : Rat(abs(coeffs[k].get_num()), coeffs[k].get_den());
    if (k == 0 || c != 1) os << c.get_str() << (k > 0 ? "*" : "");
    if (k > 0) os << "q";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

int cmd_rootsys(const std::string& spec, const std::string& out_path) {
  RootSystem rs = parse_root_system(spec);
  json j;
  j["name"] = rs.name;
  j["rank"] = rs.rank;
  j["root_count"] = rs.roots.size();
  j["roots"] = json::array();
  for (const QVec& r : rs.roots) j["roots"].push_back(qvec_to_json(r));
  j["N"] = lattice_to_json(rs.N);
  j["M"] = lattice_to_json(rs.M);
  emit(j, out_path);
  return 0;
}

int cmd_polytope(const std::string& path, const std::string& other_path, bool do_minkowski, bool do_cayley,
                 bool do_faces, const std::string& rs_spec, const std::string& out_path) {
  Polytope P = polytope_from_file(path);
  json j;
  int rc = 0;
  if (do_minkowski || do_cayley) {
    if (other_path.empty()) throw std::invalid_argument("--with FILE required for --minkowski / --cayley");
    Polytope Q = polytope_from_file(other_path);
    Polytope R = do_minkowski ? minkowski_sum({P, Q}) : cayley_sum({P, Q});
    j = polytope_to_json(R);
  } else {
    j = polytope_to_json(P);
  }
  if (do_faces) {
    j["faces"] = json::array();
    for (const Polytope& F : proper_faces(P)) j["faces"].push_back(polytope_to_json(F));
  }
  if (!rs_spec.empty()) {
    RootSystem rs = parse_root_system(rs_spec);
    CutOutReport rep = is_cut_out(P, rs);
    j["cut_out_by"] = rs.name;
    j["cut_out"] = rep.ok;
    if (!rep.ok) rc = EXIT_PROPERTY_FAIL;
  }
  emit(j, out_path);
  return rc;
}

int cmd_check_split(const std::string& path, const std::string& rs_spec, bool normals_from_roots, long q,
                    const std::string& out_path) {
  if (q < 2) throw std::invalid_argument("--q must be at least 2");
  SplittingPolytope sp = [&] {
    if (normals_from_roots || path.empty()) {
      if (rs_spec.empty()) throw std::invalid_argument("need --polytope or --root-system");
      return splitting_polytope(parse_root_system(rs_spec));
    }
    Polytope P = polytope_from_file(path);
    if (!rs_spec.empty()) {
      CutOutReport rep = is_cut_out(P, parse_root_system(rs_spec));
      if (!rep.ok) throw std::invalid_argument("polytope is not cut out by " + rs_spec);
    }
    return splitting_polytope(P);
  }();
  SplitReport rep = is_diagonally_split(sp, q);
  emit(split_report_to_json(rep), out_path);
  return rep.split ? 0 : EXIT_PROPERTY_FAIL;
}

int cmd_ehrhart(const std::string& path, long qmax, const std::string& out_path) {
  Polytope P = polytope_from_file(path);
  Quasipolynomial Q = fit_quasipolynomial(P);
  json j = quasipolynomial_to_json(Q);
  j["counts"] = json::array();
  for (long q = 1; q <= qmax; ++q) j["counts"].push_back(ehrhart_count(P, q).get_str());
  j["pretty"] = json::array();
  for (const auto& comp : Q.components) j["pretty"].push_back(poly_str(comp));
  emit(j, out_path);
  return 0;
}

int cmd_normality(const std::string& path, long max_degree, const std::string& out_path) {
  Polytope P = polytope_from_file(path);
  int m = max_degree > 0 ? static_cast<int>(max_degree)
                         : std::max(2, static_cast<int>(P.dim) - 1);
  NormalityReport rep = check_normality(P, m);
  emit(normality_report_to_json(rep), out_path);
  return rep.normal ? 0 : EXIT_PROPERTY_FAIL;
}

int cmd_quadratic(const std::string& path, long max_degree, const std::string& out_path) {
  Polytope P = polytope_from_file(path);
  int m = max_degree > 0 ? static_cast<int>(max_degree) : 3;
  if (m < 3) throw std::invalid_argument("--max-degree must be at least 3");
  QuadraticReport rep = check_quadratic_generation(P, m);
  emit(quadratic_report_to_json(rep), out_path);
  return rep.ok ? 0 : EXIT_PROPERTY_FAIL;
}

int cmd_koszul(const std::string& path, long max_degree, const std::string& out_path) {
  Polytope P = polytope_from_file(path);
  int j_max = max_degree > 0 ? static_cast<int>(max_degree) : 4;
  if (j_max < 2) throw std::invalid_argument("--max-degree must be at least 2");
  KoszulReport rep = check_koszul_up_to(P, j_max);
  emit(koszul_report_to_json(rep), out_path);
  return rep.ok ? 0 : EXIT_PROPERTY_FAIL;
}

int cmd_verify_paper(const std::string& only, const std::string& out_path) {
  std::vector<CheckResult> results = run_paper_checks(only);
  json j = json::array();
  bool all = true;
  for (const CheckResult& r : results) {
    std::printf("[%s] %2d %-24s expected: %s\n                              computed: %s  (%.2fs)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.expected.c_str(), r.computed.c_str(),
                r.seconds);
    j.push_back({{"id", r.id},
                 {"name", r.name},
                 {"expected", r.expected},
                 {"computed", r.computed},
                 {"pass", r.pass},
                 {"seconds", r.seconds}});
    all = all && r.pass;
  }
  if (results.empty()) {
    std::printf("no checks matched filter '%s'\n", only.c_str());
    return EXIT_INPUT_ERROR;
  }
  std::printf("%s\n", all ? "all checks pass" : "FAILURES PRESENT");
  if (!out_path.empty()) emit(j, out_path);
  return all ? 0 : EXIT_PROPERTY_FAIL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice-polytope toolkit: diagonal splitting, Ehrhart counts, and semigroup certificates"};
  app.require_subcommand(1);

  std::string polytope_path, other_path, rs_spec, json_out, only;
  long q = 0, qmax = 4, max_degree = 0;
  bool normals_from_roots = false, do_minkowski = false, do_cayley = false, do_faces = false;

  auto add_common = [&](CLI::App* sub, bool needs_poly) {
    auto* opt = sub->add_option("--polytope", polytope_path, "polytope JSON file");
    if (needs_poly) opt->required();
    sub->add_option("--json", json_out, "write the JSON report to this file");
  };

  auto* s_rootsys = app.add_subcommand("rootsys", "print a root system: roots, lattices, counts");
  s_rootsys->add_option("--root-system", rs_spec, "system spec, e.g. A3, F4, A2xB2")->required();
  s_rootsys->add_option("--json", json_out, "write the JSON report to this file");

  auto* s_poly = app.add_subcommand("polytope", "convert representations; Minkowski/Cayley sums; faces; cut-out test");
  add_common(s_poly, true);
  s_poly->add_option("--with", other_path, "second polytope for --minkowski / --cayley");
  s_poly->add_flag("--minkowski", do_minkowski, "Minkowski sum with --with");
  s_poly->add_flag("--cayley", do_cayley, "Cayley sum with --with");
  s_poly->add_flag("--faces", do_faces, "list all proper faces");
  s_poly->add_option("--root-system", rs_spec, "test whether the polytope is cut out by this system");

  auto* s_split = app.add_subcommand("check-split", "decide diagonal splitting for a given q");
  add_common(s_split, false);
  s_split->add_option("--root-system", rs_spec, "root system spec");
  s_split->add_flag("--normals-from-roots", normals_from_roots, "build the splitting polytope from the full root set");
  s_split->add_option("--q", q, "splitting parameter q >= 2")->required();

  auto* s_ehr = app.add_subcommand("ehrhart", "fit and print the Ehrhart quasipolynomial");
  add_common(s_ehr, true);
  s_ehr->add_option("--qmax", qmax, "also print counts for q = 1..qmax");

  auto* s_norm = app.add_subcommand("normality", "check normality up to a degree bound");
  add_common(s_norm, true);
  s_norm->add_option("--max-degree", max_degree, "bound m (default max(2, dim-1))");

  auto* s_quad = app.add_subcommand("quadratic", "check quadratic generation via fiber graphs");
  add_common(s_quad, true);
  s_quad->add_option("--max-degree", max_degree, "bound m >= 3 (default 3)");

  auto* s_kos = app.add_subcommand("koszul", "check the Koszul property up to a degree bound");
  add_common(s_kos, true);
  s_kos->add_option("--max-degree", max_degree, "bound j >= 2 (default 4)");

  auto* s_verify = app.add_subcommand("verify-paper", "replay every reference computation and report pass/fail");
  s_verify->add_option("--only", only, "run only checks whose name contains this substring");
  s_verify->add_option("--json", json_out, "write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? EXIT_INPUT_ERROR : 0;
  }

  try {
    if (s_rootsys->parsed()) return cmd_rootsys(rs_spec, json_out);
    if (s_poly->parsed())
      return cmd_polytope(polytope_path, other_path, do_minkowski, do_cayley, do_faces, rs_spec, json_out);
    if (s_split->parsed()) return cmd_check_split(polytope_path, rs_spec, normals_from_roots, q, json_out);
    if (s_ehr->parsed()) return cmd_ehrhart(polytope_path, qmax, json_out);
    if (s_norm->parsed()) return cmd_normality(polytope_path, max_degree, json_out);
    if (s_quad->parsed()) return cmd_quadratic(polytope_path, max_degree, json_out);
    if (s_kos->parsed()) return cmd_koszul(polytope_path, max_degree, json_out);
    if (s_verify->parsed()) return cmd_verify_paper(only, json_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_INPUT_ERROR;
  }
  return EXIT_INPUT_ERROR;
}
