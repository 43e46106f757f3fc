#include "rootpoly/json_io.hpp"

#include <fstream>

namespace rootpoly {

json qvec_to_json(const QVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(to_string(x));
  return out;
}

QVec qvec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rational strings");
  QVec out;
  for (const auto& e : j) {
    if (e.is_number_integer())
      out.emplace_back(static_cast<long>(e.get<long long>()));
    else
      out.push_back(parse_rat(e.get<std::string>()));
  }
  return out;
}

json ivec_to_json(const IVec& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(to_string(x));
  return out;
}

json lattice_to_json(const Lattice& L) {
  json basis = json::array();
  for (const QVec& row : L.basis) basis.push_back(qvec_to_json(row));
  return json{{"ambient_dim", L.ambient_dim}, {"basis", basis}};
}

Lattice lattice_from_json(const json& j) {
  size_t amb = j.at("ambient_dim").get<size_t>();
  std::vector<QVec> rows;
  for (const auto& r : j.at("basis")) rows.push_back(qvec_from_json(r));
  return Lattice(amb, std::move(rows));
}

json polytope_to_json(const Polytope& P) {
  json verts = json::array();
  for (const QVec& v : P.vertices) verts.push_back(qvec_to_json(P.M.to_ambient(v)));
  return json{{"lattice", lattice_to_json(P.M)}, {"vertices", verts}};
}

Polytope polytope_from_json(const json& j) {
  Lattice M = lattice_from_json(j.at("lattice"));
  if (j.contains("vertices")) {
    std::vector<QVec> pts;
    for (const auto& v : j.at("vertices")) {
      QVec ambient = qvec_from_json(v);
      auto c = M.coords(ambient);
      if (!c) throw std::invalid_argument("polytope vertex outside the span of the lattice");
      pts.push_back(*c);
    }
    return from_vertices(pts, M);
  }
  if (j.contains("inequalities")) {
    std::vector<Halfspace> hs;
    for (const auto& ineq : j.at("inequalities")) {
      QVec ambient = qvec_from_json(ineq.at("normal"));
      // Normal given in ambient N coordinates; convert to the covector of
      // the M basis.
      IVec w(M.rank());
      for (size_t i = 0; i < M.rank(); ++i) {
        Rat p = dot(M.basis[i], ambient);
        if (!is_integral(p)) throw std::invalid_argument("inequality normal does not pair integrally with M");
        w[i] = p.get_num();
      }
      Rat off = ineq.at("offset").is_number_integer() ? Rat(static_cast<long>(ineq.at("offset").get<long long>()))
                                                      : parse_rat(ineq.at("offset").get<std::string>());
      hs.push_back(Halfspace{std::move(w), off});
    }
    return from_inequalities(hs, M);
  }
  throw std::invalid_argument("polytope JSON needs 'vertices' or 'inequalities'");
}

Polytope polytope_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open polytope file '" + path + "'");
  json j = json::parse(in);
  return polytope_from_json(j);
}

json split_report_to_json(const SplitReport& rep) {
  json missing = json::array();
  for (const ResidueClassIndex& c : rep.missing) missing.push_back(c.coords);
  json witnesses = json::object();
  for (const auto& [cls, z] : rep.witnesses) {
    json key = json(cls.coords).dump();
    json pt = json::array();
    for (const Int& zi : z) {
      Rat c(zi, rep.q);
      c.canonicalize();
      pt.push_back(to_string(c));
    }
    witnesses[key.get<std::string>()] = pt;
  }
  return json{{"q", rep.q},
              {"covered", to_string(rep.covered)},
              {"total", to_string(rep.total)},
              {"split", rep.split},
              {"missing", missing},
              {"witnesses", witnesses}};
}

json quasipolynomial_to_json(const Quasipolynomial& Q) {
  json comps = json::array();
  for (const auto& poly : Q.components) {
    json c = json::array();
    for (const Rat& x : poly) c.push_back(to_string(x));
    comps.push_back(c);
  }
  return json{{"period", Q.period}, {"components", comps}};
}

json normality_report_to_json(const NormalityReport& rep) {
  json j{{"normal_up_to", rep.m_max}, {"normal", rep.normal}};
  if (!rep.normal) {
    j["fail_degree"] = rep.fail_degree;
    j["witness"] = ivec_to_json(rep.witness);
  }
  return j;
}

json quadratic_report_to_json(const QuadraticReport& rep) {
  json j{{"checked_up_to", rep.m_max}, {"quadratically_generated", rep.ok}};
  if (!rep.ok) {
    j["fail_degree"] = rep.fail_degree;
    j["witness"] = ivec_to_json(rep.witness);
  }
  return j;
}

json koszul_report_to_json(const KoszulReport& rep) {
  json j{{"checked_up_to", rep.j_max}, {"koszul", rep.ok}};
  if (!rep.ok) {
    j["fail_degree"] = rep.fail_j;
    j["fail_homological_index"] = rep.fail_i;
    j["witness"] = ivec_to_json(rep.witness);
  }
  return j;
}

}  // namespace rootpoly
