#include "qtorus/json_io.hpp"

#include <stdexcept>

#include "qtorus/gl_realization.hpp"
#include "qtorus/lattice.hpp"

namespace qtorus {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("rational: expected integer or \"p/q\" string");
}

json cyc_to_json(const CycScalar& c) {
  if (c.is_rational()) return rational_to_json(c.rational_value());
  json coeffs = json::array();
  for (const Rational& r : c.coeffs()) coeffs.push_back(rational_to_json(r));
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

CycScalar cyc_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return CycScalar(rational_from_json(j));
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw std::invalid_argument("cyclotomic: expected rational or {order, coeffs}");
  long long order = j.at("order").get<long long>();
  CycScalar zeta = CycScalar::zeta(order);
  CycScalar out(0);
  long long i = 0;
  for (const json& c : j.at("coeffs")) out += CycScalar(rational_from_json(c)) * zeta.pow(i++);
  return out;
}

QMatrix q_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("entries") : j;
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("q: expected a nonempty entry matrix");
  const long long d = static_cast<long long>(rows.size());
  CycMat entries(d, d);
  for (long long i = 0; i < d; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != d)
      throw std::invalid_argument("q: entry matrix must be square");
    for (long long k = 0; k < d; ++k) {
      const json& e = row[static_cast<size_t>(k)];
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("q: entries are [num, den] root-of-unity pairs");
      entries(i, k) = CycScalar::root_of_unity(e[0].get<long long>(), e[1].get<long long>());
    }
  }
  return QMatrix(std::move(entries));
}

json q_to_json(const QMatrix& q) {
  json rows = json::array();
  for (long long i = 0; i < q.dim(); ++i) {
    json row = json::array();
    for (long long k = 0; k < q.dim(); ++k) {
      auto re = q.entries()(i, k).as_root_exponent();
      row.push_back(json::array({re->first, re->second}));
    }
    rows.push_back(row);
  }
  return json{{"entries", rows}};
}

namespace {

json intvec_to_json(const IntVec& v) {
  json out = json::array();
  for (long long i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json intmat_cols_to_json(const IntMat& m) {
  json out = json::array();
  for (long long c = 0; c < m.cols(); ++c) out.push_back(intvec_to_json(m.col(c)));
  return out;
}

}  // namespace

json analyze_report(const QMatrix& q) {
  RadicalData rad = radical_basis(q);
  auto [q_std, p] = normalize_q(q);
  json delta = json::array();
  for (const IntVec& v : rad.delta) delta.push_back(intvec_to_json(v));
  return json{{"schema", 1},
              {"command", "analyze"},
              {"d", q.dim()},
              {"level", q.level()},
              {"xi_basis", intmat_cols_to_json(rad.xi_basis)},
              {"k", rad.invariants_k},
              {"z", rad.z},
              {"N", rad.n_value},
              {"gamma_order", rad.gamma_order()},
              {"delta", delta},
              {"normal_form", q.is_normal_form()},
              {"q_std", q_to_json(q_std)},
              {"P", intmat_cols_to_json(p)}};
}

GradedGlModule w_from_json(const json& j, const QMatrix& q, const RadicalData& rad) {
  GradedGlModule w;
  w.n_size = j.at("N").get<long long>();
  w.dim = j.at("dim").get<long long>();
  w.grading = j.at("grading").get<std::vector<long long>>();
  for (const json& a : j.at("action")) {
    const json& degj = a.at("degree");
    IntVec deg(q.dim());
    for (long long i = 0; i < q.dim(); ++i) deg[i] = degj.at(static_cast<size_t>(i)).get<long long>();
    const json& mj = a.at("matrix");
    CycMat m(w.dim, w.dim);
    for (long long r = 0; r < w.dim; ++r)
      for (long long c = 0; c < w.dim; ++c)
        m(r, c) = cyc_from_json(mj.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)));
    w.action[rad.reduce(deg)] = m;
  }
  w.validate(rad);
  return w;
}

ModuleDescriptor descriptor_from_json(const QMatrix& q, const json& module) {
  RadicalData rad = radical_basis(q);
  const json& vj = module.at("V");
  std::vector<long long> lambda;
  if (vj.contains("lambda")) lambda = vj.at("lambda").get<std::vector<long long>>();
  CycScalar b(vj.contains("b") ? rational_from_json(vj.at("b")) : Rational(0));
  GlDModule v = young_module(lambda, q.dim(), b);

  GradedGlModule w;
  const json& wj = module.at("W");
  if (wj.is_string() && wj.get<std::string>() == "left-regular") {
    w = left_regular_module(q, rad);
  } else if (wj.is_object()) {
    w = w_from_json(wj, q, rad);
  } else {
    throw std::invalid_argument("W: expected \"left-regular\" or a module object");
  }

  const json& aj = module.at("alpha");
  if (static_cast<long long>(aj.size()) != q.dim())
    throw std::invalid_argument("alpha: length must equal d");
  CycVec alpha(q.dim());
  for (long long i = 0; i < q.dim(); ++i)
    alpha[i] = CycScalar(rational_from_json(aj.at(static_cast<size_t>(i))));

  ModuleDescriptor desc(q, std::move(v), std::move(w), std::move(alpha));
  if (module.contains("fault")) desc.fault = module.at("fault").get<int>();
  return desc;
}

CliConfig config_from_json(const json& j) {
  if (j.contains("schema") && j.at("schema").get<long long>() != 1)
    throw std::invalid_argument("config: unsupported schema version");
  CliConfig cfg;
  cfg.q = j.at("q");
  if (j.contains("module")) cfg.module = j.at("module");
  if (j.contains("suites")) cfg.suites = j.at("suites").get<std::vector<std::string>>();
  if (j.contains("window")) cfg.window = j.at("window").get<long long>();
  if (cfg.window < 1) throw std::invalid_argument("config: window must be >= 1");
  if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned long long>();
  if (j.contains("fault")) cfg.fault = j.at("fault").get<int>();
  return cfg;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qtorus
