#include "jgk/json_io.hpp"

namespace jgk {

json rat_to_json(const Rat& r) {
  json pair = json::array();
  if (r.is_small()) {
    pair.push_back(r.small_num());
    pair.push_back(r.small_den());
  } else {
    pair.push_back(r.num_string());
    pair.push_back(r.den_string());
  }
  return pair;
}

Rat rat_from_json(const json& j) {
  require(j.is_array() && j.size() == 2, "json: rational must be a [num, den] pair");
  auto part = [](const json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    require(v.is_number_integer(), "json: rational parts must be integers or strings");
    return std::to_string(v.get<long long>());
  };
  return Rat::from_decimal_strings(part(j[0]), part(j[1]));
}

json cyc_to_json(const Cyc& a) {
  json j;
  j["m"] = a.conductor();
  json coeffs = json::array();
  for (int k = 0; k < phi_of(a.conductor()); ++k) coeffs.push_back(rat_to_json(a.coeff(k)));
  j["c"] = coeffs;
  return j;
}

Cyc cyc_from_json(const json& j) {
  int m = j.at("m").get<int>();
  const json& coeffs = j.at("c");
  require(coeffs.is_array() && coeffs.size() == static_cast<std::size_t>(phi_of(m)),
          "json: field element needs phi(m) coefficients");
  std::vector<Rat> raw(static_cast<std::size_t>(m));
  for (int k = 0; k < phi_of(m); ++k) raw[static_cast<std::size_t>(k)] = rat_from_json(coeffs[static_cast<std::size_t>(k)]);
  return Cyc::make(m, raw);
}

namespace {

json svec_to_json(const SVec& v) {
  json out = json::array();
  for (const auto& [k, c] : v) {
    json pair = json::array();
    pair.push_back(k);
    pair.push_back(cyc_to_json(c));
    out.push_back(std::move(pair));
  }
  return out;
}

SVec svec_from_json(const json& j) {
  SVec v;
  for (const auto& e : j) v.emplace_back(e.at(0).get<int>(), cyc_from_json(e.at(1)));
  return v;
}

}  // namespace

json algebra_to_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  j["m"] = L.conductor();
  json brackets = json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int k = i + 1; k < L.dim(); ++k) {
      const SVec& v = L.bracket_table(i, k);
      if (v.empty()) continue;
      json entry;
      entry["i"] = i;
      entry["j"] = k;
      entry["v"] = svec_to_json(v);
      brackets.push_back(std::move(entry));
    }
  j["brackets"] = brackets;
  json labels = json::array();
  for (const auto& s : L.labels) labels.push_back(s);
  j["labels"] = labels;
  return j;
}

LieAlgebra algebra_from_json(const json& j) {
  int dim = j.at("dim").get<int>(), m = j.at("m").get<int>();
  LieAlgebra L(dim, m);
  for (const auto& e : j.at("brackets"))
    L.set_bracket(e.at("i").get<int>(), e.at("j").get<int>(), svec_from_json(e.at("v")));
  if (j.contains("labels"))
    for (const auto& s : j.at("labels")) L.labels.push_back(s.get<std::string>());
  return L;
}

json degrees_to_json(int p, const std::vector<int>& deg) {
  json j;
  j["p"] = p;
  j["deg"] = deg;
  return j;
}

std::pair<int, std::vector<int>> degrees_from_json(const json& j) {
  return {j.at("p").get<int>(), j.at("deg").get<std::vector<int>>()};
}

json grading_to_json(const Grading& G, int ambient, int cond) {
  json j;
  j["p"] = G.p;
  j["r"] = G.r;
  j["m"] = cond;
  j["dim"] = ambient;
  json comps = json::array();
  for (const auto& [alpha, S] : G.components) {
    json c;
    c["alpha"] = alpha;
    json rows = json::array();
    for (const auto& v : S.basis) rows.push_back(svec_to_json(v));
    c["basis"] = rows;
    comps.push_back(std::move(c));
  }
  j["components"] = comps;
  return j;
}

Grading grading_from_json(const json& j, int* ambient, int* cond) {
  Grading G;
  G.p = j.at("p").get<int>();
  G.r = j.at("r").get<int>();
  int amb = j.at("dim").get<int>(), m = j.at("m").get<int>();
  if (ambient) *ambient = amb;
  if (cond) *cond = m;
  for (const auto& c : j.at("components")) {
    std::vector<SVec> rows;
    for (const auto& rv : c.at("basis")) rows.push_back(svec_from_json(rv));
    G.components.emplace(c.at("alpha").get<std::vector<int>>(),
                         Subspace::from_rows(amb, m, rows));
  }
  return G;
}

json certificate_to_json(const Certificate& c) {
  json j;
  json checks = json::array();
  for (const auto& ch : c.checks) {
    json e;
    e["name"] = ch.name;
    e["pass"] = ch.pass;
    e["witness"] = ch.witness.empty() ? json() : json(ch.witness);
    e["count"] = ch.count;
    checks.push_back(std::move(e));
  }
  j["checks"] = checks;
  json dims;
  for (const auto& [k, v] : c.dims) dims[k] = v;
  j["dims"] = dims;
  j["seed"] = c.seed;
  j["elapsed_ms"] = c.elapsed_ms;
  return j;
}

json matrix_to_json(const Mat& M) {
  json j;
  j["rows"] = M.rows;
  j["cols"] = M.cols;
  j["m"] = M.m;
  json entries = json::array();
  for (int i = 0; i < M.rows; ++i)
    for (const auto& [k, c] : M.row[static_cast<std::size_t>(i)]) {
      json e = json::array();
      e.push_back(i);
      e.push_back(k);
      e.push_back(cyc_to_json(c));
      entries.push_back(std::move(e));
    }
  j["entries"] = entries;
  return j;
}

Mat matrix_from_json(const json& j) {
  Mat M(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("m").get<int>());
  for (const auto& e : j.at("entries"))
    M.set(e.at(0).get<int>(), e.at(1).get<int>(), cyc_from_json(e.at(2)));
  return M;
}

json subspace_to_json(const Subspace& S) {
  json rows = json::array();
  for (const auto& v : S.basis) rows.push_back(svec_to_json(v));
  return rows;
}

Subspace subspace_from_json(const json& j, int ambient, int cond) {
  std::vector<SVec> rows;
  for (const auto& rv : j) rows.push_back(svec_from_json(rv));
  return Subspace::from_rows(ambient, cond, rows);
}

}  // namespace jgk
