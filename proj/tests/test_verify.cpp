#include "doctest.h"

#include "jgk/autos.hpp"
#include "jgk/certify.hpp"
#include "jgk/json_io.hpp"
#include "jgk/util.hpp"

using namespace jgk;

namespace {

Grading grading_of(const LieAlgebra& L, const ModelAutos& autos, int p, const Cyc& zeta) {
  Grading G;
  G.p = p;
  G.r = static_cast<int>(autos.gens.size());
  G.components = grading_from_group(L, autos.gens, p, zeta);
  return G;
}

const OctonionAlgebra& octonions() {
  static OctonionAlgebra O = octonion_algebra();
  return O;
}

}  // namespace

TEST_CASE("trivial grading passes compatibility") {
  LieAlgebra L(3, 1);
  L.set_bracket(0, 1, {{2, Cyc::one(1)}});
  L.set_bracket(0, 2, {{0, Cyc::rational(1, Rat(-2))}});
  L.set_bracket(1, 2, {{1, Cyc::rational(1, Rat(2))}});
  Grading G;
  G.p = 2;
  G.r = 1;
  G.components.emplace(std::vector<int>{0}, Subspace::full(3, 1));
  Check c = grading_compat(L, G);
  CHECK(c.pass);
}

TEST_CASE("permuted class labels fail compatibility with a witness") {
  OperatorAlgebra der = derivation_algebra(octonions().mul);
  ModelAutos autos = octonion_model_autos(der, octonions().deg);
  REQUIRE(autos.status.ok);
  Grading G = grading_of(der.L, autos, 2, Cyc::rational(1, Rat(-1)));
  CHECK(grading_compat(der.L, G).pass);

  // swap two component labels
  Grading broken = G;
  auto it1 = broken.components.find({1, 0, 0});
  auto it2 = broken.components.find({0, 1, 0});
  REQUIRE(it1 != broken.components.end());
  REQUIRE(it2 != broken.components.end());
  std::swap(it1->second, it2->second);
  Check c = grading_compat(der.L, broken);
  CHECK_FALSE(c.pass);
  CHECK_FALSE(c.witness.empty());
}

TEST_CASE("line subalgebras: counts for p = 2 and rejection of nonzero zero class") {
  OperatorAlgebra der = derivation_algebra(octonions().mul);
  ModelAutos autos = octonion_model_autos(der, octonions().deg);
  Grading G = grading_of(der.L, autos, 2, Cyc::rational(1, Rat(-1)));
  auto lines = line_subalgebras(G, der.L.dim(), 1);
  CHECK(lines.size() == 7);
  for (const auto& [rep, S] : lines) CHECK(S.dim() == 2);

  Grading bad = G;
  bad.components.emplace(std::vector<int>{0, 0, 0},
                         Subspace::from_rows(14, 1, {{{0, Cyc::one(1)}}}));
  CHECK_THROWS_AS(line_subalgebras(bad, 14, 1), error);
}

TEST_CASE("full Jordan certificates for the octonion-derived models") {
  const OctonionAlgebra& O = octonions();
  for (auto [which, expected] : {std::pair{0, 2}, std::pair{1, 4}}) {
    OperatorAlgebra A = which == 0 ? derivation_algebra(O.mul) : skew_algebra(O);
    ModelAutos autos = octonion_model_autos(A, O.deg);
    REQUIRE(autos.status.ok);
    Grading G = grading_of(A.L, autos, 2, Cyc::rational(1, Rat(-1)));
    Certificate cert = jordan_certificate(A.L, G, expected);
    CHECK(cert.all_pass());
    CHECK(cert.dims.at("lines") == 7);
    CHECK(cert.dims.at("line_dim") == expected);
    CHECK(cert.dims.at("zero_class") == 0);
  }
}

TEST_CASE("Jacobi sweeps: full count, sampled determinism, perturbation witness") {
  OperatorAlgebra der = derivation_algebra(octonions().mul);
  Check full = jacobi_sweep_full(der.L);
  CHECK(full.pass);
  CHECK(full.count == 364);  // C(14,3)

  Check s1 = jacobi_sweep_sample(der.L, 500, 42);
  Check s2 = jacobi_sweep_sample(der.L, 500, 42);
  CHECK(s1.pass);
  CHECK(s1.count == s2.count);

  // perturb one structure constant
  LieAlgebra broken = der.L;
  SVec v = broken.bracket_table(0, 1);
  v = svec_add(v, SVec{{3, Cyc::one(1)}});
  broken.set_bracket(0, 1, v);
  Check c = jacobi_sweep_full(broken);
  CHECK_FALSE(c.pass);
  CHECK(c.witness.find("triple") != std::string::npos);
}

TEST_CASE("Jordan certificate for the 78-dim model: 26 classes of dim 3, 13 lines of dim 6") {
  GradedModel m = build_e6();
  ModelAutos autos = tensor_model_autos(m);
  REQUIRE(autos.status.ok);
  Grading G = grading_of(m.L, autos, 3, Cyc::zeta_pow(3, 1));
  Mat gram = killing(m.L);
  Certificate cert = jordan_certificate(m.L, G, 3, &gram);
  CHECK(cert.all_pass());
  CHECK(cert.dims.at("nonzero_classes") == 26);
  CHECK(cert.dims.at("lines") == 13);
  CHECK(cert.dims.at("line_dim") == 6);
}

TEST_CASE("grading and certificate JSON round-trips") {
  OperatorAlgebra der = derivation_algebra(octonions().mul);
  ModelAutos autos = octonion_model_autos(der, octonions().deg);
  Grading G = grading_of(der.L, autos, 2, Cyc::rational(1, Rat(-1)));
  json gj = grading_to_json(G, der.L.dim(), 1);
  int amb = 0, cond = 0;
  Grading G2 = grading_from_json(gj, &amb, &cond);
  CHECK(amb == 14);
  CHECK(G2.p == 2);
  CHECK(G2.components.size() == G.components.size());
  for (const auto& [alpha, S] : G.components) CHECK(G2.components.at(alpha) == S);

  json aj = algebra_to_json(der.L);
  LieAlgebra back = algebra_from_json(aj);
  CHECK(back == der.L);

  Certificate cert = jordan_certificate(der.L, G, 2);
  json cj = certificate_to_json(cert);
  CHECK(cj.at("checks").size() == cert.checks.size());
  CHECK(cj.at("dims").at("lines") == 7);
}
