#include "doctest.h"

#include "jgk/octonion.hpp"
#include "jgk/util.hpp"

using namespace jgk;

namespace {

SVec basis_vec(int i) { return {{i, Cyc::one(1)}}; }

SVec mul(const OctonionAlgebra& A, const SVec& x, const SVec& y) {
  SVec acc;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) acc = svec_add_scaled(acc, A.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], a * b);
  return acc;
}

Rat norm_of(const OctonionAlgebra& A, const SVec& x) {
  Rat acc(0);
  for (const auto& [i, c] : x) {
    CHECK(c.is_rational());
    acc += c.rational_part() * c.rational_part() * A.norm_diag[static_cast<std::size_t>(i)];
  }
  return acc;
}

}  // namespace

TEST_CASE("octonions: composition law, unit norms, grading additivity") {
  OctonionAlgebra O = octonion_algebra();
  REQUIRE(O.dim == 8);
  for (int i = 0; i < 8; ++i) CHECK(O.norm_diag[static_cast<std::size_t>(i)] == Rat(1));
  for (int i = 0; i < 8; ++i) CHECK(O.deg[static_cast<std::size_t>(i)] == i);

  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      SVec p = mul(O, basis_vec(i), basis_vec(j));
      // basis products are single signed basis vectors; norms multiply
      REQUIRE(p.size() == 1);
      CHECK(norm_of(O, p) == O.norm_diag[static_cast<std::size_t>(i)] * O.norm_diag[static_cast<std::size_t>(j)]);
      // deg(e_i e_j) = deg(e_i) + deg(e_j) in Z_2^3
      CHECK(O.deg[static_cast<std::size_t>(p[0].first)] == (i ^ j));
    }
  }
  // composition also on a random non-basis pair
  SVec x{{0, Cyc::rational(1, Rat(2))}, {3, Cyc::rational(1, Rat(-1))}};
  SVec y{{5, Cyc::rational(1, Rat(1))}, {6, Cyc::rational(1, Rat(3))}};
  CHECK(norm_of(O, mul(O, x, y)) == norm_of(O, x) * norm_of(O, y));
}

TEST_CASE("octonions are alternative but not associative") {
  OctonionAlgebra O = octonion_algebra();
  // associator of the three doubling generators is nonzero
  SVec lhs = mul(O, mul(O, basis_vec(1), basis_vec(2)), basis_vec(4));
  SVec rhs = mul(O, basis_vec(1), mul(O, basis_vec(2), basis_vec(4)));
  CHECK_FALSE(svec_eq(lhs, rhs));
  // the quaternion subalgebra is associative
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        SVec a = mul(O, mul(O, basis_vec(i), basis_vec(j)), basis_vec(k));
        SVec b = mul(O, basis_vec(i), mul(O, basis_vec(j), basis_vec(k)));
        CHECK(svec_eq(a, b));
      }
}

TEST_CASE("derivation algebras: dimensions 14 / 3 / 0") {
  OctonionAlgebra O = octonion_algebra();
  OperatorAlgebra der = derivation_algebra(O.mul);
  CHECK(der.L.dim() == 14);

  OperatorAlgebra derH = derivation_algebra(O.subalgebra_table(4));
  CHECK(derH.L.dim() == 3);

  OperatorAlgebra der1 = derivation_algebra(O.subalgebra_table(1));
  CHECK(der1.L.dim() == 0);

  // every basis op satisfies Leibniz on random products
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    const Mat& D = der.ops[rng.below(der.ops.size())];
    int i = static_cast<int>(rng.below(8)), j = static_cast<int>(rng.below(8));
    SVec lhs = D.apply(mul(O, basis_vec(i), basis_vec(j)));
    SVec rhs = svec_add(mul(O, D.apply(basis_vec(i)), basis_vec(j)),
                        mul(O, basis_vec(i), D.apply(basis_vec(j))));
    CHECK(svec_eq(lhs, rhs));
  }
}

TEST_CASE("skew algebras: so(8) has dimension 28, rank-1 form gives 0") {
  OctonionAlgebra O = octonion_algebra();
  OperatorAlgebra sk = skew_algebra(O);
  CHECK(sk.L.dim() == 28);
  CHECK(is_nondegenerate(killing(sk.L)));

  OperatorAlgebra tiny = skew_algebra_of_form({Rat(1)});
  CHECK(tiny.L.dim() == 0);

  CHECK_THROWS_AS(skew_algebra_of_form({Rat(1), Rat(0)}), error);
}

TEST_CASE("type identification of the octonion-derived algebras") {
  OctonionAlgebra O = octonion_algebra();
  TypeInfo g2 = identify_type(derivation_algebra(O.mul).L, 0);
  CHECK(g2.label == "G2");
  CHECK(g2.rank == 2);
  TypeInfo d4 = identify_type(skew_algebra(O).L, 0);
  CHECK(d4.label == "D4");
  CHECK(d4.rank == 4);
}

TEST_CASE("induced Z_2^3 gradings: 7 x 2 for derivations, 7 x 4 for skew maps") {
  OctonionAlgebra O = octonion_algebra();
  for (auto [which, expected] : {std::pair{0, 2}, std::pair{1, 4}}) {
    OperatorAlgebra A = which == 0 ? derivation_algebra(O.mul) : skew_algebra(O);
    auto comps = induced_grading_on_maps(A, O.deg, 3);
    REQUIRE(comps.size() == 8);
    int nonzero = 0;
    for (const auto& [alpha, S] : comps) {
      bool is_zero_class = alpha == std::vector<int>{0, 0, 0};
      if (is_zero_class) CHECK(S.dim() == 0);
      else {
        CHECK(S.dim() == expected);
        ++nonzero;
      }
    }
    CHECK(nonzero == 7);
  }
}

TEST_CASE("grading characters conjugate to order-2 automorphisms") {
  OctonionAlgebra O = octonion_algebra();
  OperatorAlgebra der = derivation_algebra(O.mul);
  auto thetas = grading_character_autos(der, O.deg, 3);
  REQUIRE(thetas.size() == 3);
  for (const auto& Th : thetas) {
    CHECK(Th.pow(2).is_identity());
    CHECK_FALSE(Th.is_identity());
    // bracket preservation on all basis pairs
    for (int a = 0; a < der.L.dim(); ++a)
      for (int b = a + 1; b < der.L.dim(); ++b) {
        SVec lhs = Th.apply(der.L.bracket_basis(a, b));
        SVec rhs = der.L.bracket(Th.apply(SVec{{a, Cyc::one(1)}}), Th.apply(SVec{{b, Cyc::one(1)}}));
        CHECK(svec_eq(lhs, rhs));
      }
  }
  CHECK(thetas[0].commutes_with(thetas[1]));
  CHECK(thetas[0].commutes_with(thetas[2]));
  CHECK(thetas[1].commutes_with(thetas[2]));
}
