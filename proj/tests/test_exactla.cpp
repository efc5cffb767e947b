#include "doctest.h"

#include "jgk/matrix.hpp"
#include "jgk/util.hpp"

using namespace jgk;

namespace {

Cyc Q(long long n, long long d = 1) { return Cyc::rational(1, Rat(n, d)); }

Mat clock5() {
  Mat b(5, 5, 5);
  for (int j = 0; j < 5; ++j) b.set(j, j, Cyc::zeta_pow(5, j));
  return b;
}

Mat shift5() {
  Mat c(5, 5, 5);
  for (int j = 0; j < 5; ++j) c.set((j + 1) % 5, j, Cyc::one(5));
  return c;
}

SVec rand_vec(Rng& rng, int n, int m) {
  SVec v;
  for (int i = 0; i < n; ++i) {
    long long a = rng.range(-4, 4);
    if (a != 0) v.emplace_back(i, Cyc::rational(m, Rat(a)));
  }
  return v;
}

}  // namespace

TEST_CASE("kernel dimensions and exact annihilation") {
  CHECK(kernel(Mat::identity(4, 1)).dim() == 0);
  CHECK(kernel(Mat(3, 3, 1)).dim() == 3);

  Mat M(2, 2, 5);
  M.set(0, 0, Cyc::one(5));
  M.set(0, 1, Cyc::zeta_pow(5, 1));
  M.set(1, 0, Cyc::zeta_pow(5, 4));
  M.set(1, 1, Cyc::one(5));
  Subspace K = kernel(M);
  REQUIRE(K.dim() == 1);
  // canonical form of span{(zeta, -1)}: leading one, then -zeta^4
  CHECK(svec_eq(K.basis[0], SVec{{0, Cyc::one(5)}, {1, -Cyc::zeta_pow(5, 4)}}));
  for (const auto& rw : M.row) {
    Cyc dot = Cyc::zero(5);
    for (const auto& [j, a] : rw) {
      const Cyc* x = svec_get(K.basis[0], j);
      if (x) dot += a * *x;
    }
    CHECK(dot.is_zero());
  }
}

TEST_CASE("solve: exact solutions and no-solution reporting") {
  Mat I = Mat::identity(3, 1);
  std::vector<Cyc> b = {Q(2), Q(-7, 3), Q(0)};
  auto x = solve(I, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Q(2));
  CHECK((*x)[1] == Q(-7, 3));

  Mat A(2, 2, 3);
  Cyc w = Cyc::zeta_pow(3, 1);
  A.set(0, 0, Cyc::one(3));
  A.set(0, 1, Cyc::one(3));
  A.set(1, 0, w);
  A.set(1, 1, w);
  auto sol = solve(A, {Cyc::one(3), w});
  REQUIRE(sol.has_value());
  CHECK(((*sol)[0] + (*sol)[1]) == Cyc::one(3));  // residual check on the rank-1 system
  CHECK_FALSE(solve(A, {Cyc::one(3), Cyc::zero(3)}).has_value());
}

TEST_CASE("eigenspaces of the order-5 clock and shift operators") {
  Subspace e = eigenspace(clock5(), Cyc::zeta_pow(5, 1));
  REQUIRE(e.dim() == 1);
  CHECK(svec_eq(e.basis[0], SVec{{1, Cyc::one(5)}}));

  Subspace fix = eigenspace(shift5(), Cyc::one(5));
  REQUIRE(fix.dim() == 1);
  SVec ones;
  for (int i = 0; i < 5; ++i) ones.emplace_back(i, Cyc::one(5));
  CHECK(svec_eq(fix.basis[0], ones));

  CHECK(eigenspace(Mat::identity(3, 3), Cyc::zeta_pow(3, 1)).dim() == 0);
}

TEST_CASE("simultaneous eigenspaces") {
  // clock and shift do not commute: rejected
  CHECK_THROWS_AS(simultaneous_eigenspaces({clock5(), shift5()}, 5, Cyc::zeta_pow(5, 1)), error);

  auto comps = simultaneous_eigenspaces({clock5()}, 5, Cyc::zeta_pow(5, 1));
  CHECK(comps.size() == 5);
  for (const auto& [k, s] : comps) CHECK(s.dim() == 1);

  auto trivial = simultaneous_eigenspaces({Mat::identity(4, 3), Mat::identity(4, 3)}, 3,
                                          Cyc::zeta_pow(3, 1));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.begin()->first == std::vector<int>{0, 0});
  CHECK(trivial.begin()->second.dim() == 4);

  // wrong order is rejected
  Mat notroot = Mat::identity(2, 5);
  notroot.set(0, 0, Q(2).conductor() == 1 ? Cyc::rational(5, Rat(2)) : Cyc::one(5));
  CHECK_THROWS_AS(simultaneous_eigenspaces({notroot}, 5, Cyc::zeta_pow(5, 1)), error);
}

TEST_CASE("echelon form is canonical: any basis of a subspace gives the same form") {
  Rng rng(23);
  for (int m : {1, 3}) {
    for (int t = 0; t < 30; ++t) {
      std::vector<SVec> rows;
      for (int k = 0; k < 3; ++k) rows.push_back(rand_vec(rng, 6, m));
      Subspace s1 = Subspace::from_rows(6, m, rows);
      // new spanning set: random invertible combinations of the old rows
      std::vector<SVec> mixed;
      for (int k = 0; k < 5; ++k) {
        Accum acc(6, m);
        for (const auto& r : rows) acc.add_scaled(r, Cyc::rational(m, Rat(rng.range(-3, 3))));
        mixed.push_back(acc.take());
      }
      Subspace s2 = Subspace::from_rows(6, m, mixed);
      if (s2.dim() == s1.dim()) CHECK(s1 == s2);
      else CHECK(s2.dim() < s1.dim());  // unlucky singular mix
      for (const auto& r : mixed) CHECK(s1.contains(r));
    }
  }
}

TEST_CASE("subspace intersection") {
  // span{e0,e1} ∩ span{e1,e2} = span{e1}
  auto s1 = Subspace::from_rows(3, 1, {{{0, Q(1)}}, {{1, Q(1)}}});
  auto s2 = Subspace::from_rows(3, 1, {{{1, Q(1)}}, {{2, Q(1)}}});
  Subspace i = s1.intersect(s2);
  REQUIRE(i.dim() == 1);
  CHECK(svec_eq(i.basis[0], SVec{{1, Q(1)}}));
  CHECK(Subspace::full(4, 1).intersect(Subspace::zero(4, 1)).dim() == 0);
}

TEST_CASE("rank and matrix algebra") {
  Mat c = shift5();
  CHECK(rank(c) == 5);
  CHECK(c.pow(5).is_identity());
  CHECK_FALSE(c.pow(3).is_identity());
  Mat b = clock5();
  // clock * shift = zeta * shift * clock
  Mat lhs = b * c;
  Mat rhs = (c * b);
  for (auto& rw : rhs.row)
    for (auto& [j, v] : rw) v *= Cyc::zeta_pow(5, 1);
  CHECK(lhs == rhs);
}
