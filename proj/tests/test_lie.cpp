#include "doctest.h"

#include "jgk/lie.hpp"
#include "jgk/util.hpp"

using namespace jgk;

namespace {

Cyc Q(long long n, long long d = 1) { return Cyc::rational(1, Rat(n, d)); }

/// sl2 with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra sl2() {
  LieAlgebra L(3, 1);
  L.set_bracket(0, 1, {{2, Q(1)}});
  L.set_bracket(0, 2, {{0, Q(-2)}});
  L.set_bracket(1, 2, {{1, Q(2)}});
  return L;
}

LieAlgebra sl2_plus_sl2() {
  LieAlgebra L(6, 1);
  auto block = [&](int o) {
    L.set_bracket(o + 0, o + 1, {{o + 2, Q(1)}});
    L.set_bracket(o + 0, o + 2, {{o + 0, Q(-2)}});
    L.set_bracket(o + 1, o + 2, {{o + 1, Q(2)}});
  };
  block(0);
  block(3);
  return L;
}

/// gl(n) basis matrices E_ij restricted to a list of index pairs.
Mat unit_mat(int n, int i, int j) {
  Mat E(n, n, 1);
  E.set(i, j, Q(1));
  return E;
}

/// so(n) for the identity form: spanned by E_ij - E_ji, i < j.
LieAlgebra so_identity(int n) {
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat A(n, n, 1);
      A.set(i, j, Q(1));
      A.set(j, i, Q(-1));
      basis.push_back(A);
    }
  return from_matrix_basis(basis);
}

/// sp(2n) for J = [[0, I], [-I, 0]].
LieAlgebra sp_standard(int n) {
  std::vector<Mat> basis;
  int N = 2 * n;
  auto sym = [&](int i, int j) {  // symmetric S in the A = [[X, S], [T, -X^t]] block shape
    Mat A(N, N, 1);
    A.set(i, n + j, Q(1));
    if (i != j) A.set(j, n + i, Q(1));
    return A;
  };
  auto symT = [&](int i, int j) {
    Mat A(N, N, 1);
    A.set(n + i, j, Q(1));
    if (i != j) A.set(n + j, i, Q(1));
    return A;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat A(N, N, 1);
      A.set(i, j, Q(1));
      A.set(n + j, n + i, Q(-1));
      basis.push_back(A);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      basis.push_back(sym(i, j));
      basis.push_back(symT(i, j));
    }
  return from_matrix_basis(basis);
}

Subspace span_of(int ambient, std::vector<int> indices) {
  std::vector<SVec> rows;
  for (int i : indices) rows.push_back({{i, Q(1)}});
  return Subspace::from_rows(ambient, 1, rows);
}

}  // namespace

TEST_CASE("brackets: bilinear, antisymmetric, classical sl2 values") {
  LieAlgebra L = sl2();
  SVec e{{0, Q(1)}}, f{{1, Q(1)}}, h{{2, Q(1)}};
  CHECK(svec_eq(L.bracket(e, f), SVec{{2, Q(1)}}));
  CHECK(svec_eq(L.bracket(h, e), SVec{{0, Q(2)}}));
  CHECK(L.bracket(e, e).empty());
  SVec x{{0, Q(3)}, {1, Q(-1)}, {2, Q(2, 5)}};
  CHECK(L.bracket(x, x).empty());
  CHECK(svec_eq(L.bracket(x, e), svec_neg(L.bracket(e, x))));
  // Jacobi holds on the only triple
  CHECK(L.jacobi_defect(0, 1, 2).empty());
}

TEST_CASE("Killing form: sl2 value, abelian degenerate, invariance") {
  LieAlgebra L = sl2();
  Mat gram = killing(L);
  CHECK(gram.get(2, 2) == Q(8));
  CHECK(gram.get(0, 1) == Q(4));
  CHECK(gram.get(0, 0).is_zero());
  CHECK(is_nondegenerate(gram));

  LieAlgebra ab(4, 1);
  CHECK(killing(ab).is_zero());

  // kappa([x,y],z) = kappa(x,[y,z]) on random triples
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    SVec x, y, z;
    for (int i = 0; i < 3; ++i) {
      x.emplace_back(i, Q(rng.range(-4, 4)));
      y.emplace_back(i, Q(rng.range(-4, 4)));
      z.emplace_back(i, Q(rng.range(-4, 4)));
    }
    Cyc lhs = killing_pair(gram, L.bracket(x, y), z);
    Cyc rhs = killing_pair(gram, x, L.bracket(y, z));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("centralizer and normalizer on sl2") {
  LieAlgebra L = sl2();
  Subspace h_line = span_of(3, {2});
  CHECK(centralizer(L, h_line) == h_line);
  Subspace e_line = span_of(3, {0});
  Subspace nrm = normalizer(L, e_line);
  CHECK(nrm == span_of(3, {0, 2}));
  CHECK(centralizer(L, e_line) == e_line);
  // centralizer is always inside the normalizer
  for (const auto& v : centralizer(L, e_line).basis) CHECK(nrm.contains(v));
}

TEST_CASE("Cartan subalgebra detection") {
  LieAlgebra L = sl2();
  CHECK(is_cartan(L, span_of(3, {2})));
  CHECK_FALSE(is_cartan(L, span_of(3, {0})));
  Subspace H = cartan_subalgebra(L, 0);
  CHECK(H.dim() == 1);
  CHECK(is_cartan(L, H));
}

TEST_CASE("simple ideals: block sum splits, each factor certified") {
  LieAlgebra L = sl2_plus_sl2();
  auto ideals = simple_ideals(L, 0);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].dim() == 3);
  CHECK(ideals[1].dim() == 3);
  CHECK(ideals[0] == span_of(6, {0, 1, 2}));
  CHECK(ideals[1] == span_of(6, {3, 4, 5}));

  auto single = simple_ideals(sl2(), 0);
  CHECK(single.size() == 1);
  CHECK(single[0].dim() == 3);
}

TEST_CASE("simple ideals survive a basis mix (centroid splitting)") {
  // change basis so the two sl2 blocks are thoroughly entangled
  LieAlgebra L0 = sl2_plus_sl2();
  int n = 6;
  Mat P(n, n, 1);
  // a fixed invertible matrix with no block structure
  long long rows[6][6] = {{1, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 0}, {1, 0, 1, 0, 0, 1},
                          {0, 1, 1, 1, 0, 0}, {1, 0, 0, 0, 1, 1}, {0, 0, 1, 0, 1, 2}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[i][j] != 0) P.set(i, j, Q(rows[i][j]));
  // columns of P are the new basis vectors; [f_a, f_b] re-expressed via P^{-1}
  Mat Pinv(n, n, 1);
  for (int col = 0; col < n; ++col) {
    std::vector<Cyc> e(static_cast<std::size_t>(n), Cyc(1));
    e[static_cast<std::size_t>(col)] = Q(1);
    auto x = solve(P, e);
    REQUIRE(x.has_value());
    for (int r = 0; r < n; ++r)
      if (!(*x)[static_cast<std::size_t>(r)].is_zero()) Pinv.set(r, col, (*x)[static_cast<std::size_t>(r)]);
  }
  LieAlgebra L(n, 1);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      SVec fa, fb;
      for (int r = 0; r < n; ++r) {
        Cyc ca = P.get(r, a), cb = P.get(r, b);
        if (!ca.is_zero()) fa.emplace_back(r, ca);
        if (!cb.is_zero()) fb.emplace_back(r, cb);
      }
      L.set_bracket(a, b, Pinv.apply(L0.bracket(fa, fb)));
    }
  auto ideals = simple_ideals(L, 1);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].dim() == 3);
  CHECK(ideals[1].dim() == 3);
  for (const auto& u : ideals[0].basis)
    for (const auto& v : ideals[1].basis) CHECK(L.bracket(u, v).empty());
}

TEST_CASE("type identification: A1, B-series fingerprints, C3, D4") {
  CHECK(identify_type(sl2(), 0).label == "A1");
  CHECK(identify_type(sl2(), 0).rank == 1);
  CHECK(identify_type(sl2_plus_sl2(), 0).label == "not simple");

  TypeInfo so5 = identify_type(so_identity(5), 0);
  CHECK(so5.label == "B2");
  CHECK(so5.rank == 2);
  CHECK(so5.roots == 8);

  // dim 21, rank 3 is shared by B3 and C3: the Killing-norm fingerprint
  // separates them
  TypeInfo so7 = identify_type(so_identity(7), 0);
  CHECK(so7.label == "B3");
  TypeInfo sp6 = identify_type(sp_standard(3), 0);
  CHECK(sp6.label == "C3");

  TypeInfo so8 = identify_type(so_identity(8), 0);
  CHECK(so8.label == "D4");
  CHECK(so8.rank == 4);
}

TEST_CASE("centroid dimension counts ideals") {
  LieAlgebra L = sl2_plus_sl2();
  Subspace H = cartan_subalgebra(L, 0);
  CHECK(H.dim() == 2);
  CHECK(centroid_dimension(L, H) == 2);
  CHECK(centroid_dimension(sl2(), cartan_subalgebra(sl2(), 0)) == 1);
}

TEST_CASE("restrict_to rejects non-closed subspaces") {
  LieAlgebra L = sl2();
  CHECK_THROWS_AS(restrict_to(L, span_of(3, {0, 1})), error);  // [e,f] = h escapes
  LieAlgebra sub = restrict_to(L, span_of(3, {2}));
  CHECK(sub.dim() == 1);
}
