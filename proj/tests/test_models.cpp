#include "doctest.h"

#include "jgk/octonion.hpp"
#include "jgk/skeleton.hpp"
#include "jgk/util.hpp"

using namespace jgk;

namespace {

bool degree_compatible(const GradedModel& M) {
  int n = M.L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int dt = (M.deg[static_cast<std::size_t>(i)] + M.deg[static_cast<std::size_t>(j)]) % M.p;
      for (const auto& [k, c] : M.L.bracket_table(i, j))
        if (M.deg[static_cast<std::size_t>(k)] != dt) return false;
    }
  return true;
}

int full_jacobi_violations(const LieAlgebra& L) {
  int bad = 0;
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j)
      for (int k = j + 1; k < L.dim(); ++k)
        if (!L.jacobi_defect(i, j, k).empty()) ++bad;
  return bad;
}

}  // namespace

TEST_CASE("78-dim Z_3 model: blocks, scalars, full Jacobi, type") {
  GradedModel m = build_e6();
  CHECK(m.L.dim() == 78);
  CHECK(m.block_dim == std::vector<int>{24, 27, 27});
  for (const auto& [slot, v] : m.lambda) CHECK_FALSE(v.is_zero());
  CHECK(degree_compatible(m));
  CHECK(full_jacobi_violations(m.L) == 0);
  Mat gram = killing(m.L);
  CHECK(is_nondegenerate(gram));
  Subspace H = diagonal_cartan(m);
  CHECK(is_cartan(m.L, H));
  TypeInfo t = identify_type(m.L, 0, &H);
  CHECK(t.label == "E6");
  CHECK(t.rank == 6);
}

TEST_CASE("degree-0 part of the 78-dim model splits into three sl(3) ideals") {
  GradedModel m = build_e6();
  Subspace g0 = Subspace::from_rows(78, 3, [&] {
    std::vector<SVec> rows;
    for (int i = 0; i < 24; ++i) rows.push_back({{i, Cyc::one(3)}});
    return rows;
  }());
  LieAlgebra zero_block = restrict_to(m.L, g0);
  auto ideals = simple_ideals(zero_block, 0);
  REQUIRE(ideals.size() == 3);
  for (const auto& I : ideals) CHECK(I.dim() == 8);
}

TEST_CASE("bracket of two degree-1 elements lands in the degree-2 block") {
  GradedModel m = build_e6();
  int o1 = m.offset[1], o2 = m.offset[2];
  SVec w = m.L.bracket_basis(o1 + 3, o1 + 17);
  CHECK_FALSE(w.empty());
  for (const auto& [k, c] : w) {
    CHECK(k >= o2);
    CHECK(k < o2 + 27);
  }
}

TEST_CASE("invariant maps reject undeclared triples") {
  TensorSkeleton skel = e6_skeleton();
  // declared: the (1,1) slot exists
  SVec v = canonical_invariant_map(skel, 3, ScalarSlot{1, 1, -1}, 24, 25);
  (void)v;
  // undeclared: no summand-indexed slot for (1,1)
  CHECK_THROWS_AS(canonical_invariant_map(skel, 3, ScalarSlot{1, 1, 0}, 24, 25), error);
  CHECK_THROWS_AS(canonical_invariant_map(skel, 3, ScalarSlot{2, 2, 2}, 51, 52), error);
}

TEST_CASE("corrupted skeleton reports no solution") {
  TensorSkeleton bad = e8_skeleton();
  bad.comps[1].ext = {2, 1};  // degree-2 component swapped for the wrong shape
  bad.expected_block_dims = {48, 50, 50, 50, 50};  // dimensions still match
  BuildResult r = solve_scalars(bad, 5);
  CHECK_FALSE(r.ok);
  CHECK(r.error.find("no equivariant map") != std::string::npos);

  TensorSkeleton wrong_dims = e6_skeleton();
  wrong_dims.expected_block_dims = {24, 27, 28};
  BuildResult r2 = solve_scalars(wrong_dims, 3);
  CHECK_FALSE(r2.ok);
}

TEST_CASE("52-dim fixed-point model: blocks, Jacobi, type") {
  F4Build f4 = build_f4();
  CHECK(f4.model.L.dim() == 52);
  CHECK(f4.model.block_dim == std::vector<int>{16, 18, 18});
  CHECK(f4.tau.pow(2).is_identity());
  CHECK(f4.embedding.dim() == 52);
  CHECK(degree_compatible(f4.model));
  CHECK(full_jacobi_violations(f4.model.L) == 0);
  Subspace H = f4_cartan(f4);
  CHECK(is_cartan(f4.model.L, H));
  TypeInfo t = identify_type(f4.model.L, 0, &H);
  CHECK(t.label == "F4");
  CHECK(t.rank == 4);
}

TEST_CASE("248-dim Z_5 model: blocks, scalars, sampled Jacobi, Killing") {
  GradedModel m = build_e8();
  CHECK(m.L.dim() == 248);
  CHECK(m.block_dim == std::vector<int>{48, 50, 50, 50, 50});
  for (const auto& [slot, v] : m.lambda) CHECK_FALSE(v.is_zero());
  CHECK(degree_compatible(m));
  // the two degree-0 target scalars of a (d, -d) pair are genuinely
  // independent slots: both present, generally different
  CHECK(m.lambda.count(ScalarSlot{1, 4, 0}) == 1);
  CHECK(m.lambda.count(ScalarSlot{1, 4, 1}) == 1);

  Rng rng(0);
  for (int t = 0; t < 20000; ++t) {
    int i = static_cast<int>(rng.below(248)), j = static_cast<int>(rng.below(248)),
        k = static_cast<int>(rng.below(248));
    if (i == j || j == k || i == k) continue;
    CHECK(m.L.jacobi_defect(i, j, k).empty());
  }
  Mat gram = killing(m.L);
  CHECK(is_nondegenerate(gram));
}

TEST_CASE("degree-0 part of the 248-dim model splits into two sl(5) ideals") {
  GradedModel m = build_e8();
  std::vector<SVec> rows;
  for (int i = 0; i < 48; ++i) rows.push_back({{i, Cyc::one(5)}});
  LieAlgebra zero_block = restrict_to(m.L, Subspace::from_rows(248, 5, rows));
  auto ideals = simple_ideals(zero_block, 0);
  REQUIRE(ideals.size() == 2);
  CHECK(ideals[0].dim() == 24);
  CHECK(ideals[1].dim() == 24);
}

TEST_CASE("248-dim model identifies as E8") {
  GradedModel m = build_e8();
  Subspace H = diagonal_cartan(m);
  CHECK(is_cartan(m.L, H));
  TypeInfo t = identify_type(m.L, 0, &H);
  CHECK(t.label == "E8");
  CHECK(t.rank == 8);
  CHECK(t.roots == 240);
}

TEST_CASE("Killing form invariance on every built model, 1000 random triples each") {
  struct Item {
    const char* name;
    LieAlgebra L;
  };
  OctonionAlgebra O = octonion_algebra();
  std::vector<Item> models;
  models.push_back({"e6", build_e6().L});
  models.push_back({"f4", build_f4().model.L});
  models.push_back({"e8", build_e8().L});
  models.push_back({"g2", derivation_algebra(O.mul).L});
  models.push_back({"d4", skew_algebra(O).L});
  for (const auto& item : models) {
    const LieAlgebra& L = item.L;
    Mat gram = killing(L);
    Rng rng(13);
    int n = L.dim();
    for (int t = 0; t < 1000; ++t) {
      int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      SVec x{{i, Cyc::one(L.conductor())}}, y{{j, Cyc::one(L.conductor())}},
          z{{k, Cyc::one(L.conductor())}};
      Cyc lhs = killing_pair(gram, L.bracket(x, y), z);
      Cyc rhs = killing_pair(gram, x, L.bracket(y, z));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Killing-norm fingerprints match the per-type constants exactly") {
  // c = sum over roots of kappa*(root,root)^2 / rank: 1/30 for the 248-dim
  // model, 1/12 for 78, 5/54 for 52, 5/24 for 14, 1/6 for 28
  GradedModel e8 = build_e8();
  Subspace h8 = diagonal_cartan(e8);
  CHECK(killing_norm_fingerprint(e8.L, h8) == Rat(1, 30));

  GradedModel e6 = build_e6();
  Subspace h6 = diagonal_cartan(e6);
  CHECK(killing_norm_fingerprint(e6.L, h6) == Rat(1, 12));

  F4Build f4 = build_f4();
  Subspace hf = f4_cartan(f4);
  CHECK(killing_norm_fingerprint(f4.model.L, hf) == Rat(5, 54));

  OctonionAlgebra O = octonion_algebra();
  OperatorAlgebra g2 = derivation_algebra(O.mul);
  CHECK(killing_norm_fingerprint(g2.L, cartan_subalgebra(g2.L, 0)) == Rat(5, 24));
  OperatorAlgebra d4 = skew_algebra(O);
  CHECK(killing_norm_fingerprint(d4.L, cartan_subalgebra(d4.L, 0)) == Rat(1, 6));
}
