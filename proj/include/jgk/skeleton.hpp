#ifndef JGK_SKELETON_HPP
#define JGK_SKELETON_HPP

#include "jgk/exterior.hpp"
#include "jgk/lie.hpp"

namespace jgk {

/// Canonical basis of sl(n): E_(k,l) for k != l in lex order, then the
/// diagonal H_a = E_aa - E_{a+1,a+1}.
int sl_dim(int n);
Dense sl_basis_matrix(int n, int idx, int cond);
/// Coordinates of a trace-free matrix in the canonical basis.
SVec sl_decompose(const Dense& M);
/// Matrix of Ad_g (conjugation) on the canonical sl(n) basis; g must be
/// invertible with the inverse supplied.
Mat sl_conjugation_action(const Dense& g, const Dense& g_inv, int cond);

/// Degree-indexed tensor layout: component of degree d is the tensor product
/// over slots s of Λ^{ext[s]} V_s; degree 0 is always ⊕_s sl(V_s).
struct SkelComponent {
  int deg = 0;
  std::vector<int> ext;
};

struct TensorSkeleton {
  int p = 0;
  std::vector<int> space_dim;
  std::vector<SkelComponent> comps;       // degrees 1..p-1 in order
  std::vector<int> expected_block_dims;   // degree 0 first
};

/// The Z_5-graded layout with two 5-dimensional spaces: degree d carries
/// exterior powers (d, 2d mod 5); blocks (48, 50, 50, 50, 50).
TensorSkeleton e8_skeleton();
/// The Z_3-graded layout with three 3-dimensional spaces: degree 1 is
/// V1 ⊗ V2 ⊗ V3, degree 2 its volume-form dual; blocks (24, 27, 27).
TensorSkeleton e6_skeleton();

/// Unknown multiplier of the unique equivariant map for an unordered degree
/// pair; pairs landing in degree 0 get one slot per sl(V_s) summand.
struct ScalarSlot {
  int di = 0, dj = 0;  // di <= dj, both nonzero
  int summand = -1;    // -1: single map; s >= 0: the sl(V_s) target
  auto operator<=>(const ScalarSlot&) const = default;
};

struct GradedModel {
  LieAlgebra L;
  int p = 0;
  TensorSkeleton skel;
  std::vector<int> deg;        // degree per basis index
  std::vector<int> offset;     // block offset per degree
  std::vector<int> block_dim;
  std::vector<int> sl_offset;  // per-space offset inside the degree-0 block
  std::map<ScalarSlot, Cyc> lambda;
};

struct BuildOptions {
  int window = 5;            // basis window per block for Jacobi harvesting
  int verify_samples = 20000;  // extra seeded random triples checked after solving
  std::uint64_t seed = 0;
};

struct BuildResult {
  bool ok = false;
  std::string error;  // diagnostic with the offending degree pair / triple
  GradedModel model;
};

/// Determines the bracket scalars from the Jacobi identity (gauge: the
/// (1,k)-slots are set to 1) and assembles the Lie algebra. Reports failure
/// instead of throwing for skeleton defects.
BuildResult solve_scalars(const TensorSkeleton& skel, int conductor, const BuildOptions& opts = {});

/// Value of the declared equivariant map on a basis pair (indices global to
/// the model layout); throws on undeclared (di, dj, summand) triples.
SVec canonical_invariant_map(const TensorSkeleton& skel, int conductor, const ScalarSlot& slot,
                             int a, int b);

GradedModel build_e8();
GradedModel build_e6();

struct F4Build {
  GradedModel model;   // 52-dimensional fixed-point algebra with Z_3 degrees
  GradedModel e6;      // the ambient model
  Mat tau;             // certified order-2 swap automorphism of the ambient model
  Subspace embedding;  // model basis inside the ambient coordinates
};
/// Fixed points of the factor-swap automorphism of the degree-graded
/// 78-dimensional model; blocks (16, 18, 18).
F4Build build_f4();

/// The split diagonal Cartan of a tensor model (the H-part of every sl
/// block); its basis has unit entries and a diagonal ad-action, which keeps
/// downstream exact computations small.
Subspace diagonal_cartan(const GradedModel& M);
/// The swap-fixed diagonal Cartan of the fixed-point model, in its own
/// coordinates.
Subspace f4_cartan(const F4Build& f4);

}  // namespace jgk

#endif
