#ifndef JGK_EXTERIOR_HPP
#define JGK_EXTERIOR_HPP

#include "jgk/matrix.hpp"

namespace jgk {

using Dense = std::vector<std::vector<Cyc>>;

long long binom(int n, int k);

/// Basis of Λ^k F^n: strictly increasing index subsets as bitmasks, ordered
/// lexicographically on the sorted index tuples.
struct WedgeBasis {
  int n = 0, k = 0, dim = 0;
  std::vector<unsigned> mask;    // basis index -> subset bitmask
  std::vector<int> index_of;     // bitmask -> basis index (-1 outside)

  WedgeBasis() = default;
  WedgeBasis(int n_, int k_);
};

/// (-1)^{inversions between a and b}; 0 when the subsets overlap.
int merge_sign(unsigned a, unsigned b);

struct WedgeTerm {
  unsigned mask = 0;  // result subset; empty set encodes the scalar Λ^0
  int sign = 0;       // 0 when the product vanishes
};

/// Product Λ^a ⊗ Λ^b → Λ^{a+b} for a+b < n, and → Λ^{a+b-n} (scalar when
/// a+b = n) through the volume-form identifications otherwise.
WedgeTerm wedge_product(int n, unsigned maskI, unsigned maskJ);

/// Derivation (Leibniz) extension of an n x n operator to Λ^k.
Mat wedge_derivation(const Dense& a, const WedgeBasis& wb, int cond);

/// Multiplicative extension: (Λ^k b)(v1∧...∧vk) = (b v1)∧...∧(b vk).
Mat wedge_power(const Dense& b, const WedgeBasis& wb, int cond);

/// The equivariant contraction Λ^a ⊗ Λ^{n-a} → gl(n) built from interior
/// products and the volume identification; returned as a dense n x n matrix
/// with entries in {-1,0,1} (as rationals of conductor cond).
Dense gl_contraction(int n, unsigned maskI, unsigned maskJ, int cond);

}  // namespace jgk

#endif
