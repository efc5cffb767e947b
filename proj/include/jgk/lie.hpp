#ifndef JGK_LIE_HPP
#define JGK_LIE_HPP

#include <string>

#include "jgk/matrix.hpp"

namespace jgk {

/// Lie algebra as an exact sparse structure-constant table. Only pairs i < j
/// are stored; antisymmetry is structural. The Jacobi identity is certified
/// by sweeps, never assumed.
class LieAlgebra {
public:
  LieAlgebra() = default;
  LieAlgebra(int dim, int cond)
      : dim_(dim), m_(cond), tab_(static_cast<std::size_t>(dim) * (static_cast<std::size_t>(dim) + 1) / 2) {}

  int dim() const { return dim_; }
  int conductor() const { return m_; }

  void set_bracket(int i, int j, SVec v);          // i < j
  const SVec& bracket_table(int i, int j) const;   // i < j
  SVec bracket_basis(int i, int j) const;          // any order, sign handled
  SVec bracket(const SVec& x, const SVec& y) const;
  SVec bracket_vb(const SVec& x, int j) const;     // [x, basis_j]

  /// Jacobi defect [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j].
  SVec jacobi_defect(int i, int j, int k) const;

  Mat ad_basis(int i) const;     // ad x_i as a dim x dim matrix
  Mat ad(const SVec& x) const;

  std::vector<std::string> labels;

  bool operator==(const LieAlgebra& o) const;

private:
  int dim_ = 0, m_ = 1;
  std::vector<SVec> tab_;
  std::size_t slot(int i, int j) const;  // i < j
};

/// Symmetric Killing form gram matrix: gram[i][j] = tr(ad x_i ∘ ad x_j).
Mat killing(const LieAlgebra& L);

bool is_nondegenerate(const Mat& gram);

/// Killing pairing of two vectors against a precomputed gram matrix.
Cyc killing_pair(const Mat& gram, const SVec& x, const SVec& y);

Subspace centralizer(const LieAlgebra& L, const Subspace& S);
Subspace normalizer(const LieAlgebra& L, const Subspace& S);

/// Abelian and self-normalizing.
bool is_cartan(const LieAlgebra& L, const Subspace& H);

/// Cartan subalgebra by the generic-element method: random small-coordinate
/// elements, kernel of ad, accept when abelian and self-normalizing.
Subspace cartan_subalgebra(const LieAlgebra& L, std::uint64_t seed, int retries = 24);

/// Restriction of the bracket to a bracket-closed subspace, in the subspace's
/// echelon basis. Throws when the subspace is not closed.
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S);

/// Structure constants of a commutator-closed space of matrices, expressed in
/// the given basis. Throws when a commutator escapes the span.
LieAlgebra from_matrix_basis(const std::vector<Mat>& basis);

/// Direct summands of a semisimple algebra: pairwise commuting,
/// Killing-orthogonal, each certified to contain no proper ideal via the
/// Cartan-restricted centroid. Requires a nondegenerate Killing form.
/// A caller-supplied Cartan (verified before use) avoids the random search,
/// whose kernel bases carry large entries on high-dimensional inputs.
std::vector<Subspace> simple_ideals(const LieAlgebra& L, std::uint64_t seed = 0,
                                    const Subspace* cartan_hint = nullptr);

/// Dimension of the centroid (== number of ideals for semisimple algebras
/// with absolutely simple summands), computed through its action on a Cartan.
int centroid_dimension(const LieAlgebra& L, const Subspace& H);

struct TypeInfo {
  std::string label;   // "A1", ..., "E8", or "not simple"
  int rank = 0;
  int roots = 0;
};

/// The exact per-type constant c with sum_roots kappa*(b,b) b(h) b(h') =
/// c * kappa(h,h') on a Cartan H, equal to sum_roots kappa*(b,b)^2 / rank.
/// Computed from traces of four-fold ad products; needs no root-space
/// splitting, so it works over non-split forms.
Rat killing_norm_fingerprint(const LieAlgebra& L, const Subspace& H);

/// Identifies the simple type from (dim, rank) and, when ambiguous, the exact
/// Killing-norm fingerprint sum_roots kappa*(root,root)^2 / rank.
TypeInfo identify_type(const LieAlgebra& L, std::uint64_t seed = 0,
                       const Subspace* cartan_hint = nullptr);

}  // namespace jgk

#endif
