#ifndef JGK_OCTONION_HPP
#define JGK_OCTONION_HPP

#include "jgk/lie.hpp"

namespace jgk {

/// Composition algebra built by Cayley-Dickson doublings over Q, with the
/// Z_2^3 grading that assigns each doubling generator a new bit; basis index
/// bitmasks are the degrees.
struct OctonionAlgebra {
  int dim = 1;
  std::vector<std::vector<SVec>> mul;  // mul[i][j] = e_i * e_j, conductor 1
  std::vector<Rat> norm_diag;          // n(e_i); the polar form is diag(2 n_i)
  std::vector<int> deg;                // Z_2^r degree bitmask per basis index

  /// Multiplication table of the span of the first d basis vectors (the
  /// Cayley-Dickson tower makes these subalgebras).
  std::vector<std::vector<SVec>> subalgebra_table(int d) const;
};

/// Three doublings with parameters (-1, -1, -1): the classical octonions
/// with n(e_i) = 1.
OctonionAlgebra octonion_algebra();

/// Cayley-Dickson tower over Q with the given doubling parameters.
OctonionAlgebra cayley_dickson(const std::vector<Rat>& params);

/// A matrix Lie algebra together with its operator basis on the base space.
struct OperatorAlgebra {
  LieAlgebra L;
  std::vector<Mat> ops;  // basis as matrices, aligned with L's basis order
};

/// Solutions of the Leibniz system D(xy) = D(x)y + x D(y), closed under the
/// commutator.
OperatorAlgebra derivation_algebra(const std::vector<std::vector<SVec>>& mul);

/// Skew maps of a nondegenerate diagonal quadratic form (polar form
/// diag(2 n_i)) with the commutator bracket.
OperatorAlgebra skew_algebra_of_form(const std::vector<Rat>& norm_diag);
OperatorAlgebra skew_algebra(const OctonionAlgebra& A);

/// Homogeneous decomposition of an operator algebra induced by a grading of
/// the base space: component alpha maps each base degree beta into
/// alpha + beta. Components must sum to the whole algebra.
std::map<std::vector<int>, Subspace> induced_grading_on_maps(const OperatorAlgebra& A,
                                                             const std::vector<int>& base_deg,
                                                             int bits);

/// The order-2 automorphisms of the operator algebra given by conjugation
/// with the grading characters u_s = diag((-1)^{bit s of deg}); these
/// generate the Z_2^3 grading group for the derivation and skew algebras.
std::vector<Mat> grading_character_autos(const OperatorAlgebra& A,
                                         const std::vector<int>& base_deg, int bits);

}  // namespace jgk

#endif
