#ifndef JGK_MATRIX_HPP
#define JGK_MATRIX_HPP

#include <map>
#include <optional>
#include <vector>

#include "jgk/cyclotomic.hpp"

namespace jgk {

/// Sparse vector over Q(zeta_m): (index, coefficient) pairs, sorted by index,
/// no zero coefficients.
using SVec = std::vector<std::pair<int, Cyc>>;

SVec svec_from_dense(const std::vector<Cyc>& v);
std::vector<Cyc> svec_to_dense(const SVec& v, int n, int m);
const Cyc* svec_get(const SVec& v, int idx);
SVec svec_scaled(const SVec& v, const Cyc& f);
SVec svec_add(const SVec& a, const SVec& b);
SVec svec_add_scaled(const SVec& a, const SVec& b, const Cyc& f);  // a + f*b
SVec svec_neg(const SVec& v);
bool svec_eq(const SVec& a, const SVec& b);
/// Scales so all rational components are integers with overall gcd 1 and the
/// leading coefficient's first nonzero rational part is positive.
SVec svec_primitive(SVec v);

/// Reusable dense accumulator for building sparse vectors.
class Accum {
public:
  explicit Accum(int n, int m) : m_(m), val_(static_cast<std::size_t>(n), Cyc(m)), used_(static_cast<std::size_t>(n), 0) {}
  void add(int idx, const Cyc& c);
  void add_scaled(const SVec& v, const Cyc& f);
  SVec take();  // sorted, clears the accumulator
  int conductor() const { return m_; }

private:
  int m_;
  std::vector<Cyc> val_;
  std::vector<char> used_;
  std::vector<int> touched_;
};

/// Sparse matrix over Q(zeta_m), row-major.
struct Mat {
  int rows = 0, cols = 0, m = 1;
  std::vector<SVec> row;

  Mat() = default;
  Mat(int r, int c, int cond) : rows(r), cols(c), m(cond), row(static_cast<std::size_t>(r)) {}
  static Mat identity(int n, int cond);
  static Mat from_dense(const std::vector<std::vector<Cyc>>& d, int cond);

  void set(int i, int j, const Cyc& v);
  Cyc get(int i, int j) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;

  std::vector<Cyc> apply_dense(const std::vector<Cyc>& v) const;
  SVec apply(const SVec& v) const;
  Mat minus_scalar(const Cyc& lambda) const;  // this - lambda*I
  Mat pow(long long e) const;
  Mat transpose() const;
  bool is_identity() const;
  bool is_zero() const;
  bool commutes_with(const Mat& o) const;
};

/// Incremental row-echelon accumulator. Rows are kept in primitive integral
/// form during elimination; finalize() back-substitutes into the unique
/// reduced echelon form with unit pivots.
class RowEchelon {
public:
  RowEchelon(int cols, int cond) : cols_(cols), m_(cond) {}

  bool add_row(SVec r);  // true if the rank increased
  void finalize();

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<SVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  bool finalized() const { return finalized_; }

  /// Residual of v after eliminating all pivot columns.
  SVec reduce(const SVec& v) const;

private:
  int cols_, m_;
  bool finalized_ = false;
  std::vector<SVec> rows_;    // sorted by pivot column
  std::vector<int> pivots_;
};

/// Subspace in canonical reduced echelon form; equality is syntactic.
struct Subspace {
  int ambient = 0, m = 1;
  std::vector<SVec> basis;   // RREF rows
  std::vector<int> pivots;

  static Subspace zero(int ambient, int cond);
  static Subspace full(int ambient, int cond);
  static Subspace from_rows(int ambient, int cond, const std::vector<SVec>& rows);

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const SVec& v) const;
  SVec reduce(const SVec& v) const;
  /// Coordinates of v in the echelon basis; requires contains(v).
  std::vector<Cyc> coordinates(const SVec& v) const;
  bool operator==(const Subspace& o) const;

  /// Canonical intersection of two subspaces.
  Subspace intersect(const Subspace& o) const;
};

Subspace kernel(const Mat& M);
int rank(const Mat& M);

/// Exact solve A x = b; empty optional when the system is inconsistent.
std::optional<std::vector<Cyc>> solve(const Mat& A, const std::vector<Cyc>& b);

Subspace eigenspace(const Mat& M, const Cyc& lambda);

/// Simultaneous eigenspace decomposition of commuting operators with
/// ops[i]^p = I; the component at (k_1..k_r) is the intersection of the
/// zeta^{k_i}-eigenspaces. Dimensions must sum to the ambient dimension.
std::map<std::vector<int>, Subspace> simultaneous_eigenspaces(const std::vector<Mat>& ops,
                                                              int p, const Cyc& zeta);

}  // namespace jgk

#endif
