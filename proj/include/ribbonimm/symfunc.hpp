#pragma once

// Symmetric polynomials in N variables with exact integer coefficients.
//
// A SymPoly is stored in the monomial symmetric basis: the coefficient of
// m_lambda(x_1..x_N) for every partition lambda with at most N parts.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ribbonimm/shapes.hpp"

namespace ril {

using Integer = boost::multiprecision::cpp_int;

class SymPoly {
 public:
  explicit SymPoly(int nvars = 0) : nvars_(nvars) {}

  static SymPoly constant(int nvars, const Integer& c);
  static SymPoly one(int nvars) { return constant(nvars, 1); }
  /// c * m_lambda; zero when lambda has more than nvars parts.
  static SymPoly monomial(int nvars, const Partition& lambda, const Integer& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Partition, Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coeff(const Partition& lambda) const;
  std::size_t num_terms() const { return coeffs_.size(); }

  /// Degree of the highest-degree term, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  /// Value at a point of length nvars.
  Integer evaluate(const std::vector<Integer>& point) const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Integer& c);
  void add_term(const Partition& lambda, const Integer& c);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(SymPoly a) { return a *= Integer(-1); }
  friend SymPoly operator*(SymPoly a, const Integer& c) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  bool operator==(const SymPoly& o) const { return nvars_ == o.nvars_ && coeffs_ == o.coeffs_; }

  /// "3*m[2,1] - m[1,1,1]"; zero is "0".
  std::string str() const;

 private:
  void check_same(const SymPoly& o) const;

  int nvars_;
  std::map<Partition, Integer> coeffs_;
};

/// Collects x^alpha terms for arbitrary exponent vectors of length N and
/// converts the (symmetric) total into a SymPoly.
class MonomialAccumulator {
 public:
  explicit MonomialAccumulator(int nvars) : nvars_(nvars) {}
  void add(const std::vector<int>& exponents, long long c = 1);
  bool empty() const { return terms_.empty(); }
  /// Throws InternalError if the collected polynomial is not symmetric.
  SymPoly to_sympoly() const;

 private:
  int nvars_;
  std::map<std::vector<int>, long long> terms_;
};

SymPoly mul(const SymPoly& p, const SymPoly& q);
SymPoly add(const SymPoly& p, const SymPoly& q);
SymPoly sub(const SymPoly& p, const SymPoly& q);
SymPoly scale(const SymPoly& p, const Integer& c);

class SchurExpansion {
 public:
  explicit SchurExpansion(int nvars = 0) : nvars_(nvars) {}
  SchurExpansion(int nvars, std::map<Partition, Integer> coeffs);

  int nvars() const { return nvars_; }
  const std::map<Partition, Integer>& coeffs() const { return coeffs_; }
  Integer coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Integer& c);
  bool is_zero() const { return coeffs_.empty(); }

  bool schur_positive() const;
  /// Terms with strictly negative coefficient, lex-descending.
  std::vector<std::pair<Partition, Integer>> negative_terms() const;
  /// True when every term has degree at most nvars.
  bool faithful() const;

  /// Sum of c_lambda * s_lambda back in the monomial basis.
  SymPoly to_sympoly() const;

  /// "2*s[3,1] + s[2,2] - s[2,1,1]", lex-descending; zero is "0".
  std::string str() const;

  bool operator==(const SchurExpansion& o) const { return nvars_ == o.nvars_ && coeffs_ == o.coeffs_; }

 private:
  int nvars_;
  std::map<Partition, Integer> coeffs_;
};

struct SSYT {
  SkewShape shape;
  /// Entries aligned with shape.cells() (row-major).
  std::vector<int> entries;

  /// Counts of each value 1..N.
  std::vector<int> weight(int N) const;
  bool valid() const;
};

/// Calls f for every SSYT of shape with entries in 1..N, in row-major
/// lexicographic order of the entry vector.  Returning false from f stops.
void for_each_ssyt(const SkewShape& shape, int N, const std::function<bool(const std::vector<int>&)>& f);
std::vector<SSYT> enumerate_ssyt(const SkewShape& shape, int N);
/// Number of SSYT (Kostka sum), computed without enumeration.
Integer count_ssyt(const SkewShape& shape, int N);

/// Skew Kostka number: SSYT of shape with content exactly nu.
Integer skew_kostka(const SkewShape& shape, const std::vector<int>& content);

SymPoly skew_schur(const SkewShape& shape, int N);
SymPoly schur_poly(const Partition& lambda, int N);
/// Complete homogeneous h_k; 1 for k = 0 and 0 for k < 0.
SymPoly complete_h(int k, int N);
/// Elementary e_k; 1 for k = 0 and 0 for k < 0 or k > N.
SymPoly elementary_e(int k, int N);

class SFMatrix {
 public:
  SFMatrix() = default;
  SFMatrix(int n, int nvars);

  int n() const { return n_; }
  int nvars() const { return nvars_; }
  const SymPoly& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, SymPoly p);

  /// Rows and columns given as 0-based index lists of equal length.
  SFMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  bool operator==(const SFMatrix& o) const = default;

 private:
  int n_ = 0;
  int nvars_ = 0;
  std::vector<SymPoly> entries_;
};

/// Exact determinant by column-subset expansion (n <= 8).
SymPoly determinant(const SFMatrix& M);

/// Minor on 0-based rows/cols; the empty minor is 1.
SymPoly minor(const SFMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols);

SchurExpansion expand_schur(const SymPoly& p);

std::pair<bool, SchurExpansion> is_schur_positive(const SymPoly& p);

/// Littlewood-Richardson coefficient c^lambda_{mu,nu} by expanding s_{lambda/mu}.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Partitions of d with at most maxparts parts, lex-descending.
std::vector<Partition> partitions_of(int d, int maxparts);

}  // namespace ril
