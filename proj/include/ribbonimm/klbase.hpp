#pragma once

// Kazhdan-Lusztig polynomials on S_n and Kazhdan-Lusztig immanants.

#include <cstdint>
#include <string>
#include <vector>

#include "ribbonimm/ribbonmat.hpp"

namespace ril {

/// Coefficients by degree; the zero polynomial is empty.
using QPoly = std::vector<long long>;

/// "1 + q + 2q^2"; zero is "0".
std::string qpoly_str(const QPoly& p);
long long qpoly_at_one(const QPoly& p);

/// Bruhat order via the subword property on a reduced word of w.
bool bruhat_leq(const Permutation& x, const Permutation& w);
/// Same order via the sorted-prefix (tableau) criterion.
bool bruhat_leq_tableau(const Permutation& x, const Permutation& w);

class KLTable {
 public:
  /// Full table of P_{x,w} for S_n, n <= 7.
  explicit KLTable(int n);

  int n() const { return n_; }
  const std::vector<Permutation>& perms() const { return perms_; }
  int index(const Permutation& w) const;

  bool leq(const Permutation& x, const Permutation& w) const;
  /// Zero unless x <= w.
  const QPoly& poly(const Permutation& x, const Permutation& w) const;
  long long mu(const Permutation& x, const Permutation& w) const;

  /// Lines "x w : polynomial" for every pair x <= w.
  std::string dump() const;

 private:
  const QPoly& poly_idx(int x, int w) const { return pool_[table_[static_cast<std::size_t>(w) * perms_.size() + x]]; }

  int n_;
  std::vector<Permutation> perms_;
  std::vector<int> length_;
  std::vector<std::vector<int>> left_;  // left_[i][x] = s_{i+1} x
  std::vector<char> leq_;
  std::vector<QPoly> pool_;            // interned polynomials; pool_[0] = 0
  std::vector<std::uint16_t> table_;   // w-major
};

/// Shared, immutable table for S_n.
const KLTable& kl_polynomials(int n);

/// Independent computation through R-polynomials and bar invariance.
QPoly kl_poly_bar_solve(const Permutation& x, const Permutation& w);

/// Imm_w(A) = sum over v >= w of (-1)^{l(v)-l(w)} P_{w0 v, w0 w}(1) prod_i A[i, v(i)].
SymPoly imm_kl(const Permutation& w, const SFMatrix& A);
std::map<Permutation, SymPoly> imm_kl_all(const SFMatrix& A);

/// Recovers every diagonal product from the Kazhdan-Lusztig immanants by
/// back substitution and compares with the direct products.
bool kl_reconstruction_exact(const SFMatrix& A);

struct KLTypeMismatch {
  Permutation w;
  NoncrossingMatching tau;
  SymPoly kl;
  SymPoly tl;
};

/// imm_kl(w) against imm_tl(perm_to_matching(w)) for 321-avoiding w.
std::vector<KLTypeMismatch> kl_tl_crosscheck(const SFMatrix& A);

struct KLCertificate {
  Permutation w;
  SchurExpansion expansion;
  std::vector<std::pair<Partition, Integer>> negative;
};

struct KLReport {
  int nvars = 0;
  std::vector<KLCertificate> terms;      // one per w
  std::vector<KLCertificate> negatives;  // subset with a negative coefficient
  bool pass() const { return negatives.empty(); }
};

KLReport kl_positivity(const SFMatrix& A);
KLReport conjecture12_harness(const RibbonDecomposition& dec, int N);

}  // namespace ril
