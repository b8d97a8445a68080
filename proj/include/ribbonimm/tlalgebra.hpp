#pragma once

// Temperley-Lieb algebra TL_n(2) and Temperley-Lieb immanants.
//
// Boundary points are numbered 0..n-1 for L_1..L_n and n..2n-1 for R_1..R_n.
// A product m1 * m2 glues the R side of m1 to the L side of m2.  Products
// of permutations are read left to right: the word (i_1, ..., i_k) stands
// for the permutation obtained by applying s_{i_1} first, so in one-line
// notation w = s_{i_k} o ... o s_{i_1}.

#include <map>
#include <string>
#include <vector>

#include "ribbonimm/symfunc.hpp"

namespace ril {

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation with values 1..n; throws InvalidInput otherwise.
  explicit Permutation(std::vector<int> one_line);
  /// Parses "2143" (single digits) or "2,1,4,3".
  static Permutation parse(const std::string& text);
  static Permutation identity(int n);
  /// w0: i -> n+1-i.
  static Permutation longest(int n);
  /// All of S_n in lexicographic order of one-line notation.
  static std::vector<Permutation> all(int n);

  int n() const { return static_cast<int>(w_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  int length() const;
  int sign() const { return length() % 2 ? -1 : 1; }
  Permutation inverse() const;
  /// (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const;
  /// this * s_i: swaps positions i and i+1.
  Permutation times_s(int i) const;
  /// s_i * this: swaps values i and i+1.
  Permutation s_times(int i) const;
  bool has_left_descent(int i) const;
  bool has_right_descent(int i) const;

  /// Lexicographically smallest reduced word (letters 1..n-1); the first
  /// letter is a right descent.
  std::vector<int> reduced_word() const;
  /// Every reduced word, lexicographic order.
  std::vector<std::vector<int>> all_reduced_words() const;
  static Permutation from_word(int n, const std::vector<int>& word);

  bool avoids_321() const;
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

class NoncrossingMatching {
 public:
  NoncrossingMatching() = default;
  /// partner[p] for p in 0..2n-1; throws InvalidInput unless a noncrossing
  /// perfect matching.
  explicit NoncrossingMatching(std::vector<int> partner);
  static NoncrossingMatching identity(int n);
  static NoncrossingMatching generator(int n, int i);
  /// Parses the text form produced by str().
  static NoncrossingMatching parse(const std::string& text);

  int n() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
  const std::vector<int>& partners() const { return partner_; }

  static int L(int i) { return i - 1; }
  int R(int j) const { return n() + j - 1; }
  bool is_left(int p) const { return p < n(); }
  /// 1-based index of a point on its side.
  int index(int p) const { return is_left(p) ? p + 1 : p - n() + 1; }
  std::string point_name(int p) const;

  /// "(L1-R1)(L2-L3)(R2-R3)".
  std::string str() const;

  auto operator<=>(const NoncrossingMatching&) const = default;

 private:
  std::vector<int> partner_;
};

struct DiagramProduct {
  NoncrossingMatching matching;
  int loops = 0;
};

DiagramProduct diagram_mul(const NoncrossingMatching& m1, const NoncrossingMatching& m2);
NoncrossingMatching generator(int n, int i);

class TLElement {
 public:
  explicit TLElement(int n = 0) : n_(n) {}
  static TLElement basis(const NoncrossingMatching& m, const Integer& c = 1);

  int n() const { return n_; }
  const std::map<NoncrossingMatching, Integer>& terms() const { return terms_; }
  Integer coeff(const NoncrossingMatching& m) const;
  void add_term(const NoncrossingMatching& m, const Integer& c);

  TLElement& operator+=(const TLElement& o);
  friend TLElement operator*(const TLElement& a, const TLElement& b);
  bool operator==(const TLElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string str() const;

 private:
  int n_;
  std::map<NoncrossingMatching, Integer> terms_;
};

/// theta(w) = product of (t_i - 1) over the lexicographically smallest
/// reduced word of w.  Cached per n.
const TLElement& theta_of_perm(const Permutation& w);
/// Expansion along an explicit word (not cached).
TLElement theta_of_word(int n, const std::vector<int>& word);

NoncrossingMatching perm_to_matching(const Permutation& u);
/// Inverse of perm_to_matching.
Permutation matching_to_perm(const NoncrossingMatching& m);
std::vector<Permutation> enumerate_321_avoiding(int n);
/// All noncrossing matchings of size n, in 321-avoiding permutation order.
std::vector<NoncrossingMatching> all_matchings(int n);

Integer f_coeff(const Permutation& u, const Permutation& w);

/// Imm^TL_tau(A) by definition (n <= 6).
SymPoly imm_tl(const NoncrossingMatching& tau, const SFMatrix& A);
/// Every Temperley-Lieb immanant at once, keyed by matching.
std::map<NoncrossingMatching, SymPoly> imm_tl_all(const SFMatrix& A);

/// Calls f(w, prod_i A[i, w(i)]) for every w in S_n with a nonzero product.
void for_each_diagonal_product(const SFMatrix& A,
                               const std::function<void(const Permutation&, const SymPoly&)>& f);

/// L_i black iff i in I, R_j white iff j in J (1-based); every strand bicolored.
bool compatible(const NoncrossingMatching& tau, const std::vector<int>& I, const std::vector<int>& J);

}  // namespace ril
