#include "ribbonimm/tlalgebra.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ribbonimm/errors.hpp"

namespace ril {

// -------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n() || seen[static_cast<std::size_t>(v)]) throw InvalidInput("not a permutation: " + str());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> v;
  if (text.find(',') != std::string::npos || text.find(' ') != std::string::npos) {
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (tok.empty()) continue;
      try {
        v.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw InvalidInput("bad permutation entry '" + tok + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InvalidInput("bad permutation '" + text + "'");
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (w_[static_cast<std::size_t>(i)] > w_[static_cast<std::size_t>(j)]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(w_.size());
  for (int i = 0; i < n(); ++i) v[static_cast<std::size_t>(w_[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (o.n() != n()) throw InvalidInput("permutation size mismatch");
  std::vector<int> v(w_.size());
  for (int i = 1; i <= n(); ++i) v[static_cast<std::size_t>(i - 1)] = (*this)(o(i));
  return Permutation(std::move(v));
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= n()) throw InvalidInput("simple reflection index out of range");
  Permutation p = *this;
  std::swap(p.w_[static_cast<std::size_t>(i - 1)], p.w_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::s_times(int i) const {
  if (i < 1 || i >= n()) throw InvalidInput("simple reflection index out of range");
  Permutation p = *this;
  for (int& v : p.w_) {
    if (v == i) v = i + 1;
    else if (v == i + 1) v = i;
  }
  return p;
}

bool Permutation::has_right_descent(int i) const {
  return w_[static_cast<std::size_t>(i - 1)] > w_[static_cast<std::size_t>(i)];
}

bool Permutation::has_left_descent(int i) const {
  auto pos_i = std::find(w_.begin(), w_.end(), i);
  auto pos_j = std::find(w_.begin(), w_.end(), i + 1);
  return pos_j < pos_i;
}

std::vector<int> Permutation::reduced_word() const {
  std::vector<int> word;
  Permutation cur = *this;
  while (true) {
    int i = 1;
    while (i < n() && !cur.has_right_descent(i)) ++i;
    if (i >= n()) break;
    word.push_back(i);
    cur = cur.times_s(i);
  }
  return word;
}

std::vector<std::vector<int>> Permutation::all_reduced_words() const {
  std::vector<std::vector<int>> out;
  if (length() == 0) {
    out.emplace_back();
    return out;
  }
  for (int i = 1; i < n(); ++i) {
    if (!has_right_descent(i)) continue;
    for (auto& tail : times_s(i).all_reduced_words()) {
      std::vector<int> w{i};
      w.insert(w.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
  Permutation p = identity(n);
  for (int i : word) p = p.s_times(i);
  return p;
}

bool Permutation::avoids_321() const {
  // 321-avoiding iff no entry has both a larger entry before it and a smaller
  // entry after it.
  for (int j = 0; j < n(); ++j) {
    bool larger_before = false, smaller_after = false;
    for (int i = 0; i < j; ++i) larger_before |= w_[static_cast<std::size_t>(i)] > w_[static_cast<std::size_t>(j)];
    for (int k = j + 1; k < n(); ++k) smaller_after |= w_[static_cast<std::size_t>(k)] < w_[static_cast<std::size_t>(j)];
    if (larger_before && smaller_after) return false;
  }
  return true;
}

std::string Permutation::str() const {
  bool small = n() <= 9;
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!small && i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

// ------------------------------------------------------ NoncrossingMatching

NoncrossingMatching::NoncrossingMatching(std::vector<int> partner) : partner_(std::move(partner)) {
  const int m = static_cast<int>(partner_.size());
  if (m % 2) throw InvalidInput("matching needs an even number of points");
  for (int p = 0; p < m; ++p) {
    int q = partner_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= m || q == p || partner_[static_cast<std::size_t>(q)] != p)
      throw InvalidInput("not a perfect matching");
  }
  const int nn = m / 2;
  auto circ = [nn](int p) { return p < nn ? p : 3 * nn - 1 - p; };
  for (int p = 0; p < m; ++p) {
    int a = circ(p), b = circ(partner_[static_cast<std::size_t>(p)]);
    if (a > b) continue;
    for (int q = 0; q < m; ++q) {
      int c = circ(q), d = circ(partner_[static_cast<std::size_t>(q)]);
      if (c > d) continue;
      if (a < c && c < b && b < d) throw InvalidInput("matching is crossing");
    }
  }
}

NoncrossingMatching NoncrossingMatching::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] = n + i;
    p[static_cast<std::size_t>(n + i)] = i;
  }
  return NoncrossingMatching(std::move(p));
}

NoncrossingMatching NoncrossingMatching::generator(int n, int i) {
  if (i < 1 || i >= n) throw InvalidInput("generator index out of range");
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k)] = n + k;
    p[static_cast<std::size_t>(n + k)] = k;
  }
  auto link = [&](int a, int b) {
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = a;
  };
  link(i - 1, i);
  link(n + i - 1, n + i);
  return NoncrossingMatching(std::move(p));
}

NoncrossingMatching generator(int n, int i) { return NoncrossingMatching::generator(n, i); }

std::string NoncrossingMatching::point_name(int p) const {
  return (is_left(p) ? "L" : "R") + std::to_string(index(p));
}

std::string NoncrossingMatching::str() const {
  std::string s;
  for (int p = 0; p < 2 * n(); ++p) {
    int q = partner(p);
    if (q < p) continue;
    s += "(" + point_name(p) + "-" + point_name(q) + ")";
  }
  return s;
}

NoncrossingMatching NoncrossingMatching::parse(const std::string& text) {
  std::vector<std::pair<std::pair<char, int>, std::pair<char, int>>> pairs;
  std::size_t pos = 0;
  auto read_point = [&](std::pair<char, int>& out) {
    if (pos >= text.size() || (text[pos] != 'L' && text[pos] != 'R')) throw InvalidInput("bad matching text '" + text + "'");
    out.first = text[pos++];
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw InvalidInput("bad matching text '" + text + "'");
    out.second = std::stoi(text.substr(start, pos - start));
  };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw InvalidInput("bad matching text '" + text + "'");
    ++pos;
    std::pair<char, int> a, b;
    read_point(a);
    if (pos >= text.size() || text[pos] != '-') throw InvalidInput("bad matching text '" + text + "'");
    ++pos;
    read_point(b);
    if (pos >= text.size() || text[pos] != ')') throw InvalidInput("bad matching text '" + text + "'");
    ++pos;
    pairs.push_back({a, b});
  }
  const int n = static_cast<int>(pairs.size());
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  auto idx = [n](std::pair<char, int> pt) {
    if (pt.second < 1 || pt.second > n) throw InvalidInput("matching point index out of range");
    return pt.first == 'L' ? pt.second - 1 : n + pt.second - 1;
  };
  for (auto& [a, b] : pairs) {
    int x = idx(a), y = idx(b);
    if (partner[static_cast<std::size_t>(x)] != -1 || partner[static_cast<std::size_t>(y)] != -1)
      throw InvalidInput("matching point used twice");
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  }
  return NoncrossingMatching(std::move(partner));
}

DiagramProduct diagram_mul(const NoncrossingMatching& m1, const NoncrossingMatching& m2) {
  const int n = m1.n();
  if (m2.n() != n) throw InvalidInput("matching size mismatch");
  // Outer points: m1's L side (0..n-1) and m2's R side (n..2n-1).
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  std::vector<bool> mid_seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < 2 * n; ++start) {
    if (partner[static_cast<std::size_t>(start)] != -1) continue;
    bool in_first = start < n;
    int p = in_first ? start : start;  // point index within the current diagram
    while (true) {
      int q = in_first ? m1.partner(p) : m2.partner(p);
      if (in_first && q < n) {
        partner[static_cast<std::size_t>(start)] = q;
        partner[static_cast<std::size_t>(q)] = start;
        break;
      }
      if (!in_first && q >= n) {
        partner[static_cast<std::size_t>(start)] = q;
        partner[static_cast<std::size_t>(q)] = start;
        break;
      }
      // q sits on the glued middle line.
      int mid = in_first ? q - n : q;
      mid_seen[static_cast<std::size_t>(mid)] = true;
      in_first = !in_first;
      p = in_first ? mid + n : mid;
    }
  }
  int loops = 0;
  for (int start = 0; start < n; ++start) {
    if (mid_seen[static_cast<std::size_t>(start)]) continue;
    ++loops;
    int mid = start;
    do {
      mid_seen[static_cast<std::size_t>(mid)] = true;
      int q = m1.partner(mid + n);  // within m1, stays on the R side
      int mid2 = q - n;
      mid_seen[static_cast<std::size_t>(mid2)] = true;
      mid = m2.partner(mid2);  // within m2, stays on the L side
    } while (mid != start);
  }
  return {NoncrossingMatching(std::move(partner)), loops};
}

// ----------------------------------------------------------------- TLElement

TLElement TLElement::basis(const NoncrossingMatching& m, const Integer& c) {
  TLElement e(m.n());
  e.add_term(m, c);
  return e;
}

Integer TLElement::coeff(const NoncrossingMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TLElement::add_term(const NoncrossingMatching& m, const Integer& c) {
  if (c == 0) return;
  if (m.n() != n_) throw InvalidInput("TL element size mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TLElement operator*(const TLElement& a, const TLElement& b) {
  if (a.n_ != b.n_) throw InvalidInput("TL element size mismatch");
  TLElement out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = diagram_mul(ma, mb);
      out.add_term(prod.matching, ca * cb * (Integer(1) << prod.loops));
    }
  return out;
}

std::string TLElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Integer a = c < 0 ? Integer(-c) : c;
    if (first) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (a != 1) s += a.str() + "*";
    s += m.str();
    first = false;
  }
  return s;
}

namespace {

TLElement theta_generator(int n, int i) {
  TLElement e = TLElement::basis(NoncrossingMatching::generator(n, i));
  e.add_term(NoncrossingMatching::identity(n), -1);
  return e;
}

struct MatchingTable {
  std::vector<Permutation> avoiding;
  std::map<Permutation, NoncrossingMatching> to_matching;
  std::map<NoncrossingMatching, Permutation> from_matching;
};

std::mutex table_mutex;
std::map<int, MatchingTable> matching_tables;
std::map<int, std::map<Permutation, TLElement>> theta_tables;

const MatchingTable& matchings_for(int n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = matching_tables.find(n);
  if (it != matching_tables.end()) return it->second;
  if (n < 1 || n > 8) throw InvalidInput("matching tables limited to 1 <= n <= 8");
  MatchingTable t;
  for (const auto& w : Permutation::all(n)) {
    if (!w.avoids_321()) continue;
    NoncrossingMatching m = NoncrossingMatching::identity(n);
    for (int i : w.reduced_word()) {
      auto prod = diagram_mul(m, NoncrossingMatching::generator(n, i));
      if (prod.loops != 0) throw InternalError("321-avoiding word produced a loop");
      m = prod.matching;
    }
    t.avoiding.push_back(w);
    t.to_matching.emplace(w, m);
    if (!t.from_matching.emplace(m, w).second) throw InternalError("perm_to_matching not injective");
  }
  return matching_tables.emplace(n, std::move(t)).first->second;
}

const std::map<Permutation, TLElement>& theta_for(int n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = theta_tables.find(n);
  if (it != theta_tables.end()) return it->second;
  if (n < 1 || n > 7) throw InvalidInput("theta tables limited to 1 <= n <= 7");
  std::map<Permutation, TLElement> theta;
  auto perms = Permutation::all(n);
  std::stable_sort(perms.begin(), perms.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  for (const auto& w : perms) {
    if (w.length() == 0) {
      theta.emplace(w, TLElement::basis(NoncrossingMatching::identity(n)));
      continue;
    }
    // The last letter of a reduced word is a left descent.
    int i = 1;
    while (!w.has_left_descent(i)) ++i;
    theta.emplace(w, theta.at(w.s_times(i)) * theta_generator(n, i));
  }
  return theta_tables.emplace(n, std::move(theta)).first->second;
}

}  // namespace

const TLElement& theta_of_perm(const Permutation& w) { return theta_for(w.n()).at(w); }

TLElement theta_of_word(int n, const std::vector<int>& word) {
  TLElement e = TLElement::basis(NoncrossingMatching::identity(n));
  for (int i : word) e = e * theta_generator(n, i);
  return e;
}

NoncrossingMatching perm_to_matching(const Permutation& u) {
  if (!u.avoids_321()) throw InvalidInput("permutation " + u.str() + " contains the pattern 321");
  return matchings_for(u.n()).to_matching.at(u);
}

Permutation matching_to_perm(const NoncrossingMatching& m) {
  const auto& t = matchings_for(m.n());
  auto it = t.from_matching.find(m);
  if (it == t.from_matching.end()) throw InternalError("matching not in the 321-avoiding table");
  return it->second;
}

std::vector<Permutation> enumerate_321_avoiding(int n) {
  if (n == 0) return {Permutation()};
  return matchings_for(n).avoiding;
}

std::vector<NoncrossingMatching> all_matchings(int n) {
  std::vector<NoncrossingMatching> out;
  for (const auto& u : enumerate_321_avoiding(n)) out.push_back(n == 0 ? NoncrossingMatching() : perm_to_matching(u));
  return out;
}

Integer f_coeff(const Permutation& u, const Permutation& w) {
  if (u.n() != w.n()) throw InvalidInput("permutation size mismatch");
  return theta_of_perm(w).coeff(perm_to_matching(u));
}

void for_each_diagonal_product(const SFMatrix& A,
                               const std::function<void(const Permutation&, const SymPoly&)>& f) {
  const int n = A.n();
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<SymPoly> partial(static_cast<std::size_t>(n + 1), SymPoly(A.nvars()));
  partial[0] = SymPoly::one(A.nvars());
  std::function<void(int, unsigned)> rec = [&](int row, unsigned used) {
    if (row == n) {
      f(Permutation(w), partial[static_cast<std::size_t>(n)]);
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used & (1u << j)) continue;
      const SymPoly& a = A.at(row, j);
      if (a.is_zero()) continue;
      w[static_cast<std::size_t>(row)] = j + 1;
      partial[static_cast<std::size_t>(row + 1)] = partial[static_cast<std::size_t>(row)] * a;
      rec(row + 1, used | (1u << j));
    }
  };
  rec(0, 0);
}

std::map<NoncrossingMatching, SymPoly> imm_tl_all(const SFMatrix& A) {
  const int n = A.n();
  if (n < 1 || n > 6) throw InvalidInput("imm_tl needs 1 <= n <= 6");
  std::map<NoncrossingMatching, SymPoly> out;
  for (const auto& m : all_matchings(n)) out.emplace(m, SymPoly(A.nvars()));
  for_each_diagonal_product(A, [&](const Permutation& w, const SymPoly& prod) {
    for (const auto& [m, c] : theta_of_perm(w).terms()) out.at(m) += prod * c;
  });
  return out;
}

SymPoly imm_tl(const NoncrossingMatching& tau, const SFMatrix& A) {
  if (tau.n() != A.n()) throw InvalidInput("type and matrix dimension differ");
  if (A.n() < 1 || A.n() > 6) throw InvalidInput("imm_tl needs 1 <= n <= 6");
  SymPoly out(A.nvars());
  for_each_diagonal_product(A, [&](const Permutation& w, const SymPoly& prod) {
    Integer c = theta_of_perm(w).coeff(tau);
    if (c != 0) out += prod * c;
  });
  return out;
}

bool compatible(const NoncrossingMatching& tau, const std::vector<int>& I, const std::vector<int>& J) {
  if (I.size() != J.size()) throw InvalidInput("compatible needs |I| = |J|");
  const int n = tau.n();
  std::vector<bool> black(static_cast<std::size_t>(2 * n), false);
  for (int i : I) {
    if (i < 1 || i > n) throw InvalidInput("index out of range");
    black[static_cast<std::size_t>(i - 1)] = true;
  }
  for (int j = 1; j <= n; ++j) black[static_cast<std::size_t>(n + j - 1)] = true;
  for (int j : J) {
    if (j < 1 || j > n) throw InvalidInput("index out of range");
    black[static_cast<std::size_t>(n + j - 1)] = false;
  }
  for (int p = 0; p < 2 * n; ++p)
    if (black[static_cast<std::size_t>(p)] == black[static_cast<std::size_t>(tau.partner(p))]) return false;
  return true;
}

}  // namespace ril
