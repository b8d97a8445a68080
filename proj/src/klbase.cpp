#include "ribbonimm/klbase.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "ribbonimm/errors.hpp"

namespace ril {

namespace {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(QPoly& acc, const QPoly& p, int shift, long long c) {
  if (p.empty() || c == 0) return;
  if (acc.size() < p.size() + static_cast<std::size_t>(shift)) acc.resize(p.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + static_cast<std::size_t>(shift)] += c * p[i];
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Permutation w0_times(const Permutation& v) {
  std::vector<int> out(v.one_line());
  for (int& x : out) x = v.n() + 1 - x;
  return Permutation(std::move(out));
}

int smallest_left_descent(const Permutation& w) {
  for (int i = 1; i < w.n(); ++i)
    if (w.has_left_descent(i)) return i;
  return 0;
}

}  // namespace

std::string qpoly_str(const QPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < p.size(); ++d) {
    long long c = p[d];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    long long a = c < 0 ? -c : c;
    if (d == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "q";
      if (d > 1) os << "^" << d;
    }
    first = false;
  }
  return first ? "0" : os.str();
}

long long qpoly_at_one(const QPoly& p) {
  long long s = 0;
  for (long long c : p) s += c;
  return s;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  if (x.n() != w.n()) throw InvalidInput("Bruhat comparison needs permutations of equal size");
  if (x.length() > w.length()) return false;
  int i = smallest_left_descent(w);
  if (i == 0) return x.length() == 0;
  Permutation sw = w.s_times(i);
  return bruhat_leq(x.has_left_descent(i) ? x.s_times(i) : x, sw);
}

bool bruhat_leq_tableau(const Permutation& x, const Permutation& w) {
  if (x.n() != w.n()) throw InvalidInput("Bruhat comparison needs permutations of equal size");
  const int n = x.n();
  std::vector<int> a, b;
  for (int k = 1; k < n; ++k) {
    a.assign(x.one_line().begin(), x.one_line().begin() + k);
    b.assign(w.one_line().begin(), w.one_line().begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int j = 0; j < k; ++j)
      if (a[static_cast<std::size_t>(j)] > b[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

// ------------------------------------------------------------------ table

KLTable::KLTable(int n) : n_(n) {
  if (n < 1 || n > 7) throw InvalidInput("Kazhdan-Lusztig tables are limited to 1 <= n <= 7");
  perms_ = Permutation::all(n);
  std::stable_sort(perms_.begin(), perms_.end(),
                   [](const Permutation& a, const Permutation& b) { return a.length() < b.length(); });
  const std::size_t m = perms_.size();
  std::map<Permutation, int> idx;
  for (std::size_t i = 0; i < m; ++i) {
    idx.emplace(perms_[i], static_cast<int>(i));
    length_.push_back(perms_[i].length());
  }
  left_.assign(static_cast<std::size_t>(n - 1), std::vector<int>(m));
  for (int s = 1; s < n; ++s)
    for (std::size_t x = 0; x < m; ++x) left_[static_cast<std::size_t>(s - 1)][x] = idx.at(perms_[x].s_times(s));
  leq_.assign(m * m, 0);
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t x = 0; x < m; ++x)
      leq_[w * m + x] = length_[x] <= length_[w] && bruhat_leq_tableau(perms_[x], perms_[w]);

  pool_.push_back({});
  std::map<QPoly, std::uint16_t> intern{{QPoly{}, 0}};
  auto intern_poly = [&](QPoly p) -> std::uint16_t {
    trim(p);
    auto it = intern.find(p);
    if (it != intern.end()) return it->second;
    if (pool_.size() >= 0xFFFF) throw InternalError("too many distinct Kazhdan-Lusztig polynomials");
    auto id = static_cast<std::uint16_t>(pool_.size());
    pool_.push_back(p);
    intern.emplace(std::move(p), id);
    return id;
  };
  table_.assign(m * m, 0);
  // mu_list[v] = (z, mu(z, v)) for z < v with nonzero mu.
  std::vector<std::vector<std::pair<int, long long>>> mu_list(m);
  for (std::size_t w = 0; w < m; ++w) {
    if (length_[w] == 0) {
      table_[w * m + w] = intern_poly({1});
      continue;
    }
    int s = smallest_left_descent(perms_[w]);
    const auto& ls = left_[static_cast<std::size_t>(s - 1)];
    auto v = static_cast<std::size_t>(ls[w]);
    for (std::size_t x = 0; x < m; ++x) {
      if (!leq_[w * m + x]) continue;
      auto sx = static_cast<std::size_t>(ls[x]);
      int c = length_[sx] < length_[x] ? 1 : 0;
      QPoly p;
      add_shifted(p, poly_idx(static_cast<int>(sx), static_cast<int>(v)), 1 - c, 1);
      add_shifted(p, poly_idx(static_cast<int>(x), static_cast<int>(v)), c, 1);
      for (auto [z, mu] : mu_list[v]) {
        auto zz = static_cast<std::size_t>(z);
        if (length_[static_cast<std::size_t>(ls[zz])] > length_[zz]) continue;
        if (!leq_[zz * m + x]) continue;
        add_shifted(p, poly_idx(static_cast<int>(x), z), (length_[w] - length_[zz]) / 2, -mu);
      }
      table_[w * m + x] = intern_poly(std::move(p));
    }
    for (std::size_t z = 0; z < m; ++z) {
      if (z == w || !leq_[w * m + z]) continue;
      int d = length_[w] - length_[z];
      if (d % 2 == 0) continue;
      const QPoly& p = poly_idx(static_cast<int>(z), static_cast<int>(w));
      auto deg = static_cast<std::size_t>((d - 1) / 2);
      if (deg < p.size() && p[deg] != 0) mu_list[w].emplace_back(static_cast<int>(z), p[deg]);
    }
  }
}

int KLTable::index(const Permutation& w) const {
  if (w.n() != n_) throw InvalidInput("permutation size differs from the table");
  auto it = std::find(perms_.begin(), perms_.end(), w);
  return static_cast<int>(it - perms_.begin());
}

bool KLTable::leq(const Permutation& x, const Permutation& w) const {
  return leq_[static_cast<std::size_t>(index(w)) * perms_.size() + static_cast<std::size_t>(index(x))];
}

const QPoly& KLTable::poly(const Permutation& x, const Permutation& w) const { return poly_idx(index(x), index(w)); }

long long KLTable::mu(const Permutation& x, const Permutation& w) const {
  if (!leq(x, w) || x == w) return 0;
  int d = w.length() - x.length();
  if (d % 2 == 0) return 0;
  const QPoly& p = poly(x, w);
  auto deg = static_cast<std::size_t>((d - 1) / 2);
  return deg < p.size() ? p[deg] : 0;
}

std::string KLTable::dump() const {
  std::ostringstream os;
  const std::size_t m = perms_.size();
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t x = 0; x < m; ++x)
      if (leq_[w * m + x])
        os << perms_[x].str() << ' ' << perms_[w].str() << " : " << qpoly_str(poly_idx(static_cast<int>(x), static_cast<int>(w)))
           << '\n';
  return os.str();
}

const KLTable& kl_polynomials(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<KLTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<KLTable>(n);
  return *slot;
}

// --------------------------------------------------------------- oracle

namespace {

struct BarSolver {
  int n;
  std::vector<Permutation> all;
  std::map<std::pair<Permutation, Permutation>, QPoly> r_memo, p_memo;

  explicit BarSolver(int n_) : n(n_), all(Permutation::all(n_)) {}

  QPoly R(const Permutation& x, const Permutation& w) {
    if (!bruhat_leq(x, w)) return {};
    if (x == w) return {1};
    auto key = std::make_pair(x, w);
    if (auto it = r_memo.find(key); it != r_memo.end()) return it->second;
    int s = smallest_left_descent(w);
    Permutation sw = w.s_times(s), sx = x.s_times(s);
    QPoly out;
    if (x.has_left_descent(s)) {
      out = R(sx, sw);
    } else {
      add_shifted(out, R(x, sw), 1, 1);
      add_shifted(out, R(x, sw), 0, -1);
      add_shifted(out, R(sx, sw), 1, 1);
      trim(out);
    }
    r_memo.emplace(key, out);
    return out;
  }

  QPoly P(const Permutation& x, const Permutation& w) {
    if (!bruhat_leq(x, w)) return {};
    if (x == w) return {1};
    auto key = std::make_pair(x, w);
    if (auto it = p_memo.find(key); it != p_memo.end()) return it->second;
    int d = w.length() - x.length();
    QPoly sum;
    for (const auto& y : all) {
      if (y == x || !bruhat_leq(x, y) || !bruhat_leq(y, w)) continue;
      QPoly term = mul(R(x, y), P(y, w));
      add_shifted(sum, term, 0, 1);
    }
    QPoly out;
    for (std::size_t k = 0; k < sum.size() && static_cast<int>(k) <= (d - 1) / 2; ++k) out.push_back(-sum[k]);
    trim(out);
    p_memo.emplace(key, out);
    return out;
  }
};

}  // namespace

QPoly kl_poly_bar_solve(const Permutation& x, const Permutation& w) {
  if (x.n() != w.n()) throw InvalidInput("permutations of different sizes");
  if (w.n() > 6) throw InvalidInput("the bar-invariance solve is limited to n <= 6");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BarSolver>> solvers;
  std::lock_guard<std::mutex> lock(mu);
  auto& s = solvers[w.n()];
  if (!s) s = std::make_unique<BarSolver>(w.n());
  return s->P(x, w);
}

// ------------------------------------------------------------ immanants

namespace {

std::vector<std::pair<Permutation, SymPoly>> diagonal_products(const SFMatrix& A) {
  std::vector<std::pair<Permutation, SymPoly>> out;
  for_each_diagonal_product(A, [&](const Permutation& v, const SymPoly& p) { out.emplace_back(v, p); });
  return out;
}

void check_size(const SFMatrix& A) {
  if (A.n() < 1 || A.n() > 6) throw InvalidInput("Kazhdan-Lusztig immanants need 1 <= n <= 6");
}

SymPoly imm_from_products(const KLTable& table, const Permutation& w,
                          const std::vector<std::pair<Permutation, SymPoly>>& prods, int nvars) {
  SymPoly out(nvars);
  Permutation w0w = w0_times(w);
  for (const auto& [v, p] : prods) {
    if (!table.leq(w, v)) continue;
    long long c = qpoly_at_one(table.poly(w0_times(v), w0w));
    if ((v.length() - w.length()) % 2) c = -c;
    if (c != 0) out += p * Integer(c);
  }
  return out;
}

}  // namespace

SymPoly imm_kl(const Permutation& w, const SFMatrix& A) {
  check_size(A);
  if (w.n() != A.n()) throw InvalidInput("permutation size differs from the matrix dimension");
  return imm_from_products(kl_polynomials(A.n()), w, diagonal_products(A), A.nvars());
}

std::map<Permutation, SymPoly> imm_kl_all(const SFMatrix& A) {
  check_size(A);
  const KLTable& table = kl_polynomials(A.n());
  auto prods = diagonal_products(A);
  std::map<Permutation, SymPoly> out;
  for (const auto& w : table.perms()) out.emplace(w, imm_from_products(table, w, prods, A.nvars()));
  return out;
}

bool kl_reconstruction_exact(const SFMatrix& A) {
  check_size(A);
  const KLTable& table = kl_polynomials(A.n());
  auto imm = imm_kl_all(A);
  std::map<Permutation, SymPoly> direct;
  for (auto& [v, p] : diagonal_products(A)) direct.emplace(v, p);
  std::map<Permutation, SymPoly> recovered;
  const auto& perms = table.perms();
  for (auto it = perms.rbegin(); it != perms.rend(); ++it) {
    const Permutation& w = *it;
    SymPoly d = imm.at(w);
    Permutation w0w = w0_times(w);
    for (const auto& [v, dv] : recovered) {
      if (v == w || !table.leq(w, v)) continue;
      long long c = qpoly_at_one(table.poly(w0_times(v), w0w));
      if ((v.length() - w.length()) % 2) c = -c;
      if (c != 0) d -= dv * Integer(c);
    }
    recovered.emplace(w, std::move(d));
  }
  for (const auto& w : perms) {
    auto it = direct.find(w);
    SymPoly expect = it == direct.end() ? SymPoly(A.nvars()) : it->second;
    if (!(recovered.at(w) == expect)) return false;
  }
  return true;
}

std::vector<KLTypeMismatch> kl_tl_crosscheck(const SFMatrix& A) {
  check_size(A);
  auto tl = imm_tl_all(A);
  std::vector<KLTypeMismatch> out;
  for (const auto& w : enumerate_321_avoiding(A.n())) {
    NoncrossingMatching tau = perm_to_matching(w);
    SymPoly kl = imm_kl(w, A);
    if (!(kl == tl.at(tau))) out.push_back({w, tau, kl, tl.at(tau)});
  }
  return out;
}

KLReport kl_positivity(const SFMatrix& A) {
  KLReport report;
  report.nvars = A.nvars();
  for (auto& [w, p] : imm_kl_all(A)) {
    SchurExpansion e = expand_schur(p);
    KLCertificate cert{w, e, e.negative_terms()};
    if (!cert.negative.empty()) report.negatives.push_back(cert);
    report.terms.push_back(std::move(cert));
  }
  return report;
}

KLReport conjecture12_harness(const RibbonDecomposition& dec, int N) {
  if (dec.length() > 5) throw InvalidInput("the Kazhdan-Lusztig harness is limited to at most 5 sections");
  return kl_positivity(build(dec, N).matrix);
}

}  // namespace ril
