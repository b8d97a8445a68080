#include "ribbonimm/symfunc.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <tuple>

#include "ribbonimm/errors.hpp"

namespace ril {

namespace {

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Padded exponent vector, ascending (ready for next_permutation).
std::vector<int> padded_ascending(const Partition& p, int N) {
  std::vector<int> v(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < p.length(); ++i) v[static_cast<std::size_t>(N - 1 - i)] = p[i];
  return v;
}

// Number of distinct rearrangements of lambda padded with zeros to N slots.
Integer orbit_size(const Partition& p, int N) {
  Integer r = factorial(N);
  std::map<int, int> mult;
  mult[0] = N - p.length();
  for (int x : p.parts()) ++mult[x];
  for (auto [v, m] : mult) r /= factorial(m);
  return r;
}

std::string format_terms(const std::map<Partition, Integer>& coeffs, char basis) {
  if (coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    Integer c = it->second;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (c != 1) s += c.str() + "*";
    s += basis;
    s += it->first.str();
    first = false;
  }
  return s;
}

using ProductKey = std::tuple<Partition, Partition, int>;
using ProductTable = std::vector<std::pair<Partition, Integer>>;

std::mutex product_mutex;
std::map<ProductKey, ProductTable> product_cache;

// m_alpha * m_beta in N variables.  Enumerate the orbit of beta against the
// fixed vector alpha, then rescale by |orbit alpha| / |orbit nu|.
const ProductTable& monomial_product(const Partition& alpha_in, const Partition& beta_in, int N) {
  Partition alpha = alpha_in, beta = beta_in;
  if (orbit_size(beta, N) > orbit_size(alpha, N)) std::swap(alpha, beta);
  ProductKey key{alpha, beta, N};
  {
    std::lock_guard<std::mutex> lock(product_mutex);
    auto it = product_cache.find(key);
    if (it != product_cache.end()) return it->second;
  }
  std::vector<int> a(static_cast<std::size_t>(N), 0);
  for (int i = 0; i < alpha.length(); ++i) a[static_cast<std::size_t>(i)] = alpha[i];
  std::vector<int> b = padded_ascending(beta, N);
  std::map<Partition, Integer> counts;
  std::vector<int> sum(static_cast<std::size_t>(N));
  do {
    for (int i = 0; i < N; ++i) sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
    counts[Partition::from_unsorted(sum)] += 1;
  } while (std::next_permutation(b.begin(), b.end()));
  Integer oa = orbit_size(alpha, N);
  ProductTable table;
  for (auto& [nu, cnt] : counts) {
    Integer num = cnt * oa;
    Integer on = orbit_size(nu, N);
    if (num % on != 0) throw InternalError("monomial product not integral");
    table.emplace_back(nu, num / on);
  }
  std::lock_guard<std::mutex> lock(product_mutex);
  return product_cache.emplace(key, std::move(table)).first->second;
}

}  // namespace

// ------------------------------------------------------------------ SymPoly

SymPoly SymPoly::constant(int nvars, const Integer& c) {
  SymPoly p(nvars);
  p.add_term(Partition{}, c);
  return p;
}

SymPoly SymPoly::monomial(int nvars, const Partition& lambda, const Integer& c) {
  SymPoly p(nvars);
  if (lambda.length() <= nvars) p.add_term(lambda, c);
  return p;
}

Integer SymPoly::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

int SymPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : coeffs_) d = std::max(d, k.size());
  return d;
}

bool SymPoly::is_homogeneous() const {
  if (coeffs_.empty()) return true;
  int d = coeffs_.begin()->first.size();
  for (const auto& [k, c] : coeffs_)
    if (k.size() != d) return false;
  return true;
}

Integer SymPoly::evaluate(const std::vector<Integer>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw InvalidInput("evaluation point has wrong length");
  Integer total = 0;
  for (const auto& [lambda, c] : coeffs_) {
    std::vector<int> e = padded_ascending(lambda, nvars_);
    Integer orbit_sum = 0;
    do {
      Integer term = 1;
      for (int i = 0; i < nvars_; ++i) term *= boost::multiprecision::pow(point[static_cast<std::size_t>(i)], static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
      orbit_sum += term;
    } while (std::next_permutation(e.begin(), e.end()));
    total += c * orbit_sum;
  }
  return total;
}

void SymPoly::check_same(const SymPoly& o) const {
  if (nvars_ != o.nvars_)
    throw InvalidInput("nvars mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
}

void SymPoly::add_term(const Partition& lambda, const Integer& c) {
  if (c == 0) return;
  if (lambda.length() > nvars_) throw InvalidInput("monomial " + lambda.str() + " needs more than " + std::to_string(nvars_) + " variables");
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  check_same(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  check_same(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.check_same(b);
  SymPoly out(a.nvars_);
  for (const auto& [ka, ca] : a.coeffs_) {
    for (const auto& [kb, cb] : b.coeffs_) {
      Integer cab = ca * cb;
      if (ka.empty()) {
        out.add_term(kb, cab);
      } else if (kb.empty()) {
        out.add_term(ka, cab);
      } else {
        for (const auto& [nu, c] : monomial_product(ka, kb, a.nvars_)) out.add_term(nu, cab * c);
      }
    }
  }
  return out;
}

std::string SymPoly::str() const { return format_terms(coeffs_, 'm'); }

void MonomialAccumulator::add(const std::vector<int>& exponents, long long c) {
  if (static_cast<int>(exponents.size()) != nvars_) throw InvalidInput("exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly MonomialAccumulator::to_sympoly() const {
  SymPoly p(nvars_);
  std::map<Partition, std::pair<long long, std::size_t>> seen;
  for (const auto& [e, c] : terms_) {
    Partition lambda = Partition::from_unsorted(e);
    auto [it, inserted] = seen.try_emplace(lambda, c, 1);
    if (!inserted) {
      if (it->second.first != c) throw InternalError("accumulated polynomial is not symmetric at " + lambda.str());
      ++it->second.second;
    }
  }
  for (const auto& [lambda, cc] : seen) {
    if (Integer(cc.second) != orbit_size(lambda, nvars_))
      throw InternalError("accumulated polynomial is not symmetric at " + lambda.str());
    p.add_term(lambda, cc.first);
  }
  return p;
}

SymPoly mul(const SymPoly& p, const SymPoly& q) { return p * q; }
SymPoly add(const SymPoly& p, const SymPoly& q) { return p + q; }
SymPoly sub(const SymPoly& p, const SymPoly& q) { return p - q; }
SymPoly scale(const SymPoly& p, const Integer& c) { return p * c; }

// ----------------------------------------------------------- SchurExpansion

SchurExpansion::SchurExpansion(int nvars, std::map<Partition, Integer> coeffs) : nvars_(nvars) {
  for (auto& [k, c] : coeffs) add_term(k, c);
}

Integer SchurExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void SchurExpansion::add_term(const Partition& lambda, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

bool SchurExpansion::schur_positive() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::vector<std::pair<Partition, Integer>> SchurExpansion::negative_terms() const {
  std::vector<std::pair<Partition, Integer>> out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    if (it->second < 0) out.emplace_back(it->first, it->second);
  return out;
}

bool SchurExpansion::faithful() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const auto& kv) { return kv.first.size() <= nvars_; });
}

SymPoly SchurExpansion::to_sympoly() const {
  SymPoly p(nvars_);
  for (const auto& [lambda, c] : coeffs_) p += schur_poly(lambda, nvars_) * c;
  return p;
}

std::string SchurExpansion::str() const { return format_terms(coeffs_, 's'); }

// --------------------------------------------------------------------- SSYT

std::vector<int> SSYT::weight(int N) const {
  std::vector<int> w(static_cast<std::size_t>(N), 0);
  for (int e : entries)
    if (e >= 1 && e <= N) ++w[static_cast<std::size_t>(e - 1)];
  return w;
}

bool SSYT::valid() const {
  auto cells = shape.cells();
  if (cells.size() != entries.size()) return false;
  std::map<Cell, int> at;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (entries[k] < 1) return false;
    at[{cells[k].row, cells[k].col}] = entries[k];
  }
  for (const auto& [c, v] : at) {
    auto right = at.find({c.row, c.col + 1});
    if (right != at.end() && right->second < v) return false;
    auto below = at.find({c.row + 1, c.col});
    if (below != at.end() && below->second <= v) return false;
  }
  return true;
}

namespace {

struct CellLinks {
  std::vector<int> left;
  std::vector<int> above;
};

CellLinks links_for(const std::vector<ContentCell>& cells) {
  std::map<Cell, int> index;
  for (std::size_t k = 0; k < cells.size(); ++k) index[{cells[k].row, cells[k].col}] = static_cast<int>(k);
  CellLinks l;
  for (const auto& c : cells) {
    auto lt = index.find({c.row, c.col - 1});
    auto up = index.find({c.row - 1, c.col});
    l.left.push_back(lt == index.end() ? -1 : lt->second);
    l.above.push_back(up == index.end() ? -1 : up->second);
  }
  return l;
}

}  // namespace

void for_each_ssyt(const SkewShape& shape, int N, const std::function<bool(const std::vector<int>&)>& f) {
  auto cells = shape.cells();
  const int n = static_cast<int>(cells.size());
  if (n == 0) {
    f({});
    return;
  }
  if (N <= 0) return;
  auto links = links_for(cells);
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  auto lower = [&](int k) {
    int lo = 1;
    if (links.left[k] >= 0) lo = std::max(lo, e[links.left[k]]);
    if (links.above[k] >= 0) lo = std::max(lo, e[links.above[k]] + 1);
    return lo;
  };
  int k = 0;
  e[0] = lower(0) - 1;
  while (k >= 0) {
    ++e[k];
    if (e[k] > N) {
      --k;
      continue;
    }
    if (k == n - 1) {
      if (!f(e)) return;
      continue;
    }
    ++k;
    e[k] = lower(k) - 1;
  }
}

std::vector<SSYT> enumerate_ssyt(const SkewShape& shape, int N) {
  std::vector<SSYT> out;
  for_each_ssyt(shape, N, [&](const std::vector<int>& e) {
    out.push_back({shape, e});
    return true;
  });
  return out;
}

namespace {

struct KostkaSolver {
  std::vector<int> inner;
  std::vector<int> content;
  std::map<std::pair<std::vector<int>, int>, Integer> memo;

  // SSYT of rho/inner with content (content[0..k-1]).
  Integer count(const std::vector<int>& rho, int k) {
    if (k == 0) {
      for (std::size_t i = 0; i < rho.size(); ++i)
        if (rho[i] != inner[i]) return 0;
      return 1;
    }
    auto key = std::make_pair(rho, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer total = 0;
    std::vector<int> next = rho;
    strip(rho, next, 0, content[static_cast<std::size_t>(k - 1)], k, total);
    memo.emplace(std::move(key), total);
    return total;
  }

  // Remove a horizontal strip of the remaining size from rows i.. of rho.
  void strip(const std::vector<int>& rho, std::vector<int>& next, std::size_t i, int remaining, int k, Integer& total) {
    if (i == rho.size()) {
      if (remaining == 0) total += count(next, k - 1);
      return;
    }
    int below = i + 1 < rho.size() ? rho[i + 1] : 0;
    int floor = std::max(inner[i], below);
    int max_take = std::min(remaining, rho[i] - floor);
    for (int take = 0; take <= max_take; ++take) {
      next[i] = rho[i] - take;
      strip(rho, next, i + 1, remaining - take, k, total);
    }
    next[i] = rho[i];
  }
};

}  // namespace

Integer skew_kostka(const SkewShape& shape, const std::vector<int>& content) {
  int total = std::accumulate(content.begin(), content.end(), 0);
  if (total != shape.size()) return 0;
  for (int c : content)
    if (c < 0) return 0;
  KostkaSolver solver;
  int rows = shape.outer().length();
  std::vector<int> rho(static_cast<std::size_t>(rows));
  solver.inner.resize(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    rho[static_cast<std::size_t>(i)] = shape.outer()[i];
    solver.inner[static_cast<std::size_t>(i)] = shape.inner()[i];
  }
  solver.content = content;
  return solver.count(rho, static_cast<int>(content.size()));
}

std::vector<Partition> partitions_of(int d, int maxparts) {
  std::vector<Partition> out;
  if (d < 0) return out;
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == maxparts) return;
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

SymPoly skew_schur(const SkewShape& shape, int N) {
  SymPoly p(N);
  for (const auto& nu : partitions_of(shape.size(), N)) p.add_term(nu, skew_kostka(shape, nu.parts()));
  return p;
}

SymPoly schur_poly(const Partition& lambda, int N) {
  static std::mutex mu;
  static std::map<std::pair<Partition, int>, SymPoly> cache;
  auto key = std::make_pair(lambda, N);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SymPoly p = skew_schur(SkewShape(lambda), N);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(p)).first->second;
}

Integer count_ssyt(const SkewShape& shape, int N) {
  if (N <= 0) return shape.empty() ? 1 : 0;
  Integer total = 0;
  SymPoly s = skew_schur(shape, N);
  for (const auto& [nu, c] : s.coeffs()) total += c * orbit_size(nu, N);
  return total;
}

SymPoly complete_h(int k, int N) {
  if (k < 0) return SymPoly(N);
  return schur_poly(Partition(std::vector<int>{k}), N);
}

SymPoly elementary_e(int k, int N) {
  if (k < 0 || k > N) return SymPoly(N);
  return SymPoly::monomial(N, Partition(std::vector<int>(static_cast<std::size_t>(k), 1)));
}

// ------------------------------------------------------------------ SFMatrix

SFMatrix::SFMatrix(int n, int nvars)
    : n_(n), nvars_(nvars), entries_(static_cast<std::size_t>(n * n), SymPoly(nvars)) {
  if (n < 0) throw InvalidInput("negative matrix dimension");
}

void SFMatrix::set(int i, int j, SymPoly p) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw InvalidInput("matrix index out of range");
  if (p.nvars() != nvars_) throw InvalidInput("matrix entry has wrong nvars");
  entries_[static_cast<std::size_t>(i * n_ + j)] = std::move(p);
}

SFMatrix SFMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw InvalidInput("submatrix needs equally many rows and columns");
  SFMatrix out(static_cast<int>(rows.size()), nvars_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] < 0 || rows[i] >= n_ || cols[j] < 0 || cols[j] >= n_) throw InvalidInput("submatrix index out of range");
      out.set(static_cast<int>(i), static_cast<int>(j), at(rows[i], cols[j]));
    }
  return out;
}

SymPoly determinant(const SFMatrix& M) {
  const int n = M.n();
  if (n == 0) return SymPoly::one(M.nvars());
  if (n > 8) throw InvalidInput("determinant limited to n <= 8");
  std::vector<SymPoly> dp(std::size_t{1} << n, SymPoly(M.nvars()));
  dp[0] = SymPoly::one(M.nvars());
  for (unsigned S = 0; S < (1u << n); ++S) {
    if (dp[S].is_zero()) continue;
    int row = std::popcount(S);
    if (row == n) continue;
    for (int j = 0; j < n; ++j) {
      if (S & (1u << j)) continue;
      const SymPoly& a = M.at(row, j);
      if (a.is_zero()) continue;
      int above = std::popcount(S >> (j + 1));
      SymPoly term = dp[S] * a;
      if (above % 2) term *= Integer(-1);
      dp[S | (1u << j)] += term;
    }
  }
  return dp[(1u << n) - 1];
}

SymPoly minor(const SFMatrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.empty() && cols.empty()) return SymPoly::one(M.nvars());
  return determinant(M.submatrix(rows, cols));
}

SchurExpansion expand_schur(const SymPoly& p) {
  SchurExpansion out(p.nvars());
  SymPoly rest = p;
  std::size_t guard = 0;
  const std::size_t limit = 1'000'000;
  while (!rest.is_zero()) {
    if (++guard > limit) throw InternalError("expand_schur did not terminate");
    auto it = rest.coeffs().rbegin();
    Partition lambda = it->first;
    Integer c = it->second;
    out.add_term(lambda, c);
    rest -= schur_poly(lambda, p.nvars()) * c;
    if (rest.coeff(lambda) != 0) throw InternalError("expand_schur leading term did not cancel");
  }
  return out;
}

std::pair<bool, SchurExpansion> is_schur_positive(const SymPoly& p) {
  SchurExpansion e = expand_schur(p);
  bool ok = e.schur_positive();
  return {ok, std::move(e)};
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!lambda.contains(mu)) return 0;
  int N = std::max(1, lambda.size());
  return expand_schur(skew_schur(SkewShape(lambda, mu), N)).coeff(nu);
}

}  // namespace ril
