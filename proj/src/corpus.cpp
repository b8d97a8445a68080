#include "ribbonimm/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>
#include <tuple>

#include "ribbonimm/errors.hpp"
#include "ribbonimm/klbase.hpp"
#include "ribbonimm/shuffle.hpp"

namespace ril {

std::vector<SkewShape> connected_shapes(int max_cells) {
  // Rows are built top-down as column intervals (mu_i, lambda_i]; each new
  // row must overlap the previous one in at least one column.
  std::vector<SkewShape> out;
  std::vector<int> lam, mu;
  std::function<void(int)> rec = [&](int cells) {
    if (mu.back() == 0) out.emplace_back(Partition(lam), Partition::from_unsorted(mu));
    for (int l = std::min(lam.back(), max_cells + mu.back()); l >= 1; --l) {
      for (int m = std::min(mu.back(), l - 1); m >= 0; --m) {
        if (l <= mu.back()) continue;  // no shared column with the row above
        if (cells + (l - m) > max_cells) continue;
        lam.push_back(l);
        mu.push_back(m);
        rec(cells + (l - m));
        lam.pop_back();
        mu.pop_back();
      }
    }
  };
  for (int l = max_cells; l >= 1; --l)
    for (int m = l - 1; m >= 0; --m) {
      if (l - m > max_cells) continue;
      lam = {l};
      mu = {m};
      rec(l - m);
    }
  std::sort(out.begin(), out.end(), [](const SkewShape& x, const SkewShape& y) {
    return std::make_tuple(x.size(), x.outer(), x.inner()) < std::make_tuple(y.size(), y.outer(), y.inner());
  });
  return out;
}

std::vector<RibbonDecomposition> generate_corpus(const CorpusOptions& opts) {
  std::vector<RibbonDecomposition> out;
  std::set<std::tuple<std::vector<int>, std::vector<int>, std::string>> seen;
  for (const auto& shape : connected_shapes(opts.max_cells)) {
    int cmin = 0, cmax = 0;
    bool first = true;
    for (const auto& c : shape.cells()) {
      cmin = first ? c.content : std::min(cmin, c.content);
      cmax = first ? c.content : std::max(cmax, c.content);
      first = false;
    }
    const int L = cmax - cmin + 2;
    for (unsigned bits = 0; bits < (1u << L); ++bits) {
      std::vector<StepDir> seq(static_cast<std::size_t>(L));
      for (int i = 0; i < L; ++i) seq[static_cast<std::size_t>(i)] = (bits >> (L - 1 - i)) & 1u ? StepDir::Left : StepDir::Below;
      int p = 0;
      while (p < L && seq[static_cast<std::size_t>(p)] == seq.front()) ++p;
      int q = 0;
      while (q < L && seq[static_cast<std::size_t>(L - 1 - q)] == seq.back()) ++q;
      int middle = p == L ? 0 : L - p - q;
      if (middle > opts.max_window) continue;
      InfiniteRibbon R = InfiniteRibbon(cmin - 1, seq, seq.front(), seq.back()).canonical();
      try {
        RibbonDecomposition dec = decompose(shape, R);
        auto a = dec.a_tuple(), b = dec.b_tuple();
        int lo = *std::min_element(a.begin(), a.end()), hi = *std::max_element(b.begin(), b.end());
        if (seen.emplace(a, b, R.step_string(lo, hi)).second) out.push_back(std::move(dec));
      } catch (const IncompatibleShape&) {
      } catch (const NonConsecutiveCopies&) {
      }
    }
  }
  return out;
}

SweepKind parse_sweep_kind(const std::string& name) {
  if (name == "det") return SweepKind::Det;
  if (name == "1.1" || name == "thm1.1") return SweepKind::Theorem11;
  if (name == "conj1.2" || name == "1.2") return SweepKind::Conjecture12;
  if (name == "cor3.5" || name == "3.5") return SweepKind::Cor35;
  throw InvalidInput("unknown sweep '" + name + "' (expected 1.1, conj1.2, cor3.5 or det)");
}

std::string sweep_kind_name(SweepKind k) {
  switch (k) {
    case SweepKind::Det: return "det";
    case SweepKind::Theorem11: return "1.1";
    case SweepKind::Conjecture12: return "conj1.2";
    case SweepKind::Cor35: return "cor3.5";
  }
  return "det";
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

namespace {

std::string ribbon_text(const InfiniteRibbon& R) {
  std::string s = std::to_string(R.window_lo()) + ":";
  for (StepDir d : R.steps()) s += step_char(d);
  s += std::string(" tails ") + step_char(R.tail_lo()) + step_char(R.tail_hi());
  return s;
}

SymPoly product_of_minors(const SFMatrix& A, const std::vector<int>& I) {
  std::vector<int> rows, rest;
  for (int i = 1; i <= A.n(); ++i)
    (std::find(I.begin(), I.end(), i) != I.end() ? rows : rest).push_back(i - 1);
  return minor(A, rows, rows) * minor(A, rest, rest);
}

void run_one(const RibbonDecomposition& dec, SweepKind kind, int N, SweepItem& item) {
  switch (kind) {
    case SweepKind::Det: {
      RibbonMatrix rm = build(dec, N);
      item.pass = check_determinant(rm);
      if (!item.pass) item.detail = "det = " + expand_schur(determinant(rm.matrix)).str();
      return;
    }
    case SweepKind::Theorem11: {
      PositivityReport r = theorem1_harness(dec, N);
      item.pass = r.pass;
      for (const auto& t : r.types)
        if (!t.positive) item.detail += t.type.str() + ": " + t.expansion.str() + "; ";
      return;
    }
    case SweepKind::Conjecture12: {
      KLReport r = conjecture12_harness(dec, N);
      item.pass = r.pass();
      for (const auto& c : r.negatives) item.detail += c.w.str() + ": " + c.expansion.str() + "; ";
      return;
    }
    case SweepKind::Cor35: {
      RibbonMatrix rm = build(dec, N);
      SymPoly sum(N);
      for (auto& [tau, p] : imm_tl_all(rm.matrix)) sum += p;
      SymPoly expect = product_of_minors(rm.matrix, odd_indices(dec.length()));
      item.pass = sum == expect;
      if (!item.pass) item.detail = "sum = " + expand_schur(sum).str() + ", product = " + expand_schur(expect).str();
      return;
    }
  }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts) {
  auto corpus = generate_corpus(opts.corpus);
  SweepReport report;
  report.kind = opts.kind;
  report.items.resize(corpus.size());
  int max_len = opts.kind == SweepKind::Det            ? 8
                : opts.kind == SweepKind::Conjecture12 ? std::min(opts.max_length, 5)
                                                       : std::min(opts.max_length, 6);
  parallel_for(corpus.size(), opts.jobs, [&](std::size_t i) {
    const auto& dec = corpus[i];
    SweepItem& item = report.items[i];
    item.shape = dec.shape().str();
    item.ribbon = ribbon_text(dec.ribbon());
    item.a = dec.a_tuple();
    item.b = dec.b_tuple();
    item.nvars = opts.nvars > 0 ? opts.nvars : dec.shape().size();
    if (dec.length() > max_len) {
      item.skipped = true;
      item.detail = "more than " + std::to_string(max_len) + " sections";
      return;
    }
    run_one(dec, opts.kind, item.nvars, item);
  });
  for (const auto& it : report.items) {
    if (it.skipped) ++report.skipped;
    else if (it.pass) ++report.passed;
    else ++report.failed;
  }
  return report;
}

}  // namespace ril
