#include "ribbonimm/budget.hpp"

#include <cstdlib>

#include "ribbonimm/errors.hpp"

namespace ril {

std::uint64_t enumeration_budget() {
  static const std::uint64_t value = [] {
    const char* env = std::getenv("RIL_BUDGET");
    if (!env || !*env) return std::uint64_t{200'000'000};
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return std::uint64_t{200'000'000};
    return static_cast<std::uint64_t>(v);
  }();
  return value;
}

void BudgetMeter::tick(std::uint64_t n) {
  count_ += n;
  if (count_ > limit_)
    throw BudgetExceeded(what_ + " exceeded the enumeration budget of " + std::to_string(limit_) +
                         " (set RIL_BUDGET to raise it)");
}

}  // namespace ril
