#pragma once

#include <cstdint>
#include <string>

namespace ril {

/// Maximum number of objects an enumeration may visit.  Read once from the
/// RIL_BUDGET environment variable; defaults to 200 million.
std::uint64_t enumeration_budget();

/// Counts visited objects and throws BudgetExceeded past the budget.
class BudgetMeter {
 public:
  explicit BudgetMeter(std::string what) : what_(std::move(what)), limit_(enumeration_budget()) {}
  void tick(std::uint64_t n = 1);
  std::uint64_t count() const { return count_; }

 private:
  std::string what_;
  std::uint64_t limit_;
  std::uint64_t count_ = 0;
};

}  // namespace ril
