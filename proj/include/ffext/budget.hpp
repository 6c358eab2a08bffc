#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>

namespace ffext {

/// Thrown when an enumeration exceeds the installed candidate budget.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("candidate budget exceeded") {}
};

/// Process-wide safety bound on enumeration work. One logical command per
/// process: install at most one budget at a time (RAII). A limit of 0 means
/// unlimited, which is the default when no budget is installed.
class CandidateBudget {
public:
    explicit CandidateBudget(std::uint64_t limit);
    ~CandidateBudget();
    CandidateBudget(const CandidateBudget&) = delete;
    CandidateBudget& operator=(const CandidateBudget&) = delete;

    /// Called by enumerators once per emitted candidate.
    static void charge(std::uint64_t n = 1);
};

}  // namespace ffext
