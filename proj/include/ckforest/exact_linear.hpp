#pragma once

#include <vector>

#include "ckforest/bigint.hpp"

namespace ckforest {

enum class SolveStatus { unique, rank_deficient, inconsistent };

struct IntSolveResult {
    SolveStatus status = SolveStatus::unique;
    std::vector<BigRat> solution;  // valid when status == unique
};

/// Solve M x = rhs exactly for an integer matrix, possibly overdetermined,
/// by fraction-free (Bareiss) elimination. Requires full column rank and a
/// consistent system for a unique solution.
IntSolveResult solve_integer_system(std::vector<std::vector<BigInt>> m,
                                    std::vector<BigInt> rhs);

struct RatSolveResult {
    bool consistent = false;
    std::vector<int> pivot_columns;
    std::vector<BigRat> solution;  // particular solution, free columns at 0
};

/// Exact Gaussian elimination over rationals; returns a particular
/// solution of a consistent (possibly overdetermined) system.
RatSolveResult solve_rational_system(std::vector<std::vector<BigRat>> m,
                                     std::vector<BigRat> rhs);

}  // namespace ckforest
