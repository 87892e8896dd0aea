#include "ckforest/exact_linear.hpp"

#include <stdexcept>
#include <utility>

namespace ckforest {

IntSolveResult solve_integer_system(std::vector<std::vector<BigInt>> m,
                                    std::vector<BigInt> rhs) {
    const std::size_t rows = m.size();
    if (rhs.size() != rows)
        throw std::invalid_argument("solve_integer_system: shape mismatch");
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("solve_integer_system: ragged matrix");

    // augmented fraction-free elimination; entries stay integral (minors)
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);

    BigInt prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) {
            IntSolveResult r;
            r.status = SolveStatus::rank_deficient;
            return r;
        }
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j)
                m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }

    if (rank < cols) {
        IntSolveResult r;
        r.status = SolveStatus::rank_deficient;
        return r;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (m[i][cols] != 0) {
            IntSolveResult r;
            r.status = SolveStatus::inconsistent;
            return r;
        }

    IntSolveResult r;
    r.solution.assign(cols, BigRat(0));
    for (std::size_t i = cols; i-- > 0;) {
        BigRat acc(m[i][cols]);
        for (std::size_t j = i + 1; j < cols; ++j) acc -= BigRat(m[i][j]) * r.solution[j];
        r.solution[i] = acc / BigRat(m[i][i]);
    }
    return r;
}

RatSolveResult solve_rational_system(std::vector<std::vector<BigRat>> m,
                                     std::vector<BigRat> rhs) {
    const std::size_t rows = m.size();
    if (rhs.size() != rows)
        throw std::invalid_argument("solve_rational_system: shape mismatch");
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    for (auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("solve_rational_system: ragged matrix");
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);

    RatSolveResult r;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        BigRat p = m[rank][c];
        for (std::size_t j = c; j <= cols; ++j) m[rank][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            BigRat f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[rank][j];
        }
        r.pivot_columns.push_back(static_cast<int>(c));
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i)
        if (m[i][cols] != 0) return r;  // consistent stays false

    r.consistent = true;
    r.solution.assign(cols, BigRat(0));
    for (std::size_t i = 0; i < rank; ++i)
        r.solution[static_cast<std::size_t>(r.pivot_columns[i])] = m[i][cols];
    return r;
}

}  // namespace ckforest
