#pragma once

// Reference data shared by the unit tests and the acceptance suite: the
// tabulated P polynomials (built from their factored forms) and the
// delta-monomial shapes of the small coproducts.

#include <map>
#include <vector>

#include "ckforest/cm_coeffs.hpp"
#include "ckforest/dominant.hpp"

namespace ckforest::fixtures {

inline MultiPoly C(long long v) { return MultiPoly::constant(v); }
inline MultiPoly X(int i) { return MultiPoly::variable(i); }

/// The tabulated polynomials, keyed by dominant sequence. P_{2,1} carries
/// a corrected sign on its X3 term: the recursion yields -7*X3, which is
/// also what the vanishing lemma and the order-7 coefficients force.
inline std::map<DominantSeq, MultiPoly> tabulated_polys() {
    std::map<DominantSeq, MultiPoly> out;
    const MultiPoly m1 = X(1) - C(1);
    out[{}] = C(1);
    out[{1}] = X(1);
    out[{2}] = (X(1) - C(2)) * m1;
    out[{0, 1}] = m1;
    out[{1, 1}] = (C(2) * X(1) + X(2) - C(7)) * m1;
    out[{1, 0, 1}] = (C(2) * X(1) + X(2) + X(3) - C(11)) * m1;
    out[{2, 1}] = (C(3) * X(1) * X(2) + C(2) * X(1) * X(3) + X(2) * X(3) -
                   C(22) * X(1) - C(11) * X(2) - C(7) * X(3) + C(59)) *
                  m1;
    out[{1, 0, 0, 1}] = (C(2) * X(1) + X(2) + X(3) + X(4) - C(16)) * m1;
    out[{0, 1, 1}] = (C(6) * X(1) + C(3) * X(2) + X(3) - C(25)) * m1;
    out[{2, 0, 1}] = (C(3) * X(1) * X(2) + C(2) * X(1) * X(3) + X(2) * X(3) +
                      C(2) * X(1) * X(4) + X(2) * X(4) + X(3) * X(4) - C(34) * X(1) -
                      C(17) * X(2) - C(13) * X(3) - C(11) * X(4) + C(125)) *
                     m1;
    out[{1, 2}] = (C(6) * X(1) * X(2) + C(4) * X(1) * X(3) + C(2) * X(2) * X(3) +
                   C(2) * X(1) * X(4) + X(2) * X(4) - C(56) * X(1) - C(28) * X(2) -
                   C(14) * X(3) - C(7) * X(4) + C(160)) *
                  m1;
    out[{3, 1}] = (C(4) * X(1) * X(2) * X(3) + C(3) * X(1) * X(2) * X(4) +
                   C(2) * X(1) * X(3) * X(4) + X(2) * X(3) * X(4) - C(45) * X(1) * X(2) -
                   C(30) * X(1) * X(3) - C(15) * X(2) * X(3) - C(22) * X(1) * X(4) -
                   C(11) * X(2) * X(4) - C(7) * X(3) * X(4) + C(250) * X(1) +
                   C(125) * X(2) + C(81) * X(3) + C(59) * X(4) - C(605)) *
                  m1;
    return out;
}

/// The corrected product form (X1-2)(X1-1)(X2-4)(X3-6)...(X_{n-1}-2(n-1)).
inline MultiPoly corolla_poly(int n) {
    MultiPoly p = (X(1) - C(2)) * (X(1) - C(1));
    for (int k = 2; k <= n - 1; ++k) p = p * (X(k) - C(2 * k));
    return p;
}

/// A tensor of delta-monomials: entries (coefficient, left, right) with a
/// monomial given as (k, exponent) pairs.
struct MonomialTensorTerm {
    long long coefficient;
    std::vector<std::pair<int, int>> left;
    std::vector<std::pair<int, int>> right;
};

inline LinComb expand_monomial(const std::vector<std::pair<int, int>>& mono) {
    LinComb out = LinComb::unit();
    for (auto [k, e] : mono)
        for (int i = 0; i < e; ++i) out = out * delta(k);
    return out;
}

inline Tensor monomial_tensor(const std::vector<MonomialTensorTerm>& terms) {
    Tensor out;
    for (const MonomialTensorTerm& t : terms) {
        Tensor part = Tensor::pure(expand_monomial(t.left), expand_monomial(t.right));
        out += part * BigInt(t.coefficient);
    }
    return out;
}

/// Delta(delta_n) in delta-monomial form for n = 1..4.
inline Tensor expected_delta_coproduct(int n) {
    switch (n) {
        case 1:
            return monomial_tensor({{1, {{1, 1}}, {}}, {1, {}, {{1, 1}}}});
        case 2:
            return monomial_tensor(
                {{1, {{2, 1}}, {}}, {1, {}, {{2, 1}}}, {1, {{1, 1}}, {{1, 1}}}});
        case 3:
            return monomial_tensor({{1, {{3, 1}}, {}},
                                    {1, {}, {{3, 1}}},
                                    {3, {{2, 1}}, {{1, 1}}},
                                    {1, {{1, 1}}, {{2, 1}}},
                                    {1, {{1, 1}}, {{1, 2}}}});
        case 4:
            return monomial_tensor({{1, {{4, 1}}, {}},
                                    {1, {}, {{4, 1}}},
                                    {6, {{3, 1}}, {{1, 1}}},
                                    {4, {{2, 1}}, {{2, 1}}},
                                    {7, {{2, 1}}, {{1, 2}}},
                                    {1, {{1, 1}}, {{3, 1}}},
                                    {3, {{1, 1}}, {{2, 1}, {1, 1}}},
                                    {1, {{1, 1}}, {{1, 3}}}});
        default:
            throw std::invalid_argument("expected_delta_coproduct: only n <= 4");
    }
}

/// S(delta_n) coefficient tables for n = 1..3.
inline std::map<IndexSeq, BigInt> expected_coeff_table(int n) {
    switch (n) {
        case 1:
            return {{{1}, -1}};
        case 2:
            return {{{0, 1}, -1}, {{2, 0}, 1}};
        case 3:
            return {{{0, 0, 1}, -1}, {{1, 1, 0}, 4}, {{3, 0, 0}, -2}};
        default:
            throw std::invalid_argument("expected_coeff_table: only n <= 3");
    }
}

}  // namespace ckforest::fixtures
