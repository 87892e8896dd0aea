#pragma once

#include <map>
#include <span>
#include <vector>

#include "ckforest/bigint.hpp"

namespace ckforest {

/// Sparse multivariate polynomial over the integers in X1, X2, ...
/// Terms are keyed by exponent vectors with trailing zeros trimmed and
/// ordered graded-lexicographically, which fixes the printed form.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    struct GradedLexLess {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };

    using TermMap = std::map<Exponents, BigInt, GradedLexLess>;

    MultiPoly() = default;

    static MultiPoly constant(BigInt c);
    static MultiPoly variable(int index);  // X_index, 1-based

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Exponents& e) const;

    /// Highest total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Largest variable index appearing (0 for constants).
    int variable_count() const;

    void add_term(Exponents e, const BigInt& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const BigInt& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
    friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    BigInt evaluate(std::span<const BigInt> point) const;
    /// Replace X_index by the given value.
    MultiPoly substitute(int index, const BigInt& value) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

}  // namespace ckforest
