#pragma once

#include <map>
#include <optional>
#include <utility>

#include "ckforest/bigint.hpp"
#include "ckforest/forest.hpp"

namespace ckforest {

/// Finite formal sum of forests with integer coefficients. Zero
/// coefficients are never stored, so term-map equality is equality.
class LinComb {
public:
    LinComb() = default;

    static LinComb unit() { return of(Forest()); }
    static LinComb of(Forest f, BigInt c = 1);

    const std::map<Forest, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Forest& f) const;

    /// The common vertex count when every forest has the same one;
    /// nullopt for the zero element or mixed degrees.
    std::optional<int> homogeneous_degree() const;

    void add_term(const Forest& f, const BigInt& c);

    LinComb& operator+=(const LinComb& o);
    LinComb& operator-=(const LinComb& o);
    LinComb& operator*=(const BigInt& c);

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const BigInt& c) { return a *= c; }
    friend LinComb operator*(const BigInt& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= -1; }

    /// Bilinear extension of disjoint union.
    friend LinComb operator*(const LinComb& a, const LinComb& b);

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

private:
    std::map<Forest, BigInt> terms_;
};

/// Element of H (x) H: formal sum of forest pairs, left slot the trunk
/// (root side), right slot the pruned part.
class Tensor {
public:
    using Key = std::pair<Forest, Forest>;

    Tensor() = default;

    static Tensor of(Forest left, Forest right, BigInt c = 1);
    /// Bilinear product of two linear combinations into one tensor.
    static Tensor pure(const LinComb& left, const LinComb& right);

    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Forest& l, const Forest& r) const;

    void add_term(const Forest& l, const Forest& r, const BigInt& c);

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor& operator*=(const BigInt& c);

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(Tensor a, const BigInt& c) { return a *= c; }
    friend Tensor operator*(const BigInt& c, Tensor a) { return a *= c; }

    /// Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
    friend Tensor operator*(const Tensor& a, const Tensor& b);

    bool operator==(const Tensor& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor& o) const { return !(*this == o); }

private:
    std::map<Key, BigInt> terms_;
};

}  // namespace ckforest
