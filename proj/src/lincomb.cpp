#include "ckforest/lincomb.hpp"

namespace ckforest {

LinComb LinComb::of(Forest f, BigInt c) {
    LinComb x;
    x.add_term(f, c);
    return x;
}

BigInt LinComb::coefficient(const Forest& f) const {
    auto it = terms_.find(f);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::optional<int> LinComb::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.vertex_count();
    for (const auto& [f, c] : terms_)
        if (f.vertex_count() != d) return std::nullopt;
    return d;
}

void LinComb::add_term(const Forest& f, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [f, c] : o.terms_) add_term(f, c);
    return *this;
}

LinComb& LinComb::operator-=(const LinComb& o) {
    for (const auto& [f, c] : o.terms_) add_term(f, -c);
    return *this;
}

LinComb& LinComb::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [f, v] : terms_) v *= c;
    return *this;
}

LinComb operator*(const LinComb& a, const LinComb& b) {
    LinComb r;
    for (const auto& [fa, ca] : a.terms())
        for (const auto& [fb, cb] : b.terms())
            r.add_term(concat(fa, fb), ca * cb);
    return r;
}

Tensor Tensor::of(Forest left, Forest right, BigInt c) {
    Tensor t;
    t.add_term(left, right, c);
    return t;
}

Tensor Tensor::pure(const LinComb& left, const LinComb& right) {
    Tensor t;
    for (const auto& [fl, cl] : left.terms())
        for (const auto& [fr, cr] : right.terms())
            t.add_term(fl, fr, cl * cr);
    return t;
}

BigInt Tensor::coefficient(const Forest& l, const Forest& r) const {
    auto it = terms_.find({l, r});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Tensor::add_term(const Forest& l, const Forest& r, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Key{l, r}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor& Tensor::operator+=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Tensor& Tensor::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b) {
    Tensor r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            r.add_term(concat(ka.first, kb.first), concat(ka.second, kb.second), ca * cb);
    return r;
}

}  // namespace ckforest
