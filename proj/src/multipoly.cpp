#include "ckforest/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ckforest {

namespace {

int degree_of(const MultiPoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

void trim(MultiPoly::Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

bool MultiPoly::GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    std::size_t m = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        int ai = i < a.size() ? a[i] : 0;
        int bi = i < b.size() ? b[i] : 0;
        if (ai != bi) return ai < bi;
    }
    return false;
}

MultiPoly MultiPoly::constant(BigInt c) {
    MultiPoly p;
    p.add_term({}, c);
    return p;
}

MultiPoly MultiPoly::variable(int index) {
    if (index < 1) throw std::invalid_argument("MultiPoly::variable: index must be >= 1");
    Exponents e(static_cast<std::size_t>(index), 0);
    e.back() = 1;
    MultiPoly p;
    p.add_term(std::move(e), 1);
    return p;
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
    Exponents key = e;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

int MultiPoly::variable_count() const {
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return static_cast<int>(n);
}

void MultiPoly::add_term(Exponents e, const BigInt& c) {
    if (c == 0) return;
    trim(e);
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            MultiPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> point) const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) {
        if (e.size() > point.size())
            throw std::invalid_argument("MultiPoly::evaluate: not enough coordinates");
        BigInt term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substitute(int index, const BigInt& value) const {
    if (index < 1) throw std::invalid_argument("MultiPoly::substitute: index must be >= 1");
    auto pos = static_cast<std::size_t>(index - 1);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        BigInt coeff = c;
        Exponents rest = e;
        if (pos < rest.size()) {
            for (int k = 0; k < rest[pos]; ++k) coeff *= value;
            rest[pos] = 0;
        }
        r.add_term(std::move(rest), coeff);
    }
    return r;
}

}  // namespace ckforest
