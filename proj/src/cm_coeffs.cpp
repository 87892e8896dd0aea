#include "ckforest/cm_coeffs.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "ckforest/exact_linear.hpp"

namespace ckforest {

bool valid_index_seq(const IndexSeq& idx) {
    if (idx.empty()) return false;
    long long total = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0) return false;
        total += static_cast<long long>(k + 1) * idx[k];
    }
    return total == static_cast<long long>(idx.size());
}

std::vector<IndexSeq> index_seqs(int n) {
    if (n < 1) throw std::invalid_argument("index_seqs: n must be >= 1");
    std::vector<IndexSeq> out;
    IndexSeq acc(static_cast<std::size_t>(n), 0);
    // fill i_1, i_2, ... subject to the remaining weight; lex order falls
    // out of choosing the smaller entry first
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k > n) {
            if (remaining == 0) out.push_back(acc);
            return;
        }
        for (int i = 0; i * k <= remaining; ++i) {
            acc[static_cast<std::size_t>(k - 1)] = i;
            self(self, k + 1, remaining - i * k);
        }
        acc[static_cast<std::size_t>(k - 1)] = 0;
    };
    rec(rec, 1, n);
    return out;
}

const LinComb& delta(int n) {
    if (n < 1) throw std::invalid_argument("delta: n must be >= 1");
    static std::mutex mu;
    // deque keeps references stable as higher generators are appended
    static std::deque<LinComb> cache{LinComb::of(Forest(Tree()))};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) < n)
        cache.push_back(growth_N(cache.back()));
    return cache[static_cast<std::size_t>(n - 1)];
}

Tensor delta_coproduct(int n) { return coproduct(delta(n)); }

LinComb monomial_forest_expansion(const IndexSeq& idx) {
    if (!valid_index_seq(idx))
        throw std::invalid_argument("monomial_forest_expansion: invalid index sequence");
    LinComb out = LinComb::unit();
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (int e = 0; e < idx[k]; ++e) out = out * delta(static_cast<int>(k + 1));
    return out;
}

std::string to_string(CoeffMethod m) {
    switch (m) {
        case CoeffMethod::extraction: return "extraction";
        case CoeffMethod::recursion: return "recursion";
        case CoeffMethod::closed_form: return "closed-form";
    }
    return "?";
}

CoeffTable extract_coefficients(int n) {
    std::vector<IndexSeq> idxs = index_seqs(n);
    std::vector<LinComb> expansions;
    expansions.reserve(idxs.size());
    for (const IndexSeq& idx : idxs) expansions.push_back(monomial_forest_expansion(idx));

    std::vector<Forest> basis = enumerate_forests(n);
    LinComb target = antipode_recursive(delta(n));

    std::vector<std::vector<BigInt>> m(basis.size(), std::vector<BigInt>(idxs.size()));
    std::vector<BigInt> rhs(basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t c = 0; c < idxs.size(); ++c)
            m[r][c] = expansions[c].coefficient(basis[r]);
        rhs[r] = target.coefficient(basis[r]);
    }

    IntSolveResult res = solve_integer_system(std::move(m), std::move(rhs));
    if (res.status == SolveStatus::rank_deficient)
        throw std::runtime_error(
            "extract_coefficients: monomial expansion matrix is rank deficient");
    if (res.status == SolveStatus::inconsistent)
        throw std::runtime_error(
            "extract_coefficients: linear system is inconsistent");

    CoeffTable table;
    table.n = n;
    table.method = CoeffMethod::extraction;
    LinComb check;
    for (std::size_t c = 0; c < idxs.size(); ++c) {
        const BigRat& x = res.solution[c];
        if (denominator(x) != 1)
            throw std::runtime_error("extract_coefficients: non-integral coefficient for " +
                                     [&] {
                                         std::string s;
                                         for (int v : idxs[c]) s += std::to_string(v) + ",";
                                         return s;
                                     }());
        BigInt a = numerator(x);
        table.entries.emplace(idxs[c], a);
        check += expansions[c] * a;
    }
    // the defining system, re-verified post hoc
    if (check != target)
        throw std::runtime_error("extract_coefficients: solution fails to reproduce S(delta_n)");
    return table;
}

namespace {

std::map<IndexSeq, BigInt>& recursion_cache() {
    static std::map<IndexSeq, BigInt> cache;
    return cache;
}
std::mutex& recursion_mutex() {
    static std::mutex mu;
    return mu;
}

BigInt coeff_recursion_impl(const IndexSeq& idx) {
    const auto n = static_cast<int>(idx.size());
    if (idx[static_cast<std::size_t>(n - 1)] == 1) return -1;
    {
        std::lock_guard<std::mutex> lock(recursion_mutex());
        auto it = recursion_cache().find(idx);
        if (it != recursion_cache().end()) return it->second;
    }
    // i_n = 0 here, so dropping the last slot re-normalizes to length n-1
    BigInt total = 0;
    for (int j = 2; j <= n; ++j) {
        if (idx[static_cast<std::size_t>(j - 1)] < 1) continue;
        IndexSeq next(idx.begin(), idx.end() - 1);
        next[static_cast<std::size_t>(j - 2)] += 1;
        next[static_cast<std::size_t>(j - 1)] -= 1;
        total += BigInt(idx[static_cast<std::size_t>(j - 2)] + 1) * coeff_recursion_impl(next);
    }
    if (idx[0] >= 1) {
        IndexSeq next(idx.begin(), idx.end() - 1);
        next[0] -= 1;
        total -= BigInt(n - 1) * coeff_recursion_impl(next);
    }
    std::lock_guard<std::mutex> lock(recursion_mutex());
    return recursion_cache().emplace(idx, total).first->second;
}

}  // namespace

BigInt coeff_recursion(const IndexSeq& idx) {
    if (!valid_index_seq(idx))
        throw std::invalid_argument("coeff_recursion: invalid index sequence");
    return coeff_recursion_impl(idx);
}

CoeffTable coeff_recursion_table(int n) {
    CoeffTable table;
    table.n = n;
    table.method = CoeffMethod::recursion;
    for (const IndexSeq& idx : index_seqs(n))
        table.entries.emplace(idx, coeff_recursion(idx));
    return table;
}

BigRat b_normalize(const IndexSeq& idx, const BigInt& a) {
    int total = 0;
    for (int v : idx) total += v;
    BigRat b(a, factorial(static_cast<int>(idx.size()) - 1));
    return (total % 2 == 0) ? b : -b;
}

}  // namespace ckforest
