#include "ckforest/dominant.hpp"

#include <mutex>
#include <stdexcept>

#include "ckforest/exact_linear.hpp"

namespace ckforest {

namespace {

// 2 i_2 + 3 i_3 + ... + n i_n: the vertex weight carried by the tail
long long tail_mass(const TailSeq& tail) {
    long long m = 0;
    for (std::size_t j = 0; j < tail.size(); ++j)
        m += static_cast<long long>(j + 2) * tail[j];
    return m;
}

}  // namespace

int weight(const TailSeq& tail) {
    DominantSeq d = dominant(tail);
    if (d.empty()) return 0;
    if (d.size() == 1 && d[0] == 1) return 1;
    long long w = 0;
    for (std::size_t j = 0; j < tail.size(); ++j)
        w += static_cast<long long>(j + 1) * tail[j];
    return static_cast<int>(w - 1);
}

DominantSeq dominant(const TailSeq& tail) {
    DominantSeq d = tail;
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

bool is_dominant(const TailSeq& tail) {
    return tail.empty() || tail.back() != 0;
}

std::vector<DominantSeq> dominant_seqs_of_weight(int w) {
    if (w < 0) throw std::invalid_argument("dominant_seqs_of_weight: w must be >= 0");
    // the convention weights of () and (1) differ from the formula, so the
    // two smallest weights are listed explicitly
    if (w == 0) return {DominantSeq{}};
    if (w == 1) return {DominantSeq{1}, DominantSeq{0, 1}, DominantSeq{2}};
    // partitions of w+1: part p means one unit in entry i_{p+1}
    std::vector<DominantSeq> out;
    DominantSeq parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            int longest = parts.front();  // parts kept non-increasing
            DominantSeq d(static_cast<std::size_t>(longest), 0);
            for (int p : parts) d[static_cast<std::size_t>(p - 1)] += 1;
            out.push_back(std::move(d));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, w + 1, w + 1);
    // weight-1 sequences are handled above; here every tail has weight w
    return out;
}

MultiPoly poly_P(const DominantSeq& d_in) {
    DominantSeq d = dominant(d_in);

    static std::mutex mu;
    static std::map<DominantSeq, MultiPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }

    MultiPoly result;
    const MultiPoly x1 = MultiPoly::variable(1);
    if (d.empty()) {
        result = MultiPoly::constant(1);
    } else if (d == DominantSeq{1}) {
        result = x1;
    } else if (d == DominantSeq{2}) {
        result = (x1 - MultiPoly::constant(2)) * (x1 - MultiPoly::constant(1));
    } else if (d == DominantSeq{0, 1}) {
        result = x1 - MultiPoly::constant(1);
    } else {
        // recursion applies to every non-base sequence of weight >= 2
        const int w = weight(d);
        if (w < 2)
            throw std::logic_error("poly_P: unexpected sequence of weight < 2");
        const auto n = static_cast<int>(d.size()) + 1;  // entries are i_2..i_n
        for (int j = 3; j <= n; ++j) {
            if (d[static_cast<std::size_t>(j - 2)] < 1) continue;
            DominantSeq next = d;
            next[static_cast<std::size_t>(j - 3)] += 1;
            next[static_cast<std::size_t>(j - 2)] -= 1;
            BigInt coef = d[static_cast<std::size_t>(j - 3)] + 1;
            result += poly_P(dominant(next)) * coef;
        }
        if (d[0] >= 1) {
            MultiPoly linear =
                MultiPoly::variable(w) + MultiPoly::constant(2 - tail_mass(d));
            DominantSeq next = d;
            next[0] -= 1;
            result += linear * poly_P(dominant(next));
        }
    }

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::move(d), std::move(result)).first->second;
}

namespace {

// visit all strictly increasing tuples 1 <= p_1 < ... < p_N <= bound
template <class F>
void for_each_tuple(int size, int bound, F&& fn) {
    std::vector<BigInt> tuple(static_cast<std::size_t>(size));
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == size) {
            fn(tuple);
            return;
        }
        for (int p = low; p <= bound - (size - pos - 1); ++p) {
            tuple[static_cast<std::size_t>(pos)] = p;
            self(self, pos + 1, p + 1);
        }
    };
    rec(rec, 0, 1);
}

}  // namespace

bool lemma26_check(const DominantSeq& d, int bound) {
    MultiPoly p = poly_P(d);
    int n = weight(d);
    bool ok = true;
    for_each_tuple(n, bound, [&](const std::vector<BigInt>& tuple) {
        if (p.evaluate(tuple) != 0) ok = false;
    });
    return ok;
}

bool lemma26_check(const DominantSeq& d) {
    return lemma26_check(d, static_cast<int>(tail_mass(d)) - 2);
}

BigInt coeff_closed_form(const IndexSeq& idx) {
    if (!valid_index_seq(idx))
        throw std::invalid_argument("coeff_closed_form: invalid index sequence");
    const auto n = static_cast<int>(idx.size());
    TailSeq tail(idx.begin() + 1, idx.end());
    DominantSeq d = dominant(tail);
    const int N = weight(d);

    MultiPoly p = poly_P(d);
    BigRat sum = 0;
    for_each_tuple(N, n - 1, [&](const std::vector<BigInt>& tuple) {
        BigInt den = 1;
        for (const BigInt& v : tuple) den *= v;
        sum += BigRat(p.evaluate(tuple), den);
    });

    int parity = 0;
    for (int v : idx) parity += v;
    BigRat result = BigRat(factorial(n - 1)) * sum;
    if (parity % 2 != 0) result = -result;
    if (denominator(result) != 1)
        throw std::runtime_error("coeff_closed_form: non-integral value");
    return numerator(result);
}

CoeffTable coeff_closed_form_table(int n) {
    CoeffTable table;
    table.n = n;
    table.method = CoeffMethod::closed_form;
    for (const IndexSeq& idx : index_seqs(n))
        table.entries.emplace(idx, coeff_closed_form(idx));
    return table;
}

BigRat harmonic(int n, int k) {
    if (k < 0) throw std::invalid_argument("harmonic: k must be >= 0");
    if (n < 0) throw std::invalid_argument("harmonic: n must be >= 0");
    if (k == 0) return 1;
    if (k > n) return 0;
    static std::mutex mu;
    static std::map<std::pair<int, int>, BigRat> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto rec = [&](auto&& self, int nn, int kk) -> BigRat {
        if (kk == 0) return 1;
        if (kk > nn) return 0;
        auto key = std::make_pair(nn, kk);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        BigRat v = self(self, nn - 1, kk) + self(self, nn - 1, kk - 1) / nn;
        return cache.emplace(key, std::move(v)).first->second;
    };
    return rec(rec, n, k);
}

BigRat HarmonicForm::evaluate(int n) const {
    BigRat npow = 1;
    BigRat value = 0;
    std::vector<BigRat> powers;
    for (int j = 0; j <= degree; ++j) {
        powers.push_back(npow);
        npow *= n;
    }
    for (int j = 0; j <= degree; ++j) value += poly[static_cast<std::size_t>(j)] * powers[static_cast<std::size_t>(j)];
    for (int l = 1; l <= depth; ++l) {
        BigRat c = 0;
        for (int j = 0; j <= degree; ++j)
            c += hcoef[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(j)] *
                 powers[static_cast<std::size_t>(j)];
        value += c * harmonic(n - 1, l);
    }
    return value;
}

int family_min_order(const DominantSeq& tail) {
    return static_cast<int>(tail_mass(tail));
}

BigRat family_b(const DominantSeq& tail, int n) {
    const int m = family_min_order(tail);
    if (n < m || n < 1)
        throw std::invalid_argument("family_b: order too small for this tail");
    IndexSeq idx(static_cast<std::size_t>(n), 0);
    idx[0] = n - m;
    for (std::size_t j = 0; j < tail.size(); ++j) idx[j + 1] = tail[j];
    return b_normalize(idx, coeff_recursion(idx));
}

FitResult fit_harmonic_form(const DominantSeq& tail, int n_min, int n_max) {
    if (!is_dominant(tail))
        throw std::invalid_argument("fit_harmonic_form: tail must be dominant");
    if (n_min < family_min_order(tail) || n_min < 1)
        throw std::invalid_argument("fit_harmonic_form: n_min below the family's first order");

    int degree = 1;
    for (int v : tail) degree += v;
    const int depth = weight(tail);
    const int dim = (degree + 1) * (depth + 1);
    const int samples = n_max - n_min + 1;
    if (samples <= dim)
        throw std::invalid_argument(
            "fit_harmonic_form: need more than " + std::to_string(dim) + " sample points");

    // columns: n^j for j=0..degree, then n^j H_{n-1}^{(l)} for each depth
    auto row_of = [&](int n) {
        std::vector<BigRat> row;
        row.reserve(static_cast<std::size_t>(dim));
        std::vector<BigRat> powers;
        BigRat npow = 1;
        for (int j = 0; j <= degree; ++j) {
            powers.push_back(npow);
            npow *= n;
        }
        for (int j = 0; j <= degree; ++j) row.push_back(powers[static_cast<std::size_t>(j)]);
        for (int l = 1; l <= depth; ++l) {
            BigRat h = harmonic(n - 1, l);
            for (int j = 0; j <= degree; ++j)
                row.push_back(powers[static_cast<std::size_t>(j)] * h);
        }
        return row;
    };

    std::vector<std::vector<BigRat>> m;
    std::vector<BigRat> rhs;
    for (int n = n_min; n <= n_max; ++n) {
        m.push_back(row_of(n));
        rhs.push_back(family_b(tail, n));
    }
    RatSolveResult solved = solve_rational_system(std::move(m), std::move(rhs));

    FitResult result;
    result.form.tail = tail;
    result.form.degree = degree;
    result.form.depth = depth;
    if (!solved.consistent) {
        result.message = "no fit: sample system inconsistent at degree " +
                         std::to_string(degree) + ", depth " + std::to_string(depth);
        return result;
    }

    std::size_t pos = 0;
    result.form.poly.assign(static_cast<std::size_t>(degree) + 1, BigRat(0));
    for (int j = 0; j <= degree; ++j) result.form.poly[static_cast<std::size_t>(j)] = solved.solution[pos++];
    result.form.hcoef.assign(static_cast<std::size_t>(depth),
                             std::vector<BigRat>(static_cast<std::size_t>(degree) + 1, BigRat(0)));
    for (int l = 1; l <= depth; ++l)
        for (int j = 0; j <= degree; ++j)
            result.form.hcoef[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(j)] =
                solved.solution[pos++];

    for (int n = n_max + 1; n <= n_max + 5; ++n) {
        if (result.form.evaluate(n) != family_b(tail, n)) {
            result.message =
                "no fit: held-out order " + std::to_string(n) + " disagrees";
            return result;
        }
    }
    result.ok = true;
    return result;
}

bool ladder_identity_check(int k, int n_max, std::string* witness) {
    if (k < 2) throw std::invalid_argument("ladder_identity_check: k must be >= 2");
    DominantSeq tail(static_cast<std::size_t>(k - 1), 0);
    tail.back() = 1;
    for (int n = k; n <= n_max; ++n) {
        BigRat lhs = family_b(tail, n);
        BigRat rhs = n - 1;
        for (int i = 1; i <= k - 2; ++i) rhs -= harmonic(n - 1, i);
        if (lhs != rhs) {
            if (witness) {
                *witness = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                           ": b=" + lhs.str() + " vs ladder value " + rhs.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace ckforest
