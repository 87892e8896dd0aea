#include "ckforest/hopf.hpp"

#include <mutex>

namespace ckforest {

namespace {

// Write-once caches; the generator pipeline revisits the same forests
// heavily, and results are immutable once computed. std::map keeps value
// references stable under later insertions, so cached entries can be
// handed out by reference.
template <class K, class V>
class Memo {
public:
    const V* find(const K& k) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : &it->second;
    }
    const V& store(const K& k, V v) {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(k, std::move(v)).first->second;
    }

private:
    std::mutex mu_;
    std::map<K, V> map_;
};

const Tensor& tree_coproduct(const Tree& t) {
    static Memo<Forest, Tensor> memo;
    Forest self(t);
    if (const Tensor* hit = memo.find(self)) return *hit;

    const Tensor& sub = coproduct(Forest(t.children()));
    Tensor out;
    for (const auto& [key, c] : sub.terms())
        out.add_term(graft_B(key.first), key.second, c);
    out.add_term(Forest(), self, 1);
    return memo.store(self, std::move(out));
}

}  // namespace

const Tensor& coproduct(const Forest& f) {
    static Memo<Forest, Tensor> memo;
    if (const Tensor* hit = memo.find(f)) return *hit;
    Tensor out = Tensor::of(Forest(), Forest());
    for (const Tree& t : f.trees()) out = out * tree_coproduct(t);
    return memo.store(f, std::move(out));
}

Tensor coproduct(const LinComb& x) {
    Tensor out;
    for (const auto& [f, c] : x.terms()) out += coproduct(f) * c;
    return out;
}

BigInt counit(const LinComb& x) { return x.coefficient(Forest()); }

Tensor reduced_coproduct(const LinComb& x) {
    if (counit(x) != 0)
        throw std::invalid_argument(
            "reduced_coproduct: argument has nonzero counit");
    Tensor out = coproduct(x);
    for (const auto& [f, c] : x.terms()) {
        out.add_term(f, Forest(), -c);
        out.add_term(Forest(), f, -c);
    }
    return out;
}

const LinComb& antipode_recursive(const Forest& f) {
    static Memo<Forest, LinComb> memo;
    if (const LinComb* hit = memo.find(f)) return *hit;
    if (f.is_unit()) return memo.store(f, LinComb::unit());

    // S(a) = -a - sum S(a') a'' over Delta~(a) = a' (x) a''
    LinComb out = -LinComb::of(f);
    for (const auto& [key, c] : coproduct(f).terms()) {
        if (key.first.is_unit() || key.second.is_unit()) continue;
        out -= antipode_recursive(key.first) * LinComb::of(key.second) * c;
    }
    return memo.store(f, std::move(out));
}

LinComb antipode_recursive(const LinComb& x) {
    LinComb out;
    for (const auto& [f, c] : x.terms()) out += antipode_recursive(f) * c;
    return out;
}

namespace {

// m_k(Delta~^{(k-1)}(F)) peeled one slot at a time:
// u_1(F) = F,  u_k(F) = sum u_{k-1}(F') F'' over Delta~(F).
const LinComb& takeuchi_word(int k, const Forest& f) {
    static Memo<std::pair<int, Forest>, LinComb> memo;
    std::pair<int, Forest> key{k, f};
    if (const LinComb* hit = memo.find(key)) return *hit;
    if (k == 1) return memo.store(key, LinComb::of(f));

    LinComb out;
    for (const auto& [pair, c] : coproduct(f).terms()) {
        if (pair.first.is_unit() || pair.second.is_unit()) continue;
        out += takeuchi_word(k - 1, pair.first) * LinComb::of(pair.second) * c;
    }
    return memo.store(key, std::move(out));
}

}  // namespace

LinComb antipode_takeuchi(const LinComb& x) {
    LinComb out = LinComb::of(Forest(), counit(x));
    for (const auto& [f, c] : x.terms()) {
        if (f.is_unit()) continue;
        // conilpotency: words longer than the vertex count vanish
        int sign = -1;
        for (int k = 1; k <= f.vertex_count(); ++k) {
            out += takeuchi_word(k, f) * BigInt(sign) * c;
            sign = -sign;
        }
    }
    return out;
}

Forest graft_B(const Forest& f) { return Forest(Tree(f.trees())); }

LinComb graft_B(const LinComb& x) {
    LinComb out;
    for (const auto& [f, c] : x.terms()) out.add_term(graft_B(f), c);
    return out;
}

}  // namespace ckforest
