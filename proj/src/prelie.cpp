#include "ckforest/prelie.hpp"

namespace ckforest {

namespace {

Tree graft_into_tree(const Tree& t, const std::vector<int>& path, std::size_t depth,
                     const Forest& g) {
    std::vector<Tree> children = t.children();
    if (depth == path.size()) {
        children.insert(children.end(), g.trees().begin(), g.trees().end());
    } else {
        auto i = static_cast<std::size_t>(path[depth]);
        children[i] = graft_into_tree(children[i], path, depth + 1, g);
    }
    return Tree(std::move(children));
}

}  // namespace

Forest graft_at(const Forest& f, const VertexId& v, const Forest& g) {
    if (!is_valid_vertex(f, v))
        throw std::invalid_argument("graft_at: vertex id is not valid for the forest");
    std::vector<Tree> trees = f.trees();
    auto i = static_cast<std::size_t>(v.tree_index);
    trees[i] = graft_into_tree(trees[i], v.path, 0, g);
    return Forest(std::move(trees));
}

LinComb prelie(const Forest& f, const Forest& g) {
    LinComb out;
    for (const VertexId& v : vertices(f)) out.add_term(graft_at(f, v, g), 1);
    return out;
}

LinComb prelie(const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [fa, ca] : a.terms())
        for (const auto& [fb, cb] : b.terms())
            out += prelie(fa, fb) * (ca * cb);
    return out;
}

LinComb growth_N(const LinComb& x) {
    return prelie(x, LinComb::of(Forest(Tree())));
}

}  // namespace ckforest
