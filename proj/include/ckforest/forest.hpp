#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ckforest {

/// Unordered rooted tree in canonical form: the children list is kept
/// sorted by the canonical total order (vertex count first, then
/// lexicographically by the children lists themselves), so structural
/// equality decides equality of unordered trees.
class Tree {
public:
    Tree() : vertex_count_(1) {}                 // single vertex
    explicit Tree(std::vector<Tree> children);   // canonicalizes

    const std::vector<Tree>& children() const { return children_; }
    int vertex_count() const { return vertex_count_; }

    bool operator==(const Tree& o) const;
    bool operator!=(const Tree& o) const { return !(*this == o); }
    bool operator<(const Tree& o) const;

private:
    std::vector<Tree> children_;
    int vertex_count_;
};

/// Strict total order used everywhere: negative/zero/positive like strcmp.
int tree_compare(const Tree& a, const Tree& b);

/// Multiset of rooted trees, stored as a canonically sorted (ascending)
/// list. The empty forest is the algebra unit 1.
class Forest {
public:
    Forest() : vertex_count_(0) {}
    explicit Forest(std::vector<Tree> trees);
    explicit Forest(Tree tree);

    const std::vector<Tree>& trees() const { return trees_; }
    int vertex_count() const { return vertex_count_; }
    bool is_unit() const { return trees_.empty(); }

    bool operator==(const Forest& o) const;
    bool operator!=(const Forest& o) const { return !(*this == o); }
    bool operator<(const Forest& o) const;

private:
    std::vector<Tree> trees_;
    int vertex_count_;
};

int forest_compare(const Forest& a, const Forest& b);

/// Disjoint union (the commutative algebra product on basis elements).
Forest concat(const Forest& a, const Forest& b);

/// Address of a vertex: index of the tree in the forest, then the child
/// indices of the descent path from that tree's root. Stable under the
/// canonical form because paths refer to the canonical children order.
struct VertexId {
    int tree_index = 0;
    std::vector<int> path;

    bool operator==(const VertexId&) const = default;
};

/// All vertices of F in preorder, tree by tree; size equals vertex_count(F).
std::vector<VertexId> vertices(const Forest& f);
bool is_valid_vertex(const Forest& f, const VertexId& v);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position;
};

/// Bracket notation: forest := tree (space tree)* | "1"; tree := "[" tree* "]".
/// Parsing canonicalizes; printing emits children ascending inside a tree
/// and top-level trees in descending order ("[[]] []" style).
Forest parse_forest(std::string_view text);
std::string print_tree(const Tree& t);
std::string print_forest(const Forest& f);

/// All canonical trees with exactly n vertices (n >= 1), sorted.
std::vector<Tree> enumerate_trees(int n);
/// All forests with exactly n vertices (n >= 0), sorted; n = 0 yields {1}.
std::vector<Forest> enumerate_forests(int n);

}  // namespace ckforest
