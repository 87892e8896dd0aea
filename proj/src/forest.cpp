#include "ckforest/forest.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace ckforest {

Tree::Tree(std::vector<Tree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    vertex_count_ = 1;
    for (const Tree& c : children_) vertex_count_ += c.vertex_count();
}

int tree_compare(const Tree& a, const Tree& b) {
    if (a.vertex_count() != b.vertex_count())
        return a.vertex_count() < b.vertex_count() ? -1 : 1;
    const auto& ca = a.children();
    const auto& cb = b.children();
    std::size_t m = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < m; ++i)
        if (int c = tree_compare(ca[i], cb[i])) return c;
    if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
    return 0;
}

bool Tree::operator==(const Tree& o) const { return tree_compare(*this, o) == 0; }
bool Tree::operator<(const Tree& o) const { return tree_compare(*this, o) < 0; }

Forest::Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end());
    vertex_count_ = 0;
    for (const Tree& t : trees_) vertex_count_ += t.vertex_count();
}

Forest::Forest(Tree tree) : vertex_count_(tree.vertex_count()) {
    trees_.push_back(std::move(tree));
}

int forest_compare(const Forest& a, const Forest& b) {
    if (a.vertex_count() != b.vertex_count())
        return a.vertex_count() < b.vertex_count() ? -1 : 1;
    const auto& ta = a.trees();
    const auto& tb = b.trees();
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
    for (std::size_t i = 0; i < ta.size(); ++i)
        if (int c = tree_compare(ta[i], tb[i])) return c;
    return 0;
}

bool Forest::operator==(const Forest& o) const { return forest_compare(*this, o) == 0; }
bool Forest::operator<(const Forest& o) const { return forest_compare(*this, o) < 0; }

Forest concat(const Forest& a, const Forest& b) {
    std::vector<Tree> ts = a.trees();
    ts.insert(ts.end(), b.trees().begin(), b.trees().end());
    return Forest(std::move(ts));
}

namespace {

void collect_vertices(const Tree& t, int tree_index, std::vector<int>& path,
                      std::vector<VertexId>& out) {
    out.push_back(VertexId{tree_index, path});
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        path.push_back(static_cast<int>(i));
        collect_vertices(t.children()[i], tree_index, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<VertexId> vertices(const Forest& f) {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(f.vertex_count()));
    std::vector<int> path;
    for (std::size_t i = 0; i < f.trees().size(); ++i)
        collect_vertices(f.trees()[i], static_cast<int>(i), path, out);
    return out;
}

bool is_valid_vertex(const Forest& f, const VertexId& v) {
    if (v.tree_index < 0 || static_cast<std::size_t>(v.tree_index) >= f.trees().size())
        return false;
    const Tree* t = &f.trees()[static_cast<std::size_t>(v.tree_index)];
    for (int step : v.path) {
        if (step < 0 || static_cast<std::size_t>(step) >= t->children().size()) return false;
        t = &t->children()[static_cast<std::size_t>(step)];
    }
    return true;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Forest parse() {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '1') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size())
                throw ParseError("unexpected characters after unit forest \"1\"", pos_);
            return Forest();
        }
        std::vector<Tree> trees;
        while (pos_ < text_.size()) {
            if (text_[pos_] != '[')
                throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
            trees.push_back(parse_tree());
            skip_ws();
        }
        if (trees.empty()) throw ParseError("empty input, expected a forest or \"1\"", pos_);
        return Forest(std::move(trees));
    }

private:
    Tree parse_tree() {
        std::size_t open = pos_;
        ++pos_;  // consume '['
        std::vector<Tree> children;
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size())
                throw ParseError("unbalanced bracket, missing ']'", open);
            if (text_[pos_] == ']') {
                ++pos_;
                return Tree(std::move(children));
            }
            if (text_[pos_] != '[')
                throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
            children.push_back(parse_tree());
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view text) { return Parser(text).parse(); }

std::string print_tree(const Tree& t) {
    std::string out = "[";
    for (const Tree& c : t.children()) out += print_tree(c);
    out += "]";
    return out;
}

std::string print_forest(const Forest& f) {
    if (f.is_unit()) return "1";
    std::string out;
    // largest tree first, matching the usual way forests are written
    for (auto it = f.trees().rbegin(); it != f.trees().rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += print_tree(*it);
    }
    return out;
}

namespace {

// Level-by-level caches; trees with n vertices are exactly B(forests with
// n-1 vertices), and forests are non-decreasing multisets of smaller trees.
struct EnumCache {
    std::mutex mu;
    std::vector<std::vector<Tree>> trees{{}};      // trees[0] unused
    std::vector<std::vector<Forest>> forests{{Forest()}};

    void extend_multisets(int remaining, std::size_t min_size, std::size_t min_index,
                          std::vector<Tree>& acc, std::vector<Forest>& out) {
        if (remaining == 0) {
            out.push_back(Forest(acc));
            return;
        }
        for (std::size_t s = min_size; s <= static_cast<std::size_t>(remaining); ++s) {
            const auto& ts = trees[s];
            for (std::size_t i = (s == min_size ? min_index : 0); i < ts.size(); ++i) {
                acc.push_back(ts[i]);
                extend_multisets(remaining - static_cast<int>(s), s, i, acc, out);
                acc.pop_back();
            }
        }
    }

    void ensure(int n) {
        std::lock_guard<std::mutex> lock(mu);
        while (static_cast<int>(forests.size()) <= n) {
            int k = static_cast<int>(forests.size());
            std::vector<Tree> level;
            for (const Forest& f : forests[static_cast<std::size_t>(k - 1)])
                level.push_back(Tree(f.trees()));
            std::sort(level.begin(), level.end());
            trees.push_back(std::move(level));

            std::vector<Forest> fl;
            std::vector<Tree> acc;
            extend_multisets(k, 1, 0, acc, fl);
            std::sort(fl.begin(), fl.end());
            forests.push_back(std::move(fl));
        }
    }
};

EnumCache& enum_cache() {
    static EnumCache cache;
    return cache;
}

}  // namespace

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
    EnumCache& c = enum_cache();
    c.ensure(n);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.trees[static_cast<std::size_t>(n)];
}

std::vector<Forest> enumerate_forests(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_forests: n must be >= 0");
    EnumCache& c = enum_cache();
    c.ensure(n);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.forests[static_cast<std::size_t>(n)];
}

}  // namespace ckforest
