#include "ckforest/render.hpp"

#include <sstream>

namespace ckforest {

namespace {

std::string rat_str(const BigRat& r) { return r.str(); }

std::string poly_in_n(const std::vector<BigRat>& coeffs) {
    // rational polynomial in n, constant term first: "3 + -7/2*n + 1/2*n^2"
    std::string out;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rat_str(coeffs[j]);
        if (j >= 1) out += "*n";
        if (j >= 2) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

Json poly_json(const std::vector<BigRat>& coeffs) {
    Json arr = Json::array();
    for (const BigRat& c : coeffs) arr.push_back(rat_str(c));
    return arr;
}

}  // namespace

std::string to_text(const LinComb& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [f, c] : x.terms()) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*" + print_forest(f);
    }
    return out;
}

std::string to_text(const Tensor& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [key, c] : t.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += c.str() + "*";
        out += print_forest(key.first) + "⊗" + print_forest(key.second);
    }
    return out;
}

std::string to_text(const IndexSeq& idx) {
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(idx[i]);
    }
    return out + ")";
}

std::string to_text(const CoeffTable& table) {
    std::ostringstream out;
    out << "n=" << table.n << " method=" << to_string(table.method) << "\n";
    for (const auto& [idx, a] : table.entries)
        out << to_text(idx) << " a=" << a.str()
            << " b=" << rat_str(b_normalize(idx, a)) << "\n";
    return out.str();
}

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    // graded-lex descending, the usual reading order for polynomials
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        out += c.str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*X" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

std::string to_text(const HarmonicForm& form) {
    std::string out = "b(n) = " + poly_in_n(form.poly);
    for (int l = 1; l <= form.depth; ++l) {
        const auto& cs = form.hcoef[static_cast<std::size_t>(l - 1)];
        bool all_zero = true;
        for (const BigRat& c : cs)
            if (c != 0) all_zero = false;
        if (all_zero) continue;
        out += " + (" + poly_in_n(cs) + ")*H(n-1," + std::to_string(l) + ")";
    }
    return out;
}

Json to_json(const LinComb& x) {
    Json arr = Json::array();
    for (const auto& [f, c] : x.terms()) {
        Json term;
        term["coefficient"] = c.str();
        term["forest"] = print_forest(f);
        arr.push_back(std::move(term));
    }
    return arr;
}

Json to_json(const Tensor& t) {
    Json arr = Json::array();
    for (const auto& [key, c] : t.terms()) {
        Json term;
        term["coefficient"] = c.str();
        term["left"] = print_forest(key.first);
        term["right"] = print_forest(key.second);
        arr.push_back(std::move(term));
    }
    return arr;
}

Json to_json(const CoeffTable& table) {
    Json j;
    j["n"] = table.n;
    j["method"] = to_string(table.method);
    Json entries = Json::array();
    for (const auto& [idx, a] : table.entries) {
        Json e;
        e["index"] = idx;
        e["a"] = a.str();
        e["b"] = rat_str(b_normalize(idx, a));
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    return j;
}

Json to_json(const MultiPoly& p) {
    Json j;
    j["variables"] = p.variable_count();
    j["text"] = to_text(p);
    Json terms = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Json term;
        term["coefficient"] = it->second.str();
        term["exponents"] = it->first;
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const HarmonicForm& form) {
    Json j;
    j["tail"] = form.tail;
    j["degree"] = form.degree;
    j["depth"] = form.depth;
    j["poly"] = poly_json(form.poly);
    Json hs = Json::array();
    for (int l = 1; l <= form.depth; ++l) {
        Json h;
        h["depth"] = l;
        h["poly"] = poly_json(form.hcoef[static_cast<std::size_t>(l - 1)]);
        hs.push_back(std::move(h));
    }
    j["harmonic"] = std::move(hs);
    j["text"] = to_text(form);
    return j;
}

std::string to_csv(const CoeffTable& table) {
    std::ostringstream out;
    out << "n,method,index,a,b\n";
    for (const auto& [idx, a] : table.entries) {
        out << table.n << "," << to_string(table.method) << ",";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) out << " ";
            out << idx[i];
        }
        out << "," << a.str() << "," << rat_str(b_normalize(idx, a)) << "\n";
    }
    return out.str();
}

}  // namespace ckforest
