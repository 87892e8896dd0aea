#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ckforest/render.hpp"
#include "ckforest/verify.hpp"

namespace {

using namespace ckforest;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw ParseError("invalid integer list entry '" + item + "'", 0);
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty integer list", 0);
    return out;
}

struct ExprCmd {
    std::string operation;
    // two scalar positionals: CLI11 would parse a multi-value option's
    // "[...]" arguments as container literals, which collides with the
    // bracket notation
    std::string operand_a;
    std::string operand_b;
    std::size_t operands_given = 0;
    std::string format = "text";
    int max_size = 12;

    int run() const {
        const bool binary = operation == "product" || operation == "prelie";
        const std::size_t arity = binary ? 2 : 1;
        if (operands_given != arity) {
            std::cerr << "error: operation '" << operation << "' takes " << arity
                      << " operand(s), got " << operands_given << "\n";
            return kExitUsage;
        }
        std::vector<std::string> operands{operand_a};
        if (binary) operands.push_back(operand_b);
        std::vector<Forest> parsed;
        for (const std::string& text : operands) {
            Forest f = parse_forest(text);
            if (f.vertex_count() > max_size) {
                std::cerr << "error: operand exceeds --max-size " << max_size << "\n";
                return kExitUsage;
            }
            parsed.push_back(std::move(f));
        }
        if (operation == "coproduct") {
            Tensor t = coproduct(parsed[0]);
            std::cout << (format == "json" ? dump(to_json(t)) : to_text(t) + "\n");
            return 0;
        }
        LinComb result;
        if (operation == "product")
            result = LinComb::of(parsed[0]) * LinComb::of(parsed[1]);
        else if (operation == "prelie")
            result = prelie(parsed[0], parsed[1]);
        else if (operation == "antipode")
            result = antipode_recursive(parsed[0]);
        else if (operation == "B")
            result = graft_B(LinComb::of(parsed[0]));
        else if (operation == "N")
            result = growth_N(LinComb::of(parsed[0]));
        std::cout << (format == "json" ? dump(to_json(result)) : to_text(result) + "\n");
        return 0;
    }
};

struct DeltaCmd {
    int n = 1;
    std::string what = "basis";
    std::string format = "text";
    int max_size = 12;

    int run() const {
        if (n > max_size) {
            std::cerr << "error: n=" << n << " exceeds --max-size " << max_size
                      << " (raise the guard explicitly for larger runs)\n";
            return kExitUsage;
        }
        if (what == "coproduct") {
            Tensor t = delta_coproduct(n);
            std::cout << (format == "json" ? dump(to_json(t)) : to_text(t) + "\n");
            return 0;
        }
        LinComb x = what == "basis" ? delta(n) : antipode_recursive(delta(n));
        std::cout << (format == "json" ? dump(to_json(x)) : to_text(x) + "\n");
        return 0;
    }
};

struct CoeffsCmd {
    int n = 1;
    std::string method = "recursion";
    std::string format = "text";
    int max_order = 12;

    int run() const {
        if (n > max_order) {
            std::cerr << "error: n=" << n << " exceeds --max-order " << max_order << "\n";
            return kExitUsage;
        }
        if (method == "all") {
            CoeffTable ext = extract_coefficients(n);
            CoeffTable rec = coeff_recursion_table(n);
            CoeffTable cf = coeff_closed_form_table(n);
            for (const auto& [idx, a] : ext.entries) {
                if (rec.entries.at(idx) != a || cf.entries.at(idx) != a) {
                    std::cerr << "DISAGREE at index " << to_text(idx)
                              << ": extraction=" << a.str()
                              << " recursion=" << rec.entries.at(idx).str()
                              << " closed-form=" << cf.entries.at(idx).str() << "\n";
                    return kExitVerifyFailure;
                }
            }
            emit(ext);
            if (format != "json") std::cout << "AGREE\n";
            return 0;
        }
        if (method == "extract") {
            emit(extract_coefficients(n));
        } else if (method == "recursion") {
            emit(coeff_recursion_table(n));
        } else {
            emit(coeff_closed_form_table(n));
        }
        return 0;
    }

    void emit(const CoeffTable& table) const {
        if (format == "json")
            std::cout << dump(to_json(table));
        else if (format == "csv")
            std::cout << to_csv(table);
        else
            std::cout << to_text(table);
    }
};

struct PolyCmd {
    std::string tail_text;
    std::string format = "text";

    int run() const {
        std::vector<int> tail = parse_int_list(tail_text);
        for (int v : tail)
            if (v < 0) throw ParseError("tail entries must be nonnegative", 0);
        DominantSeq d = dominant(tail);
        MultiPoly p = poly_P(d);
        if (format == "json") {
            Json j = to_json(p);
            j["weight"] = weight(d);
            j["degree"] = p.total_degree();
            std::cout << dump(j);
        } else {
            std::cout << to_text(p) << "\n";
            std::cout << "weight=" << weight(d) << " degree=" << p.total_degree() << "\n";
        }
        return 0;
    }
};

struct SequenceCmd {
    std::string family;
    int n_max = 12;
    int guard = 40;
    std::string tail_text;
    std::string format = "text";

    int run() const {
        if (n_max > guard) {
            std::cerr << "error: --n-max exceeds --guard " << guard << "\n";
            return kExitUsage;
        }
        std::vector<std::string> values;
        if (family == "custom") {
            if (tail_text.empty()) {
                std::cerr << "error: family 'custom' requires --tail\n";
                return kExitUsage;
            }
            DominantSeq tail = dominant(parse_int_list(tail_text));
            for (int n = std::max(family_min_order(tail), 1); n <= n_max; ++n)
                values.push_back(family_b(tail, n).str());
        } else {
            auto idx_with = [](int n, std::initializer_list<std::pair<int, int>> entries) {
                IndexSeq idx(static_cast<std::size_t>(n), 0);
                for (auto [pos, v] : entries) idx[static_cast<std::size_t>(pos - 1)] = v;
                return idx;
            };
            // printed as magnitudes, matching the OEIS entries they track
            int n_min = 1;
            std::function<IndexSeq(int)> build;
            if (family == "A000142") {
                n_min = 1;
                build = [&](int n) { return idx_with(n, {{1, n}}); };
            } else if (family == "A001563") {
                n_min = 2;
                build = [&](int n) { return idx_with(n, {{1, n - 2}, {2, 1}}); };
            } else if (family == "A152947") {
                n_min = 3;
                build = [&](int n) { return idx_with(n, {{1, 1}, {n - 1, 1}}); };
            } else if (family == "A067318") {
                n_min = 3;
                build = [&](int n) { return idx_with(n, {{1, n - 3}, {3, 1}}); };
            } else {  // A122105
                n_min = 4;
                build = [&](int n) { return idx_with(n, {{1, n - 4}, {4, 1}}); };
            }
            for (int n = n_min; n <= n_max; ++n)
                values.push_back(BigInt(abs(coeff_recursion(build(n)))).str());
        }
        if (format == "json") {
            Json j = Json::array();
            for (const std::string& v : values) j.push_back(v);
            std::cout << dump(j);
        } else {
            for (const std::string& v : values) std::cout << v << "\n";
        }
        return 0;
    }
};

struct VerifyCmd {
    std::vector<std::string> suites;
    VerifyOptions opt;

    int run() const {
        std::vector<std::string> selected = suites.empty() ? all_suite_names() : suites;
        // validate names before running anything
        for (const std::string& name : selected) {
            if (std::find(all_suite_names().begin(), all_suite_names().end(), name) ==
                all_suite_names().end()) {
                std::cerr << "error: unknown suite '" << name << "'\n";
                return kExitUsage;
            }
        }
        bool ok = true;
        std::vector<std::string> reports;
        for (const std::string& name : all_suite_names()) {
            if (std::find(selected.begin(), selected.end(), name) == selected.end())
                continue;
            SuiteResult res = run_suite(name, opt);
            ok = ok && res.passed;
            reports.push_back(res.summary());
        }
        for (const std::string& line : reports) std::cout << line << "\n";
        return ok ? 0 : kExitVerifyFailure;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for the Hopf algebra of rooted forests"};
    app.require_subcommand(1);

    ExprCmd expr;
    auto* expr_cmd = app.add_subcommand(
        "expr", "apply an operation to bracket-notation operands");
    expr_cmd->add_option("operation", expr.operation, "one of product, coproduct, antipode, prelie, B, N")
        ->required()
        ->check(CLI::IsMember({"product", "coproduct", "antipode", "prelie", "B", "N"}));
    auto* operand_a = expr_cmd->add_option("a", expr.operand_a, "forest in bracket notation");
    auto* operand_b = expr_cmd->add_option("b", expr.operand_b, "second operand");
    expr_cmd->add_option("--format", expr.format)->check(CLI::IsMember({"text", "json"}));
    expr_cmd->add_option("--max-size", expr.max_size, "operand size guard");

    DeltaCmd delta_args;
    auto* delta_cmd = app.add_subcommand("delta", "generators, their coproduct or antipode");
    delta_cmd->add_option("n", delta_args.n)->required()->check(CLI::PositiveNumber);
    delta_cmd->add_option("--what", delta_args.what)
        ->check(CLI::IsMember({"basis", "coproduct", "antipode-forest"}));
    delta_cmd->add_option("--format", delta_args.format)->check(CLI::IsMember({"text", "json"}));
    delta_cmd->add_option("--max-size", delta_args.max_size, "order guard");

    CoeffsCmd coeffs;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "antipode coefficient table at order n");
    coeffs_cmd->add_option("n", coeffs.n)->required()->check(CLI::PositiveNumber);
    coeffs_cmd->add_option("--method", coeffs.method)
        ->check(CLI::IsMember({"extract", "recursion", "closed-form", "all"}));
    coeffs_cmd->add_option("--format", coeffs.format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    coeffs_cmd->add_option("--max-order", coeffs.max_order, "order guard");

    PolyCmd poly;
    auto* poly_cmd = app.add_subcommand("poly", "P polynomial of a tail sequence");
    poly_cmd->add_option("tail", poly.tail_text, "comma-separated tail, e.g. 1,1")->required();
    poly_cmd->add_option("--format", poly.format)->check(CLI::IsMember({"text", "json"}));

    SequenceCmd seq;
    auto* seq_cmd = app.add_subcommand("sequence", "coefficient families as sequences");
    seq_cmd->add_option("family", seq.family)
        ->required()
        ->check(CLI::IsMember({"A000142", "A001563", "A152947", "A067318", "A122105", "custom"}));
    seq_cmd->add_option("--n-max", seq.n_max);
    seq_cmd->add_option("--guard", seq.guard, "hard cap on --n-max");
    seq_cmd->add_option("--tail", seq.tail_text, "tail for the custom family");
    seq_cmd->add_option("--format", seq.format)->check(CLI::IsMember({"text", "json"}));

    VerifyCmd verify;
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suites", verify.suites, "subset of suites")->delimiter(',');
    verify_cmd->add_option("--max-size", verify.opt.max_size);
    verify_cmd->add_option("--triple-size", verify.opt.triple_size);
    verify_cmd->add_option("--order", verify.opt.order);
    verify_cmd->add_option("--n-max", verify.opt.n_max);
    verify_cmd->add_option("--random-triples", verify.opt.random_triples);
    verify_cmd->add_option("--random-size", verify.opt.random_size);
    verify_cmd->add_option("--seed", verify.opt.seed);
    verify_cmd->add_option("--ladder-k", verify.opt.ladder_k_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    expr.operands_given = operand_a->count() + operand_b->count();

    try {
        if (expr_cmd->parsed()) return expr.run();
        if (delta_cmd->parsed()) return delta_args.run();
        if (coeffs_cmd->parsed()) return coeffs.run();
        if (poly_cmd->parsed()) return poly.run();
        if (seq_cmd->parsed()) return seq.run();
        if (verify_cmd->parsed()) return verify.run();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return 0;
}
