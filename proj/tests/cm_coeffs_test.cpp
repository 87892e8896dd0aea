#include <doctest.h>

#include "ckforest/cm_coeffs.hpp"
#include "fixtures.hpp"

using namespace ckforest;

namespace {

LinComb L(const char* text) { return LinComb::of(parse_forest(text)); }

}  // namespace

TEST_SUITE_BEGIN("cm");

TEST_CASE("the first four generators") {
    CHECK(delta(1) == L("[]"));
    CHECK(delta(2) == L("[[]]"));
    CHECK(delta(3) == L("[[][]]") + L("[[[]]]"));
    CHECK(delta(4) == L("[[][][]]") + 3 * L("[[][[]]]") + L("[[[][]]]") + L("[[[[]]]]"));
    CHECK(delta(6).homogeneous_degree() == 6);
    for (const auto& [f, c] : delta(6).terms()) {
        CHECK(c > 0);
        CHECK(f.trees().size() == 1);  // generators are sums of trees
    }
    CHECK_THROWS_AS(delta(0), std::invalid_argument);
}

TEST_CASE("generator coproducts in delta-monomial form") {
    for (int n = 1; n <= 4; ++n)
        CHECK(delta_coproduct(n) == fixtures::expected_delta_coproduct(n));
}

TEST_CASE("index sequences enumerate partitions in lex order") {
    CHECK(index_seqs(1) == std::vector<IndexSeq>{{1}});
    CHECK(index_seqs(2) == std::vector<IndexSeq>{{0, 1}, {2, 0}});
    CHECK(index_seqs(3) == std::vector<IndexSeq>{{0, 0, 1}, {1, 1, 0}, {3, 0, 0}});
    const std::size_t partition_counts[] = {1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 1; n <= 8; ++n) {
        std::vector<IndexSeq> seqs = index_seqs(n);
        CHECK(seqs.size() == partition_counts[n - 1]);
        for (const IndexSeq& idx : seqs) {
            CHECK(static_cast<int>(idx.size()) == n);
            CHECK(valid_index_seq(idx));
        }
        CHECK(std::is_sorted(seqs.begin(), seqs.end()));
    }
    CHECK_FALSE(valid_index_seq({1, 1}));
    CHECK_FALSE(valid_index_seq({}));
}

TEST_CASE("monomial expansion in the forest basis") {
    CHECK(monomial_forest_expansion({2, 0}) == L("[] []"));
    CHECK(monomial_forest_expansion({1, 1, 0}) == L("[[]] []"));
    CHECK(monomial_forest_expansion({0, 0, 1}) == delta(3));
    CHECK(monomial_forest_expansion({0, 2, 0, 0}) == L("[[]] [[]]"));
    CHECK_THROWS_AS(monomial_forest_expansion({1, 0}), std::invalid_argument);
}

TEST_CASE("coefficient extraction reproduces the small antipode tables") {
    for (int n = 1; n <= 3; ++n) {
        CoeffTable t = extract_coefficients(n);
        CHECK(t.entries == fixtures::expected_coeff_table(n));
    }
    CoeffTable t4 = extract_coefficients(4);
    CHECK(t4.entries == std::map<IndexSeq, BigInt>{{{0, 0, 0, 1}, -1},
                                                   {{0, 2, 0, 0}, 4},
                                                   {{1, 0, 1, 0}, 7},
                                                   {{2, 1, 0, 0}, -18},
                                                   {{4, 0, 0, 0}, 6}});
    CoeffTable t5 = extract_coefficients(5);
    CHECK(t5.entries == std::map<IndexSeq, BigInt>{{{0, 0, 0, 0, 1}, -1},
                                                   {{0, 1, 1, 0, 0}, 15},
                                                   {{1, 0, 0, 1, 0}, 11},
                                                   {{1, 2, 0, 0, 0}, -52},
                                                   {{2, 0, 1, 0, 0}, -46},
                                                   {{3, 1, 0, 0, 0}, 96},
                                                   {{5, 0, 0, 0, 0}, -24}});
}

TEST_CASE("recursion base case and small values") {
    CHECK(coeff_recursion({1}) == -1);
    CHECK(coeff_recursion({0, 1}) == -1);
    CHECK(coeff_recursion({2, 0}) == 1);
    CHECK(coeff_recursion({1, 1, 0}) == 4);
    CHECK(coeff_recursion({3, 0, 0}) == -2);
    CHECK_THROWS_AS(coeff_recursion({2, 1}), std::invalid_argument);
}

TEST_CASE("recursion matches extraction through order 6") {
    for (int n = 1; n <= 6; ++n) {
        CoeffTable rec = coeff_recursion_table(n);
        CoeffTable ext = extract_coefficients(n);
        CHECK(rec.same_entries(ext));
    }
}

TEST_CASE("factorial and near-factorial families") {
    for (int n = 1; n <= 8; ++n) {
        IndexSeq idx(static_cast<std::size_t>(n), 0);
        idx[0] = n;
        BigInt expected = factorial(n - 1);
        if (n % 2 != 0) expected = -expected;
        CHECK(coeff_recursion(idx) == expected);
    }
    for (int n = 2; n <= 8; ++n) {
        IndexSeq idx(static_cast<std::size_t>(n), 0);
        idx[0] = n - 2;
        idx[1] = 1;
        BigInt expected = factorial(n - 1) * (n - 1);
        if (n % 2 == 0) expected = -expected;  // sign (-1)^(n-1)
        CHECK(coeff_recursion(idx) == expected);
    }
}

TEST_CASE("b normalization") {
    CHECK(b_normalize({1, 1, 0}, 4) == BigRat(2));
    CHECK(b_normalize({0, 0, 1}, -1) == BigRat(1, 2));
    for (int n = 1; n <= 8; ++n) {
        IndexSeq idx(static_cast<std::size_t>(n), 0);
        idx[0] = n;
        CHECK(b_normalize(idx, coeff_recursion(idx)) == BigRat(1));
    }
    for (int n = 2; n <= 8; ++n) {
        IndexSeq idx(static_cast<std::size_t>(n), 0);
        idx[0] = n - 2;
        idx[1] = 1;
        CHECK(b_normalize(idx, coeff_recursion(idx)) == BigRat(n - 1));
    }
}

TEST_SUITE_END();
