#include <doctest.h>

#include "ckforest/prelie.hpp"
#include "ckforest/verify.hpp"

using namespace ckforest;

namespace {

Forest F(const char* text) { return parse_forest(text); }
LinComb L(const char* text) { return LinComb::of(parse_forest(text)); }

}  // namespace

TEST_SUITE_BEGIN("prelie");

TEST_CASE("grafting at a single vertex") {
    CHECK(graft_at(F("[]"), VertexId{0, {}}, F("[]")) == F("[[]]"));
    CHECK(graft_at(F("[[]]"), VertexId{0, {}}, F("[]")) == F("[[][]]"));
    CHECK(graft_at(F("[[]]"), VertexId{0, {0}}, F("[]")) == F("[[[]]]"));
    CHECK(graft_at(F("[]"), VertexId{0, {}}, F("[] [] []")) == F("[[][][]]"));
    // vertex count adds up
    CHECK(graft_at(F("[[]] []"), VertexId{1, {}}, F("[[]]")).vertex_count() == 5);
    CHECK_THROWS_AS(graft_at(F("[]"), VertexId{0, {0}}, F("[]")), std::invalid_argument);
    CHECK_THROWS_AS(graft_at(F("[]"), VertexId{2, {}}, F("[]")), std::invalid_argument);
}

TEST_CASE("prelie products from the grafting table") {
    CHECK(prelie(F("[[]] []"), F("[]")) ==
          L("[[][]] []") + L("[[[]]] []") + L("[[]] [[]]"));
    CHECK(prelie(F("[[[]]]"), F("[]")) ==
          L("[[][[]]]") + L("[[[][]]]") + L("[[[[]]]]"));
    CHECK(prelie(F("[[]]"), F("[[]]")) == L("[[][[]]]") + L("[[[[]]]]"));
    CHECK(prelie(F("[]"), F("[] [] []")) == L("[[][][]]"));
    CHECK(prelie(F("[]"), F("[[]] []")) == L("[[][[]]]"));
    CHECK(prelie(F("[]"), F("[[][]]")) == L("[[[][]]]"));
    CHECK(prelie(F("[]"), F("[[[]]]")) == L("[[[[]]]]"));
    CHECK(prelie(F("[[][]]"), F("[]")) == L("[[][][]]") + 2 * L("[[][[]]]"));
}

TEST_CASE("nothing grafts onto the unit") {
    for (int n = 0; n <= 5; ++n)
        for (const Forest& f : enumerate_forests(n))
            CHECK(prelie(Forest(), f).is_zero());
}

TEST_CASE("growth operator adds one leaf in all ways") {
    CHECK(growth_N(L("[]")) == L("[[]]"));
    CHECK(growth_N(L("[[][]]")) == L("[[][][]]") + 2 * L("[[][[]]]"));
    CHECK(growth_N(L("[] [] []")) == 3 * L("[[]] [] []"));
    CHECK(growth_N(LinComb::unit()).is_zero());
}

TEST_CASE("bilinearity") {
    LinComb a = 2 * L("[]") - L("[[]]");
    LinComb b = L("[]") + 3 * L("[] []");
    LinComb direct = prelie(a, b);
    LinComb expanded = 2 * prelie(F("[]"), F("[]")) + 6 * prelie(F("[]"), F("[] []")) -
                       prelie(F("[[]]"), F("[]")) - 3 * prelie(F("[[]]"), F("[] []"));
    CHECK(direct == expanded);
}

TEST_CASE("com-prelie axiom suite on a reduced universe") {
    VerifyOptions opt;
    opt.max_size = 4;
    opt.triple_size = 5;
    opt.random_triples = 25;
    opt.random_size = 6;
    SuiteResult r = verify_com_prelie_axioms(opt);
    INFO(r.summary());
    CHECK(r.passed);
}

TEST_CASE("theorem suite on a reduced universe") {
    VerifyOptions opt;
    opt.max_size = 4;
    opt.random_triples = 25;
    opt.random_size = 6;
    SuiteResult r = verify_theorem_1_3(opt);
    INFO(r.summary());
    CHECK(r.passed);
}

TEST_SUITE_END();
