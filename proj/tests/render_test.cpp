#include <doctest.h>

#include "ckforest/render.hpp"
#include "ckforest/verify.hpp"

using namespace ckforest;

namespace {

Forest F(const char* text) { return parse_forest(text); }
LinComb L(const char* text) { return LinComb::of(parse_forest(text)); }

LinComb lincomb_from_json(const Json& j) {
    LinComb out;
    for (const auto& term : j)
        out.add_term(parse_forest(term.at("forest").get<std::string>()),
                     BigInt(term.at("coefficient").get<std::string>()));
    return out;
}

Tensor tensor_from_json(const Json& j) {
    Tensor out;
    for (const auto& term : j)
        out.add_term(parse_forest(term.at("left").get<std::string>()),
                     parse_forest(term.at("right").get<std::string>()),
                     BigInt(term.at("coefficient").get<std::string>()));
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("render");

TEST_CASE("linear combination text form") {
    CHECK(to_text(LinComb()) == "0");
    CHECK(to_text(LinComb::unit()) == "1*1");
    CHECK(to_text(antipode_recursive(L("[[]]"))) == "-1*[[]] + 1*[] []");
    CHECK(to_text(prelie(F("[[]] []"), F("[]"))) ==
          "1*[[][]] [] + 1*[[[]]] [] + 1*[[]] [[]]");
    CHECK(to_text(antipode_recursive(delta(1))) == "-1*[]");
}

TEST_CASE("tensor text form") {
    CHECK(to_text(coproduct(Forest())) == "1⊗1");
    CHECK(to_text(coproduct(F("[[]]"))) ==
          "1⊗[[]] + []⊗[] + [[]]⊗1");
    Tensor t;
    t.add_term(F("[]"), F("[]"), -3);
    CHECK(to_text(t) == "-3*[]⊗[]");
}

TEST_CASE("json round trips") {
    LinComb x = antipode_recursive(delta(4));
    CHECK(lincomb_from_json(to_json(x)) == x);

    Tensor t = delta_coproduct(3);
    CHECK(tensor_from_json(to_json(t)) == t);

    Json jx = to_json(x);
    for (const auto& term : jx) {
        CHECK(term.contains("coefficient"));
        CHECK(term.contains("forest"));
    }
}

TEST_CASE("coefficient table renderings") {
    CoeffTable t = coeff_recursion_table(3);
    CHECK(to_text(t) ==
          "n=3 method=recursion\n"
          "(0,0,1) a=-1 b=1/2\n"
          "(1,1,0) a=4 b=2\n"
          "(3,0,0) a=-2 b=1\n");
    CHECK(to_csv(t) ==
          "n,method,index,a,b\n"
          "3,recursion,0 0 1,-1,1/2\n"
          "3,recursion,1 1 0,4,2\n"
          "3,recursion,3 0 0,-2,1\n");
    Json j = to_json(t);
    CHECK(j["n"] == 3);
    CHECK(j["method"] == "recursion");
    CHECK(j["entries"].size() == 3);
    CHECK(j["entries"][0]["index"] == Json::array({0, 0, 1}));
    CHECK(j["entries"][0]["a"] == "-1");
    CHECK(j["entries"][0]["b"] == "1/2");

    // the documented schema carries the whole table
    std::map<IndexSeq, BigInt> rebuilt;
    for (const auto& e : j["entries"]) {
        IndexSeq idx = e.at("index").get<std::vector<int>>();
        rebuilt.emplace(idx, BigInt(e.at("a").get<std::string>()));
        CHECK(e.at("b").get<std::string>() ==
              b_normalize(idx, rebuilt.at(idx)).str());
    }
    CHECK(rebuilt == t.entries);
}

TEST_CASE("polynomial text form in graded lex order") {
    CHECK(to_text(poly_P(DominantSeq{1, 1})) ==
          "2*X1^2 + 1*X1*X2 + -9*X1 + -1*X2 + 7");
    CHECK(to_text(poly_P(DominantSeq{0, 1})) == "1*X1 + -1");
    CHECK(to_text(poly_P(DominantSeq{})) == "1");
    CHECK(to_text(MultiPoly()) == "0");
    Json j = to_json(poly_P(DominantSeq{0, 1}));
    CHECK(j["variables"] == 1);
    CHECK(j["terms"].size() == 2);
}

TEST_CASE("harmonic form text") {
    HarmonicForm f = expected_harmonic_form(DominantSeq{0, 1});
    CHECK(to_text(f) == "b(n) = -1 + 1*n + (-1)*H(n-1,1)");
    Json j = to_json(f);
    CHECK(j["poly"] == Json::array({"-1", "1", "0"}));
    CHECK(j["harmonic"][0]["depth"] == 1);
}

TEST_SUITE_END();
