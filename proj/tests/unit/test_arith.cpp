#include <doctest.h>

#include "hyperlogic/hyperlogic.hpp"

using namespace hyperlogic;

namespace {

std::string body(const char* text) { return to_string(translate_arith_body(parse_arith(text))); }

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("parsing") {
    const ArithSentence s = parse_arith("# comment\n(third (X1 X2) (exists set Y (mem Y X2)))");
    CHECK(s.third == std::vector<std::string>{"X1", "X2"});
    CHECK(s.body.kind == ArithFormula::Kind::Exists);
    CHECK(s.body.sort == Sort::Set);
    CHECK(s.body.kids.at(0).kind == ArithFormula::Kind::MemThird);
}

TEST_CASE("syntax and typing errors") {
    CHECK_THROWS_AS(parse_arith("(third () (exists num x (lt x x))"), ParseError);
    CHECK_THROWS_AS(parse_arith("(third () (frob x))"), ParseError);
    CHECK_THROWS_AS(parse_arith("(third () (lt x y))"), ScopeError);
    CHECK_THROWS_AS(parse_arith("(third () (exists num x (exists num x (lt x x))))"), ScopeError);
    CHECK_THROWS_AS(parse_arith("(third () (exists set Y (lt Y Y)))"), ScopeError);
    CHECK_THROWS_AS(parse_arith("(third (X1) (exists num x (mem x X1)))"), ScopeError);
    CHECK_THROWS_AS(parse_arith("(third () (exists num x (exists num y (mem y x))))"), ScopeError);
}

TEST_CASE("predicates") {
    CHECK(body("(third () (exists num x (exists num y (lt x y))))") ==
          "exists p_x. X pset[p_x] & X (zero[p_x] U (one[p_x] & X G zero[p_x])) & exists p_y. X pset[p_y] & "
          "X (zero[p_y] U (one[p_y] & X G zero[p_y])) & F (one[p_x] & X F one[p_y])");
    CHECK(body("(third (X1 X2) (exists set Y (not (mem Y X2))))") == "exists p_Y. X pset[p_Y] & !X a2[p_Y]");
    CHECK(body("(third () (exists num x (exists set Y (mem x Y))))").find("F (one[p_x] & one[p_Y])") !=
          std::string::npos);
}

TEST_CASE("operations and universal quantifiers") {
    CHECK(body("(third () (forall num x (add x x x)))") ==
          "forall p_x. X pset[p_x] & X (zero[p_x] U (one[p_x] & X G zero[p_x])) -> exists op1. X add[op1] & "
          "F (argl[op1] & one[p_x]) & F (argr[op1] & one[p_x]) & F (res[op1] & one[p_x])");
    CHECK(body("(third () (exists num x (exists num y (mul x y x))))").find("X mult[op1] & F (argl[op1] & one[p_x]) & "
                                                                           "F (argr[op1] & one[p_y])") != std::string::npos);
}

TEST_CASE("constraints") {
    const Formula c = arith_constraints(2);
    const auto ps = props(c);
    for (const char* p : {"fbt", "pset", "zero", "one", "a1", "a2", "add", "mult", "argl", "argr", "res"}) {
        CHECK(ps.count(p) == 1);
    }
    CHECK(free_vars(c).empty());
    const std::string text = to_string(arith_to_hyperctl(parse_arith("(third (X1) (exists set Y (mem Y X1)))")));
    for (const auto& c : phiset_conjuncts()) CHECK(text.find("(" + to_string(c) + ")") != std::string::npos);
    CHECK(text.find("X a1[p_Y]") != std::string::npos);
    CHECK_NOTHROW(parse_hyperctl(text));
}

}  // TEST_SUITE
