#include <doctest.h>

#include "hyperlogic/hyperlogic.hpp"

using namespace hyperlogic;

namespace {

Word word(std::vector<Letter> letters) { return Word{Alphabet({"a"}), std::move(letters)}; }

}  // namespace

TEST_SUITE("first-order") {

TEST_CASE("evaluation") {
    CHECK(eval_fo(word({1}), parse_fo("exists x. a(x)")));
    CHECK_FALSE(eval_fo(word({0, 1}), parse_fo("forall x. a(x)")));
    CHECK(eval_fo(word({1, 1}), parse_fo("exists x. forall y. x <= y")));
    CHECK_FALSE(eval_fo(word({1, 1}), parse_fo("exists x. forall y. y <= x & !(x <= y)")));
    CHECK(eval_fo(word({0, 1}), parse_fo("a(x) & x <= y", true), {{"x", 1}, {"y", 1}}));
    CHECK_FALSE(eval_fo(word({0, 1}), parse_fo("b(x)", true), {{"x", 1}}));
    CHECK_THROWS_AS(eval_fo(word({0, 1}), parse_fo("a(x)", true)), EvalError);
    CHECK_THROWS_AS(eval_fo(word({0, 1}), parse_fo("a(x)", true), {{"x", 2}}), EvalError);
}

TEST_CASE("encoding") {
    const TraceSet t = encode_word(word({1, 0}), StretchSpec::uniform(1));
    CHECK(t.alphabet == Alphabet({"a", "o"}));
    REQUIRE(t.size() == 2);
    CHECK(t[0] == LassoTrace({1, 2}, {0}));
    CHECK(t[1] == LassoTrace({0, 0, 2}, {0}));
    CHECK(t.traces[1].name == "t1");

    const TraceSet t3 = encode_word(word({1, 0}), StretchSpec::uniform(3));
    CHECK(t3[0].at(3) == 2);
    CHECK(t3[1].at(6) == 2);
    for (const auto& nt : t3.traces) CHECK(nt.trace.loop == std::vector<Letter>{0});
}

TEST_CASE("translation keeps the prefix") {
    CHECK(to_string(fo_to_hyperltl(parse_fo("exists x. a(x)"))) == "exists x. a[x]");
    CHECK(to_string(fo_to_hyperltl(parse_fo("forall x. exists y. x <= y"))) == "forall x. exists y. F (o[x] & F o[y])");
    const Sentence s = fo_to_hyperltl(parse_fo("forall x. exists y. forall z. a(x) | y <= z"));
    CHECK(classify(s) == AlternationClass{3, Quant::Forall});
    CHECK_THROWS_AS(fo_to_hyperltl(parse_fo("exists x. a(x) & forall y. x <= y")), ScopeError);
    CHECK_THROWS_AS(fo_to_hyperltl(parse_fo("a(x)", true)), ScopeError);
}

TEST_CASE("stretching") {
    const TraceSet t = encode_word(word({1, 0}), StretchSpec::uniform(1));
    const TraceSet s = stretch_set(t, 3);
    CHECK(s[0].at(3) == 2);
    CHECK(s[1].at(6) == 2);
    CHECK(s[0].at(0) == 1);
    const TraceSet id = stretch_set(encode_word(word({1, 0, 1}), StretchSpec::uniform(1)), 1);
    const TraceSet enc1 = encode_word(word({1, 0, 1}), StretchSpec::uniform(1));
    for (std::size_t i = 0; i < id.size(); ++i) CHECK(id[i] == enc1[i]);

    const TraceSet odd = encode_word(word({0, 1, 1}), StretchSpec::table({2, 3, 9}));
    const TraceSet back = stretch_set(odd, 2);
    CHECK(back[0].at(2) == 2);
    CHECK(back[1].at(4) == 2);
    CHECK(back[2].at(6) == 2);

    const auto pi = stretch_assignment(odd, {{"p", 2}, {"q", 0}}, 2);
    CHECK(pi.at("p") == back[2]);
    CHECK(pi.at("q") == back[0]);

    TraceSet bad = t;
    bad.traces[0].trace.loop = {2};
    CHECK_THROWS_AS(stretch_set(bad, 2), EvalError);
}

}  // TEST_SUITE

TEST_SUITE("simplification") {

TEST_CASE("class enumeration") {
    const auto cs = label_classes({"a"}, {"p", "q"});
    // 4 label sets times 3 preorders on two variables.
    CHECK(cs.size() == 12);
    CHECK(cs[0].labels.empty());
    CHECK(cs[0].rank == std::map<std::string, std::size_t>{{"p", 0}, {"q", 0}});
    CHECK(label_classes({}, {"p", "q", "r"}).size() == 13);
}

TEST_CASE("each representative lies in exactly one class") {
    const std::vector<std::string> ps{"a"};
    const std::vector<std::string> vs{"p", "q", "r"};
    const Alphabet ab({"a", "o"});
    const auto cs = label_classes(ps, vs);
    for (const auto& c : cs) {
        const auto rep = representative(c, ab, 2);
        std::size_t hits = 0;
        for (const auto& d : cs) {
            const bool in = eval_qf(class_formula(d, ps, vs), rep, ab);
            hits += in;
            if (in) CHECK(d == c);
        }
        CHECK(hits == 1);
    }
}

TEST_CASE("representative placement") {
    LabelClass c;
    c.labels = {{"a", "q"}};
    c.rank = {{"p", 1}, {"q", 0}};
    const auto rep = representative(c, Alphabet({"a", "o"}), 3);
    CHECK(rep.at("q") == LassoTrace({1, 0, 0, 2}, {0}));
    CHECK(rep.at("p") == LassoTrace({0, 0, 0, 0, 0, 0, 2}, {0}));
}

TEST_CASE("marker too late for its depth") { CHECK(to_string(simplify_qf(parse_formula("X X o[p]"))) == "false"); }

TEST_CASE("order formula picks the ordered classes") {
    const std::vector<std::string> vs{"p1", "p2"};
    std::vector<Formula> expect;
    for (const auto& c : label_classes({}, vs)) {
        if (c.rank.at("p1") <= c.rank.at("p2")) expect.push_back(class_formula(c, {}, vs));
    }
    CHECK(expect.size() == 2);
    CHECK(simplify_qf(parse_formula("F (o[p1] & F o[p2])")) == fml::disj(expect));
}

TEST_CASE("letter at time zero") {
    const std::vector<std::string> vs{"p1"};
    std::vector<Formula> expect;
    for (const auto& c : label_classes({"a"}, vs)) {
        if (!c.labels.empty()) expect.push_back(class_formula(c, {"a"}, vs));
    }
    CHECK(simplify_qf(parse_formula("a[p1]")) == fml::disj(expect));
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(simplify_qf(parse_formula("dollar[p]")), EvalError);
    CHECK_THROWS_AS(simplify_qf(parse_formula("exists p. a[p]")), EvalError);
}

}  // TEST_SUITE
