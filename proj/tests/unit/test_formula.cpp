#include <doctest.h>

#include <functional>

#include "gen.hpp"
#include "hyperlogic/hyperlogic.hpp"
#include "oracles.hpp"

using namespace hyperlogic;

TEST_SUITE("formula") {

TEST_CASE("smallest sentence parses") {
    const Sentence s = parse_hyperltl("exists p. a[p]");
    REQUIRE(s.prefix.size() == 1);
    CHECK(s.prefix[0] == QuantifiedVar{Quant::Exists, "p"});
    CHECK(s.matrix == fml::atom("a", "p"));
}

TEST_CASE("single x point sentence has one universal") {
    const Sentence s = parse_hyperltl("forall p. (!x[p]) U (x[p] & X G !x[p])");
    REQUIRE(s.prefix.size() == 1);
    CHECK(s.prefix[0].quant == Quant::Forall);
    CHECK(s.matrix.kind() == Kind::Until);
    CHECK(s.matrix.rhs().kind() == Kind::And);
}

TEST_CASE("scoping errors") {
    CHECK_THROWS_AS(parse_hyperltl("exists p. a[q]"), ScopeError);
    CHECK_THROWS_AS(parse_hyperltl("exists p. exists p. a[p]"), ScopeError);
    CHECK_THROWS_AS(parse_hyperctl("exists p. X exists p. a[p]"), ScopeError);
    CHECK_THROWS_AS(parse_fo("x <= y"), ScopeError);
    CHECK_NOTHROW(parse_fo("x <= y", true));
}

TEST_CASE("syntax errors carry the offset") {
    try {
        parse_formula("a[p] & & b[p]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_formula("a[p"), ParseError);
    CHECK_THROWS_AS(parse_formula("exists . a[p]"), ParseError);
    CHECK_THROWS_AS(parse_formula(""), ParseError);
}

TEST_CASE("nested quantifier under temporal operators") {
    const Formula f = parse_hyperctl("forall p. G (fbt[p] -> exists q. X (fbt[q] & zero[q]))");
    CHECK(f.kind() == Kind::Forall);
    CHECK(f.lhs().kind() == Kind::Globally);
    CHECK(f.lhs().lhs().rhs().kind() == Kind::Exists);
    CHECK(free_vars(f).empty());
    CHECK(all_vars(f) == std::set<std::string>{"p", "q"});
}

TEST_CASE("first-order parsing") {
    const FoFormula f = parse_fo("exists x. a(x)");
    CHECK(f.kind() == FoKind::Exists);
    CHECK(f.lhs().kind() == FoKind::Atom);
    CHECK(to_string(parse_fo("forall x. exists y. x <= y & a(y)")) == "forall x. exists y. x <= y & a(y)");
}

TEST_CASE("precedence and associativity") {
    CHECK(parse_formula("a[p] U b[p] U c[p]") ==
          fml::until(fml::atom("a", "p"), fml::until(fml::atom("b", "p"), fml::atom("c", "p"))));
    CHECK(parse_formula("a[p] | b[p] & c[p]") ==
          fml::lor(fml::atom("a", "p"), fml::land(fml::atom("b", "p"), fml::atom("c", "p"))));
    CHECK(parse_formula("a[p] -> b[p] -> c[p]") ==
          fml::implies(fml::atom("a", "p"), fml::implies(fml::atom("b", "p"), fml::atom("c", "p"))));
    CHECK(parse_formula("!a[p] U b[p]") == fml::until(fml::neg(fml::atom("a", "p")), fml::atom("b", "p")));
    CHECK(parse_formula("a[p] & b[p] U c[p]") ==
          fml::land(fml::atom("a", "p"), fml::until(fml::atom("b", "p"), fml::atom("c", "p"))));
}

TEST_CASE("print then parse is the identity on random formulas") {
    gen::Rng rng(11);
    for (int i = 0; i < 400; ++i) {
        const Formula f = rng.qf(4, {"a", "b"}, {"p", "q"});
        CHECK(parse_formula(to_string(f)) == f);
    }
    for (int i = 0; i < 200; ++i) {
        const Formula f = rng.ctl(3, {"a", "b"}, 3);
        CHECK(parse_hyperctl(to_string(f)) == f);
    }
}

TEST_CASE("temporal depth") {
    CHECK(temporal_depth(parse_formula("a[p]")) == 0);
    CHECK(temporal_depth(parse_formula("X X o[p]")) == 2);
    CHECK(temporal_depth(parse_formula("F (o[p] & F o[q])")) == 2);
    CHECK(temporal_depth(parse_formula("a[p] U (b[p] | X c[p])")) == 2);
    CHECK(temporal_depth(parse_formula("exists p. G a[p]")) == 1);
}

}  // TEST_SUITE

TEST_SUITE("prenex") {

TEST_CASE("rename and hoist") {
    const Sentence s = to_prenex(parse_formula("(exists p. a[p]) & (exists p. b[p])"));
    CHECK(to_string(s) == "exists p. exists p_1. a[p] & b[p_1]");
}

TEST_CASE("negation through a quantifier") {
    const Sentence s = to_prenex(parse_formula("!(forall p. a[p])"));
    CHECK(to_string(s) == "exists p. !a[p]");
}

TEST_CASE("rejects quantifiers below temporal operators and free variables") {
    CHECK_THROWS_AS(to_prenex(parse_formula("X exists p. a[p]")), ScopeError);
    CHECK_THROWS_AS(to_prenex(parse_formula("a[p]")), ScopeError);
}

TEST_CASE("blocks are interleaved to keep alternations low") {
    const Sentence s = to_prenex(parse_formula("(exists p. forall q. a[p] & b[q]) & (exists r. forall s. a[r] | b[s])"));
    CHECK(classify(s) == AlternationClass{2, Quant::Exists});
}

TEST_CASE("classification") {
    CHECK(classify(parse_hyperltl("exists p. exists q. a[p] & a[q]")) == AlternationClass{1, Quant::Exists});
    CHECK(classify(parse_hyperltl("forall p. exists q. a[p] & a[q]")) == AlternationClass{2, Quant::Forall});
    const AlternationClass zero = classify(Sentence{{}, fml::top()});
    CHECK(zero.level == 0);
    CHECK(zero.is_sigma());
    CHECK(zero.is_pi());
    CHECK(to_string(zero) == "Sigma_0/Pi_0");
    CHECK(to_string(AlternationClass{3, Quant::Forall}) == "Pi_3");
}

TEST_CASE("negation dualizes the class") {
    gen::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        const Sentence s = rng.sentence(rng.range(1, 4), 2, {"a"});
        const AlternationClass c = classify(s);
        const AlternationClass d = classify(to_prenex(fml::neg(s.to_formula())));
        CHECK(d == c.dual());
    }
}

TEST_CASE("prenex conversion preserves truth") {
    gen::Rng rng(7);
    const Alphabet ab({"a", "b"});
    for (int i = 0; i < 150; ++i) {
        std::vector<Sentence> parts;
        for (int j = 0; j < 3; ++j) parts.push_back(rng.sentence(rng.range(1, 2), 2, {"a", "b"}));
        // Random boolean shape over the three components.
        const int shape = static_cast<int>(rng.below(4));
        auto F = [&](int k) { return parts[k].to_formula(); };
        Formula combo;
        std::function<bool(const TraceSet&)> expect;
        auto val = [&](const TraceSet& t, int k) { return oracle::naive_check(parts[k], t); };
        switch (shape) {
        case 0:
            combo = fml::land(F(0), fml::lor(F(1), F(2)));
            expect = [&](const TraceSet& t) { return val(t, 0) && (val(t, 1) || val(t, 2)); };
            break;
        case 1:
            combo = fml::neg(fml::land(F(0), fml::neg(F(1))));
            expect = [&](const TraceSet& t) { return !(val(t, 0) && !val(t, 1)); };
            break;
        case 2:
            combo = fml::implies(F(0), F(2));
            expect = [&](const TraceSet& t) { return !val(t, 0) || val(t, 2); };
            break;
        default:
            combo = fml::iff(F(1), F(2));
            expect = [&](const TraceSet& t) { return val(t, 1) == val(t, 2); };
            break;
        }
        const Sentence pnf = to_prenex(combo);
        CHECK(is_quantifier_free(pnf.matrix));
        for (int k = 0; k < 4; ++k) {
            const TraceSet t = rng.trace_set(ab, 3, 4);
            CHECK(oracle::naive_check(pnf, t) == expect(t));
        }
    }
}

}  // TEST_SUITE

TEST_SUITE("compiled") {

TEST_CASE("sugar is removed and shared subterms are merged") {
    const CoreFormula c = CoreFormula::compile(parse_formula("F a[p] & F a[p]"));
    for (const auto& n : c.nodes()) {
        CHECK(n.op != Op::Exists);
        CHECK(n.op != Op::Forall);
    }
    std::size_t atoms = 0;
    for (const auto& n : c.nodes()) atoms += n.op == Op::Atom;
    CHECK(atoms == 1);
    for (std::uint32_t i = 0; i < c.nodes().size(); ++i) {
        const auto& n = c.node(i);
        if (n.op == Op::Not || n.op == Op::Next || n.op == Op::Or || n.op == Op::Until) CHECK(n.a < i);
        if (n.op == Op::Or || n.op == Op::Until) CHECK(n.b < i);
    }
}

TEST_CASE("variable order and free masks") {
    const CoreFormula c = CoreFormula::compile(parse_formula("exists q. a[p] U b[q]"), {"q", "p"});
    CHECK(c.vars() == std::vector<std::string>{"q", "p"});
    CHECK(c.free_mask(c.root()) == 0b10);
    CHECK(c.has_quantifier(c.root()));
}

}  // TEST_SUITE
