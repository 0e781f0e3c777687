#include <doctest.h>

#include "gen.hpp"
#include "hyperlogic/hyperlogic.hpp"
#include "oracles.hpp"

using namespace hyperlogic;

namespace {

LassoTrace lt(std::vector<Letter> stem, std::vector<Letter> loop) { return LassoTrace(std::move(stem), std::move(loop)); }

TraceSet set_of(const Alphabet& ab, std::vector<LassoTrace> ts) {
    TraceSet t;
    t.alphabet = ab;
    for (auto& x : ts) t.add(std::move(x));
    return t;
}

struct Instance {
    Formula psi;
    CoreFormula core;
    std::vector<LassoTrace> traces;
    std::vector<const LassoTrace*> by_var;
    std::map<std::string, const LassoTrace*> named;
};

Instance random_instance(gen::Rng& rng, const Alphabet& ab, std::size_t depth) {
    Instance in;
    in.psi = rng.qf(depth, ab.props(), {"p", "q"});
    in.core = CoreFormula::compile(in.psi, {"p", "q"});
    // Keep s + p <= 6 for the aligned pair.
    do {
        in.traces = {rng.lasso(ab.size(), 4), rng.lasso(ab.size(), 4)};
    } while (align(in.traces).horizon() > 6);
    in.by_var = {&in.traces[0], &in.traces[1]};
    in.named = {{"p", &in.traces[0]}, {"q", &in.traces[1]}};
    return in;
}

// Re-checks every tabulated entry against the local consistency conditions.
void audit(const ExpansionTable& e, const std::vector<const LassoTrace*>& by_var, const Alphabet& ab) {
    const CoreFormula& c = e.core();
    const std::size_t s = e.alignment().stem;
    const std::size_t h = e.positions();
    auto next = [&](std::size_t j) { return j + 1 < h ? j + 1 : s; };
    for (std::uint32_t id = 0; id < c.nodes().size(); ++id) {
        if (!e.has(id)) continue;
        const CoreNode& n = c.node(id);
        for (std::size_t j = 0; j < h; ++j) {
            const bool v = e.value(id, j);
            switch (n.op) {
            case Op::True: CHECK(v); break;
            case Op::Atom: {
                const Letter bit = ab.bit(c.props()[n.prop]);
                CHECK(v == ((by_var[n.var]->at(j) & bit) != 0));
                break;
            }
            case Op::Not: CHECK(v == !e.value(n.a, j)); break;
            case Op::Or: CHECK(v == (e.value(n.a, j) || e.value(n.b, j))); break;
            case Op::Next: CHECK(v == e.value(n.a, next(j))); break;
            case Op::Until: {
                CHECK(v == (e.value(n.b, j) || (e.value(n.a, j) && e.value(id, next(j)))));
                // A true until has a witness within one pass over the positions.
                bool witness = false;
                std::size_t k = j;
                for (std::size_t step = 0; step <= h && !witness; ++step, k = next(k)) {
                    if (e.value(n.b, k)) witness = true;
                    else if (!e.value(n.a, k)) break;
                }
                CHECK(v == witness);
                break;
            }
            default: FAIL("quantifier in table");
            }
        }
    }
}

}  // namespace

TEST_SUITE("expansion") {

const Alphabet ab({"a", "b"});

TEST_CASE("atom values follow the trace") {
    const CoreFormula c = CoreFormula::compile(parse_formula("a[p]"));
    const LassoTrace t = lt({1}, {0});
    const LassoTrace* tr[] = {&t};
    const ExpansionTable e = build_expansion(c, tr, ab);
    CHECK(e.value(c.root(), 0));
    CHECK_FALSE(e.value(c.root(), 1));
    CHECK_FALSE(e.value(c.root(), 9));
}

TEST_CASE("infinitely often on a two-letter loop") {
    const CoreFormula c = CoreFormula::compile(parse_formula("G F a[p]"));
    const LassoTrace t = lt({}, {0, 1});
    const LassoTrace* tr[] = {&t};
    const ExpansionTable e = build_expansion(c, tr, ab);
    const auto expect = oracle::unrolled_positions(parse_formula("G F a[p]"), {{"p", &t}}, ab, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        CHECK(e.value(c.root(), j));
        CHECK(expect[j]);
    }
}

TEST_CASE("until without witness is false everywhere") {
    const CoreFormula c = CoreFormula::compile(parse_formula("!a[p] U b[p]"));
    const LassoTrace t = lt({1, 1}, {1});
    const LassoTrace* tr[] = {&t};
    const ExpansionTable e = build_expansion(c, tr, ab);
    for (std::size_t j = 0; j < 5; ++j) CHECK_FALSE(e.value(c.root(), j));
}

TEST_CASE("errors") {
    const CoreFormula c = CoreFormula::compile(parse_formula("a[p] & b[q]"), {"p", "q"});
    const LassoTrace t = lt({}, {1});
    const LassoTrace* one[] = {&t, nullptr};
    CHECK_THROWS_AS(build_expansion(c, one, ab), EvalError);
    const LassoTrace* two[] = {&t, &t};
    CHECK_THROWS_AS(build_expansion(c, two, Alphabet({"a"})), EvalError);
    CHECK_THROWS_AS(build_expansion(c, two, ab, Alignment{0, 0}), EvalError);
    const LassoTrace u = lt({0}, {1});
    const LassoTrace* three[] = {&u, &t};
    CHECK_THROWS_AS(build_expansion(c, three, ab, Alignment{0, 2}), EvalError);
    const CoreFormula q = CoreFormula::compile(parse_formula("exists p. a[p]"));
    const LassoTrace* tq[] = {&t};
    CHECK_THROWS_AS(build_expansion(q, tq, ab), EvalError);
}

TEST_CASE("consistency audit on random tables") {
    gen::Rng rng(101);
    for (int i = 0; i < 300; ++i) {
        Instance in = random_instance(rng, ab, 3);
        const ExpansionTable e = build_expansion(in.core, in.by_var, ab);
        audit(e, in.by_var, ab);
    }
}

TEST_CASE("tables are periodic beyond the stem") {
    gen::Rng rng(102);
    for (int i = 0; i < 300; ++i) {
        Instance in = random_instance(rng, ab, 3);
        const ExpansionTable e = build_expansion(in.core, in.by_var, ab);
        const Alignment a = e.alignment();
        const ExpansionTable wide = build_expansion(in.core, in.by_var, ab, Alignment{a.stem, 2 * a.period});
        for (std::uint32_t id = 0; id < in.core.nodes().size(); ++id) {
            if (!e.has(id)) continue;
            for (std::size_t j = a.stem; j < a.stem + a.period; ++j) {
                CHECK(wide.value(id, j) == wide.value(id, j + a.period));
                CHECK(wide.value(id, j) == e.value(id, j));
            }
            for (std::size_t j = 0; j < a.stem; ++j) CHECK(wide.value(id, j) == e.value(id, j));
        }
    }
}

TEST_CASE("agrees with the unrolling oracle at every position") {
    gen::Rng rng(103);
    for (int i = 0; i < 300; ++i) {
        Instance in = random_instance(rng, ab, 3);
        const ExpansionTable e = build_expansion(in.core, in.by_var, ab);
        const auto expect = oracle::unrolled_positions(in.psi, in.named, ab, e.positions());
        for (std::size_t j = 0; j < e.positions(); ++j) CHECK(e.value(in.core.root(), j) == expect[j]);
    }
}

}  // TEST_SUITE

TEST_SUITE("hyperltl") {

const Alphabet ab({"a", "b"});

TEST_CASE("existential on a single trace") {
    CHECK(check(parse_hyperltl("exists p. a[p]"), set_of(ab, {lt({}, {1})})));
    CHECK_FALSE(check(parse_hyperltl("exists p. a[p]"), set_of(ab, {lt({}, {2})})));
}

TEST_CASE("exactly one x point") {
    const Alphabet x({"x"});
    const Sentence phi1 = parse_hyperltl("forall p. (!x[p]) U (x[p] & X G !x[p])");
    CHECK(check(phi1, set_of(x, {lt({0, 1}, {0})})));
    CHECK_FALSE(check(phi1, set_of(x, {lt({}, {1})})));
    CHECK_FALSE(check(phi1, set_of(x, {lt({0, 1}, {0}), lt({}, {0})})));
}

TEST_CASE("bounded-set sentence") {
    const Alphabet ad({"a", "dollar"});
    const Sentence phib = gen_phib({"a"});
    CHECK(check(phib, set_of(ad, {lt({1}, {2}), lt({0}, {2})})));
    CHECK_FALSE(check(phib, set_of(ad, {lt({1}, {2}), lt({0, 0}, {2})})));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(check(parse_hyperltl("exists p. a[p]"), TraceSet{ab, {}}), EvalError);
    CHECK_THROWS_AS(check(parse_hyperltl("exists p. c[p]"), set_of(ab, {lt({}, {1})})), EvalError);
    CHECK_THROWS_AS(check(Sentence{{}, fml::atom("a", "p")}, set_of(ab, {lt({}, {1})})), ScopeError);
}

TEST_CASE("quantifier duality") {
    gen::Rng rng(201);
    for (int i = 0; i < 300; ++i) {
        Sentence s = rng.sentence(rng.range(1, 3), 3, ab.props());
        s.prefix[0].quant = Quant::Forall;
        Sentence d = s;
        d.prefix[0].quant = Quant::Exists;
        for (std::size_t k = 1; k < d.prefix.size(); ++k) d.prefix[k].quant = dual(d.prefix[k].quant);
        d.matrix = fml::neg(s.matrix);
        const TraceSet t = rng.trace_set(ab, 3, 5);
        CHECK(check(s, t) == !check(d, t));
    }
}

TEST_CASE("miniscoped, plain and naive evaluation agree") {
    gen::Rng rng(202);
    for (int i = 0; i < 400; ++i) {
        const Sentence s = rng.sentence(rng.range(1, 4), 3, ab.props());
        const TraceSet t = rng.trace_set(ab, 3, 5);
        const bool fast = check(s, t);
        CHECK(fast == check(s, t, CheckOptions{false}));
        CHECK(fast == oracle::naive_check(s, t));
    }
}

TEST_CASE("check_formula converts non-prenex input") {
    const TraceSet t = set_of(ab, {lt({}, {1}), lt({}, {2})});
    CHECK(check_formula(parse_formula("(exists p. a[p]) & (exists p. b[p])"), t));
    CHECK_FALSE(check_formula(parse_formula("(forall p. a[p]) | (forall p. b[p])"), t));
}

TEST_CASE("eval_qf") {
    const std::map<std::string, LassoTrace> pi{{"p", lt({0}, {1})}, {"q", lt({}, {2})}};
    CHECK(eval_qf(parse_formula("X a[p] & b[q]"), pi, ab));
    CHECK_FALSE(eval_qf(parse_formula("a[p]"), pi, ab));
    CHECK_THROWS_AS(eval_qf(parse_formula("a[r]"), pi, ab), EvalError);
}

}  // TEST_SUITE

TEST_SUITE("sat_enum") {

TEST_CASE("candidates match the independent enumeration") {
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t s = 0; s <= 2; ++s) {
            for (std::size_t l = 1; l <= 3; ++l) CHECK(candidate_traces(n, s, l) == oracle::brute_candidates(n, s, l));
        }
    }
    CHECK_THROWS_AS(candidate_traces(5, 3, 3), EvalError);
}

TEST_CASE("smallest witness") {
    const SatResult r = sat_enum(parse_hyperltl("exists p. a[p]"), SearchBudget{2, 2, 2, std::nullopt});
    REQUIRE(r.status == SatStatus::Found);
    REQUIRE(r.model.size() == 1);
    CHECK(r.model[0] == lt({}, {1}));
    CHECK(r.sets_checked == 2);
}

TEST_CASE("contradiction is exhausted") {
    const SatResult r = sat_enum(parse_hyperltl("exists p. a[p] & !a[p]"), SearchBudget{2, 2, 2, std::nullopt});
    CHECK(r.status == SatStatus::Exhausted);
    CHECK(r.sets_checked > 0);
}

TEST_CASE("successor requirement alone has a one-trace model") {
    const Sentence phi2 = to_prenex(parse_formula("(exists p. x[p]) & (forall p. exists q. F (x[p] & X x[q]))"));
    const SatResult r = sat_enum(phi2, SearchBudget{1, 1, 1, std::nullopt});
    REQUIRE(r.status == SatStatus::Found);
    REQUIRE(r.model.size() == 1);
    CHECK(r.model[0] == LassoTrace({}, {1}));
}

TEST_CASE("infinite-model sentence is exhausted") {
    const Sentence phi = to_prenex(parse_formula("(forall p. !x[p] U (x[p] & X G !x[p])) & (exists p. x[p]) & "
                                                 "(forall p. exists q. F (x[p] & X x[q]))"));
    for (std::size_t k = 1; k <= 3; ++k) {
        const SatResult r = sat_enum(phi, SearchBudget{k, 2, 2, std::nullopt});
        CHECK(r.status == SatStatus::Exhausted);
    }
}

TEST_CASE("models verify and threads do not change the answer") {
    gen::Rng rng(301);
    int found = 0;
    for (int i = 0; i < 40; ++i) {
        const Sentence s = rng.sentence(rng.range(1, 3), 2, {"a", "b"});
        const SearchBudget b{2, 1, 2, std::nullopt};
        const SatResult one = sat_enum(s, b, 1);
        const SatResult many = sat_enum(s, b, 4);
        CHECK(one.status == many.status);
        if (one.status == SatStatus::Found) {
            ++found;
            CHECK(check(s, one.model));
            REQUIRE(one.model.size() == many.model.size());
            for (std::size_t k = 0; k < one.model.size(); ++k) CHECK(one.model[k] == many.model[k]);
        }
    }
    CHECK(found > 10);
}

TEST_CASE("time limit") {
    const Sentence phi = parse_hyperltl("exists p. exists q. a[p] & !a[p] & b[q]");
    const SatResult r = sat_enum(phi, SearchBudget{6, 3, 3, std::chrono::milliseconds(50)});
    CHECK(r.status == SatStatus::TimedOut);
}

TEST_CASE("budget validation") {
    CHECK_THROWS_AS(sat_enum(parse_hyperltl("exists p. a[p]"), SearchBudget{0, 1, 1, std::nullopt}), EvalError);
    CHECK_THROWS_AS(sat_enum(parse_hyperltl("exists p. a[p]"), SearchBudget{1, 1, 0, std::nullopt}), EvalError);
}

}  // TEST_SUITE
