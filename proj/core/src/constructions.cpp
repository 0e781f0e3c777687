#include "hyperlogic/constructions.hpp"

#include <algorithm>

#include "hyperlogic/error.hpp"
#include "hyperlogic/prenex.hpp"
#include "hyperlogic/split.hpp"

namespace hyperlogic {

using namespace fml;

void TileSet::validate() const {
    if (tiles.empty()) throw EvalError("tile set is empty");
    std::set<std::string> names;
    for (const auto& t : tiles) {
        if (t.name == "x" || t.name == "null") throw EvalError("tile name " + t.name + " is reserved");
        if (!names.insert(t.name).second) throw EvalError("duplicate tile " + t.name);
        for (const auto* c : {&t.north, &t.south, &t.east, &t.west}) {
            if (std::find(colors.begin(), colors.end(), *c) == colors.end()) {
                throw EvalError("tile " + t.name + " uses undeclared color " + *c);
            }
        }
    }
    if (!names.count(recurring)) throw EvalError("recurring tile " + recurring + " is not a tile");
}

const Tile& TileSet::tile(const std::string& name) const {
    for (const auto& t : tiles) {
        if (t.name == name) return t;
    }
    throw EvalError("unknown tile " + name);
}

namespace {

Formula exactly_one_x(const std::string& p) {
    return until(neg(atom("x", p)), land(atom("x", p), next(always(neg(atom("x", p))))));
}

Formula infinitely_many_rows() {
    return land(exists("p", atom("x", "p")),
                forall("p1", exists("p2", eventually(land(atom("x", "p1"), next(atom("x", "p2")))))));
}

Formula same_tiles_in_row(const TileSet& ts) {
    std::vector<Formula> same;
    for (const auto& t : ts.tiles) same.push_back(iff(atom(t.name, "p1"), atom(t.name, "p2")));
    return forall("p1", forall("p2", implies(eventually(land(atom("x", "p1"), atom("x", "p2"))),
                                             always(conj(same)))));
}

Formula one_tile(const std::vector<std::string>& names) {
    std::vector<Formula> cases;
    for (const auto& t : names) {
        std::vector<Formula> parts{atom(t, "p")};
        for (const auto& u : names) {
            if (u != t) parts.push_back(neg(atom(u, "p")));
        }
        cases.push_back(conj(parts));
    }
    return forall("p", always(disj(cases)));
}

// Tile at the current position of p has a vertically matching tile one step later.
Formula vertical_match(const TileSet& ts) {
    std::vector<Formula> cases;
    for (const auto& t : ts.tiles) {
        std::vector<Formula> above;
        for (const auto& u : ts.tiles) {
            if (t.north == u.south) above.push_back(next(atom(u.name, "p")));
        }
        cases.push_back(land(atom(t.name, "p"), disj(above)));
    }
    return disj(cases);
}

// Tile on p1 matches the tile on p2 to its right at the current position.
Formula horizontal_match(const TileSet& ts) {
    std::vector<Formula> cases;
    for (const auto& t : ts.tiles) {
        std::vector<Formula> right;
        for (const auto& u : ts.tiles) {
            if (t.east == u.west) right.push_back(atom(u.name, "p2"));
        }
        cases.push_back(land(atom(t.name, "p1"), disj(right)));
    }
    return disj(cases);
}

Formula adjacent_rows() { return eventually(land(atom("x", "p1"), next(atom("x", "p2")))); }

std::vector<std::string> tile_names(const TileSet& ts) {
    std::vector<std::string> names;
    for (const auto& t : ts.tiles) names.push_back(t.name);
    return names;
}

Formula all_props_false(const std::vector<std::string>& alphabet, const std::string& v) {
    std::vector<Formula> parts;
    for (const auto& a : alphabet) parts.push_back(neg(atom(a, v)));
    return conj(parts);
}

Formula dollar(const std::string& v) { return atom(kDollar, v); }

void reject_dollar(const Sentence& s) {
    if (props(s.matrix).count(kDollar)) throw EvalError("input sentence already mentions " + kDollar);
}

// Wraps the prefix of `s` around its matrix, guarding each quantified
// variable with `guard(var)`.
template <class Guard>
Formula relativize(const Sentence& s, Formula matrix, Guard guard) {
    Formula f = std::move(matrix);
    for (std::size_t i = s.prefix.size(); i-- > 0;) {
        const auto& q = s.prefix[i];
        f = q.quant == Quant::Exists ? exists(q.var, land(guard(q.var), f)) : forall(q.var, implies(guard(q.var), f));
    }
    return f;
}

}  // namespace

std::vector<Formula> tiling_conjuncts(const TileSet& ts) {
    ts.validate();
    return {
        forall("p", exactly_one_x("p")),
        infinitely_many_rows(),
        same_tiles_in_row(ts),
        one_tile(tile_names(ts)),
        forall("p", always(vertical_match(ts))),
        forall("p1", forall("p2", implies(adjacent_rows(), always(horizontal_match(ts))))),
        exists("p", land(atom("x", "p"), always(eventually(atom(ts.recurring, "p"))))),
    };
}

Sentence gen_tiling(const TileSet& ts) { return to_prenex(conj(tiling_conjuncts(ts))); }

std::vector<Formula> tiling_diagonal_conjuncts(const TileSet& ts) {
    ts.validate();
    auto names = tile_names(ts);
    names.push_back("null");
    const Formula h = horizontal_match(ts);
    return {
        forall("p", exactly_one_x("p")),
        infinitely_many_rows(),
        same_tiles_in_row(ts),
        one_tile(names),
        forall("p", until(vertical_match(ts), atom("x", "p"))),
        forall("p1", forall("p2", implies(adjacent_rows(), until(h, land(atom("x", "p1"), h))))),
        forall("p", eventually(land(atom("x", "p"), next(always(atom("null", "p")))))),
        forall("p1", exists("p2", eventually(land(atom("x", "p1"), atom(ts.recurring, "p2"))))),
    };
}

Sentence gen_tiling_diagonal(const TileSet& ts) { return to_prenex(conj(tiling_diagonal_conjuncts(ts))); }

std::vector<Formula> phiset_conjuncts() {
    auto a = [](const char* prop, const char* v) { return atom(prop, v); };
    const Formula c1 = forall(
        "p", land(conj({a("fbt", "p"), neg(a("zero", "p")), neg(a("one", "p")), neg(a("pset", "p"))}),
                  next(always(land(iff(a("pset", "p"), neg(a("fbt", "p"))), iff(a("zero", "p"), neg(a("one", "p"))))))));
    const Formula c2 = forall(
        "p", always(implies(a("fbt", "p"),
                            conj({exists("p0", next(land(a("fbt", "p0"), a("zero", "p0")))),
                                  exists("p1", next(land(a("fbt", "p1"), a("one", "p1")))),
                                  forall("q", next(a("fbt", "q")))}))));
    const Formula c3 = forall(
        "p", implies(next(a("fbt", "p")),
                     exists("q", next(land(a("pset", "q"), always(iff(a("zero", "p"), a("zero", "q"))))))));
    const Formula c4 = forall(
        "p", always(implies(a("pset", "p"), forall("q", always(iff(a("zero", "p"), a("zero", "q")))))));
    return {c1, c2, c3, c4};
}

Formula gen_phiset() { return conj(phiset_conjuncts()); }

KripkeStructure gen_kset_truncation(std::size_t depth, const std::vector<std::set<std::size_t>>& sets) {
    if (depth == 0) throw EvalError("tree depth must be at least 1");
    KripkeStructure k(Alphabet({"fbt", "pset", "zero", "one"}));
    const Letter fbt = k.alphabet().bit("fbt");
    const Letter pset = k.alphabet().bit("pset");
    const Letter zero = k.alphabet().bit("zero");
    const Letter one = k.alphabet().bit("one");

    const VertexId init = k.add_vertex("init", fbt);
    k.set_initial(init);
    std::vector<std::pair<VertexId, std::string>> level{{init, ""}};
    for (std::size_t d = 1; d <= depth; ++d) {
        std::vector<std::pair<VertexId, std::string>> below;
        for (const auto& [parent, path] : level) {
            for (char bit : {'0', '1'}) {
                const std::string name = path + bit;
                const VertexId v = k.add_vertex("b" + name, fbt | (bit == '0' ? zero : one));
                k.add_edge(parent, v);
                below.emplace_back(v, name);
            }
        }
        level = std::move(below);
    }
    for (const auto& [leaf, path] : level) k.add_edge(leaf, leaf);

    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& s = sets[i];
        const std::size_t len = s.empty() ? 0 : *s.rbegin() + 1;
        VertexId prev = init;
        for (std::size_t n = 0; n < len; ++n) {
            const VertexId v = k.add_vertex("s" + std::to_string(i) + "_" + std::to_string(n),
                                            pset | (s.count(n) ? one : zero));
            k.add_edge(prev, v);
            prev = v;
        }
        const VertexId tail = k.add_vertex("s" + std::to_string(i) + "_end", pset | zero);
        k.add_edge(prev, tail);
        k.add_edge(tail, tail);
    }
    k.validate();
    return k;
}

std::vector<Formula> PhiOpParts::all() const {
    std::vector<Formula> out{uniqueness};
    for (const auto& g : groups) out.insert(out.end(), g.begin(), g.end());
    return out;
}

PhiOpParts phiop_parts() {
    auto a = [](const char* prop, const char* v) { return atom(prop, v); };
    PhiOpParts parts;

    std::vector<Formula> once;
    for (const char* arg : {"argl", "argr", "res"}) {
        once.push_back(until(neg(a(arg, "p")), land(a(arg, "p"), next(always(neg(a(arg, "p")))))));
    }
    parts.uniqueness = forall("p", land(lor(always(land(a("mult", "p"), neg(a("add", "p")))),
                                            always(land(a("add", "p"), neg(a("mult", "p"))))),
                                        conj(once)));

    const Formula g1 = forall(
        "p", exists("q", conj({iff(a("add", "p"), a("add", "q")), eventually(land(a("argl", "p"), a("argr", "q"))),
                               eventually(land(a("argr", "p"), a("argl", "q"))),
                               eventually(land(a("res", "p"), a("res", "q")))})));

    const Formula g2a = exists("p", conj({a("add", "p"), a("argl", "p"), a("argr", "p"), a("res", "p")}));
    const Formula g2b = forall(
        "p", exists("q", implies(a("add", "p"),
                                 conj({a("add", "q"), eventually(land(a("argl", "p"), a("argl", "q"))),
                                       eventually(land(a("argr", "p"), next(a("argr", "q")))),
                                       eventually(land(a("res", "p"), next(a("res", "q"))))}))));

    const Formula g3a = forall("p", implies(a("add", "p"), iff(a("res", "p"), land(a("argl", "p"), a("argr", "p")))));
    const Formula g3b = forall(
        "p", exists("q", implies(land(a("add", "p"), neg(a("argr", "p"))),
                                 conj({a("add", "q"), eventually(land(a("argl", "p"), a("argl", "q"))),
                                       eventually(land(next(a("argr", "p")), a("argr", "q"))),
                                       eventually(land(next(a("res", "p")), a("res", "q")))}))));

    const Formula g4a = exists("p", conj({a("mult", "p"), a("argl", "p"), a("argr", "p"), a("res", "p")}));
    const Formula g4b = forall(
        "p", exists("q", exists("r", implies(a("mult", "p"),
                                             conj({a("mult", "q"), a("add", "r"),
                                                   eventually(conj({a("argl", "p"), a("argl", "q"), a("argl", "r")})),
                                                   eventually(land(a("argr", "p"), next(a("argr", "q")))),
                                                   eventually(land(a("argr", "r"), a("res", "p"))),
                                                   eventually(land(a("res", "r"), a("res", "q")))})))));

    const Formula g5a = forall("p", implies(a("mult", "p"), iff(a("res", "p"), lor(a("argl", "p"), a("argr", "p")))));
    const Formula g5b = forall(
        "p", exists("q", exists("r", implies(land(a("mult", "p"), neg(a("argr", "p"))),
                                             conj({a("mult", "q"), a("add", "r"),
                                                   eventually(conj({a("argl", "p"), a("argl", "q"), a("argl", "r")})),
                                                   eventually(land(next(a("argr", "p")), a("argr", "q"))),
                                                   eventually(land(a("res", "q"), a("argr", "r"))),
                                                   eventually(land(a("res", "r"), a("res", "p")))})))));

    parts.groups = {{g1}, {g2a, g2b}, {g3a, g3b}, {g4a, g4b}, {g5a, g5b}};
    return parts;
}

Sentence gen_phiop() { return to_prenex(conj(phiop_parts().all())); }

Sentence gen_phib(const std::vector<std::string>& alphabet) {
    for (const auto& a : alphabet) {
        if (a == kDollar) throw EvalError("the alphabet must not contain " + kDollar);
    }
    std::vector<Formula> disjoint;
    for (const auto& a : alphabet) disjoint.push_back(always(neg(land(atom(a, "p"), dollar("p")))));
    const Formula matrix =
        conj({until(neg(dollar("p")), always(dollar("p"))), conj(disjoint),
              eventually(conj({neg(dollar("p")), neg(dollar("q")), next(dollar("p")), next(dollar("q"))}))});
    return Sentence{{{Quant::Forall, "p"}, {Quant::Forall, "q"}}, matrix};
}

Sentence gen_finite_model_selector(const std::vector<std::string>& alphabet) {
    const Formula empty_p = all_props_false(alphabet, "p");
    const Formula empty_q = all_props_false(alphabet, "q");
    const Formula matrix =
        land(eventually(always(empty_p)), always(implies(always(empty_p), always(empty_q))));
    return Sentence{{{Quant::Exists, "p"}, {Quant::Forall, "q"}}, matrix};
}

Sentence combine_split(const Sentence& left, const Sentence& right) {
    reject_dollar(left);
    reject_dollar(right);
    if (right.prefix.empty()) throw EvalError("the right sentence has no quantifier to anchor the shift");
    const auto fv = free_vars(right.matrix);
    std::string anchor = right.prefix.front().var;
    for (const auto& q : right.prefix) {
        if (fv.count(q.var)) {
            anchor = q.var;
            break;
        }
    }
    const Formula lhat = relativize(left, left.matrix, [](const std::string& v) { return eventually(always(dollar(v))); });
    const Formula shifted = until(dollar(anchor), land(neg(dollar(anchor)), right.matrix));
    const Formula rhat =
        relativize(right, shifted, [](const std::string& v) { return eventually(always(neg(dollar(v)))); });
    return to_prenex(land(lhat, rhat));
}

}  // namespace hyperlogic
