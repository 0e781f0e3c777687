#include "hyperlogic/hyperctl.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "hyperlogic/error.hpp"
#include "hyperlogic/expansion.hpp"
#include "hyperlogic/parser.hpp"

namespace hyperlogic {

namespace {

class Context {
public:
    Context(const Formula& phi, const KripkeStructure& k, PathBounds bounds) : k_(k), bounds_(bounds) {
        if (bounds.max_stem == 0 || bounds.max_loop == 0) throw EvalError("path bounds must be at least 1");
        check_closed(phi);
        k.validate();
        core_ = CoreFormula::compile(phi);
        bits_ = prop_bits(core_, k.alphabet(), true);
    }

    const CoreFormula& core() const { return core_; }

    VertexId rcnt(const PathAssignment& a) const {
        const auto* last = a.most_recent();
        return last ? last->value.at(0) : k_.initial();
    }

    const std::vector<LassoPath>& paths(VertexId from) {
        auto it = paths_.find(from);
        if (it == paths_.end()) {
            it = paths_.emplace(from, lasso_paths(k_, from, bounds_.max_stem, bounds_.max_loop)).first;
        }
        return it->second;
    }

    bool atom(const CoreNode& n, const PathAssignment& a) const {
        const LassoPath* p = a.find(n.var);
        if (!p) throw EvalError("unbound variable " + core_.vars()[n.var]);
        return (k_.label(p->at(0)) & bits_[n.prop]) != 0;
    }

    static std::size_t until_horizon(const PathAssignment& a) { return a.alignment().horizon(); }

    const KripkeStructure& kripke() const { return k_; }

private:
    const KripkeStructure& k_;
    PathBounds bounds_;
    CoreFormula core_;
    std::vector<Letter> bits_;
    std::map<VertexId, std::vector<LassoPath>> paths_;
};

class Evaluator {
public:
    explicit Evaluator(Context& ctx) : ctx_(ctx), memo_(ctx.core().nodes().size()) {}

    bool eval(std::uint32_t id, const PathAssignment& a) {
        const CoreNode& n = ctx_.core().node(id);
        switch (n.op) {
            case Op::True:
                return true;
            case Op::Atom:
                return ctx_.atom(n, a);
            case Op::Not:
                return !eval(n.a, a);
            case Op::Or:
                return eval(n.a, a) || eval(n.b, a);
            default:
                break;
        }
        if (auto it = memo_[id].find(a); it != memo_[id].end()) return it->second;
        bool r = false;
        switch (n.op) {
            case Op::Next:
                r = eval(n.a, a.shifted(1));
                break;
            case Op::Until: {
                const std::size_t horizon = Context::until_horizon(a);
                for (std::size_t j = 0; j < horizon; ++j) {
                    const PathAssignment aj = a.shifted(j);
                    if (eval(n.b, aj)) {
                        r = true;
                        break;
                    }
                    if (!eval(n.a, aj)) break;
                }
                break;
            }
            case Op::Exists:
            case Op::Forall: {
                const bool exists = n.op == Op::Exists;
                r = !exists;
                // Copy: the cache may grow while the body is evaluated.
                const std::vector<LassoPath> ps = ctx_.paths(ctx_.rcnt(a));
                for (const auto& p : ps) {
                    if (eval(n.a, a.bind(n.var, p)) == exists) {
                        r = exists;
                        break;
                    }
                }
                break;
            }
            default:
                break;
        }
        memo_[id].emplace(a, r);
        return r;
    }

private:
    Context& ctx_;
    std::vector<std::map<PathAssignment, bool>> memo_;
};

std::string path_text(const LassoPath& p, const KripkeStructure& k) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.stem.size(); ++i) s += (i ? " " : "") + k.name(p.stem[i]);
    s += "](";
    for (std::size_t i = 0; i < p.loop.size(); ++i) s += (i ? " " : "") + k.name(p.loop[i]);
    return s + ")";
}

class GameBuilder {
public:
    GameBuilder(Context& ctx, Game& g) : ctx_(ctx), g_(g) {}

    std::uint32_t vertex(const PathAssignment& a, std::uint32_t node, std::uint8_t b,
                         std::optional<std::size_t> j = std::nullopt) {
        Key key{node, b, j ? static_cast<long long>(*j) : -1, a};
        if (auto it = ids_.find(key); it != ids_.end()) return it->second;
        const auto id = static_cast<std::uint32_t>(g_.vertices.size());
        ids_.emplace(key, id);
        GameVertex v;
        v.assignment = a;
        v.node = node;
        v.b = b;
        v.j = j;
        g_.vertices.push_back(v);

        const CoreNode& n = ctx_.core().node(node);
        const Player positive = b == 0 ? Player::Verifier : Player::Falsifier;
        Player owner = Player::Falsifier;
        std::vector<std::uint32_t> succ;
        Player terminal_winner = Player::Falsifier;
        if (j) {
            // Until-index vertex: the opponent of the until's owner picks a check.
            owner = opponent(positive);
            succ.push_back(vertex(a.shifted(*j), n.b, b));
            for (std::size_t i = 0; i < *j; ++i) succ.push_back(vertex(a.shifted(i), n.a, b));
        } else {
            switch (n.op) {
                case Op::True:
                    terminal_winner = positive;
                    break;
                case Op::Atom:
                    terminal_winner = ctx_.atom(n, a) ? positive : opponent(positive);
                    break;
                case Op::Not:
                    succ.push_back(vertex(a, n.a, static_cast<std::uint8_t>(1 - b)));
                    break;
                case Op::Or:
                    owner = positive;
                    succ.push_back(vertex(a, n.a, b));
                    succ.push_back(vertex(a, n.b, b));
                    break;
                case Op::Next:
                    succ.push_back(vertex(a.shifted(1), n.a, b));
                    break;
                case Op::Until: {
                    owner = positive;
                    const std::size_t horizon = Context::until_horizon(a);
                    for (std::size_t i = 0; i < horizon; ++i) succ.push_back(vertex(a, node, b, i));
                    break;
                }
                case Op::Exists:
                case Op::Forall: {
                    owner = n.op == Op::Exists ? positive : opponent(positive);
                    // With no path to choose, the owner is stuck and loses.
                    terminal_winner = opponent(owner);
                    const std::vector<LassoPath> ps = ctx_.paths(ctx_.rcnt(a));
                    for (const auto& p : ps) succ.push_back(vertex(a.bind(n.var, p), n.a, b));
                    break;
                }
            }
        }
        auto& out = g_.vertices[id];
        out.owner = owner;
        out.succ = std::move(succ);
        out.terminal_winner = terminal_winner;
        g_.post_order.push_back(id);
        return id;
    }

private:
    struct Key {
        std::uint32_t node;
        std::uint8_t b;
        long long j;
        PathAssignment a;

        friend bool operator<(const Key& x, const Key& y) {
            if (std::tie(x.node, x.b, x.j) != std::tie(y.node, y.b, y.j)) {
                return std::tie(x.node, x.b, x.j) < std::tie(y.node, y.b, y.j);
            }
            return x.a < y.a;
        }
    };

    Context& ctx_;
    Game& g_;
    std::map<Key, std::uint32_t> ids_;
};

}  // namespace

bool check_bounded(const Formula& phi, const KripkeStructure& k, PathBounds bounds) {
    Context ctx(phi, k, bounds);
    Evaluator ev(ctx);
    return ev.eval(ctx.core().root(), PathAssignment{});
}

Game build_game(const Formula& phi, const KripkeStructure& k, PathBounds bounds) {
    Context ctx(phi, k, bounds);
    Game g;
    g.core = ctx.core();
    GameBuilder builder(ctx, g);
    g.initial = builder.vertex(PathAssignment{}, g.core.root(), 0);
    return g;
}

GameResult solve_game(const Game& game) {
    GameResult r;
    const std::size_t n = game.vertices.size();
    r.wins.assign(n, Player::Falsifier);
    r.strategy.assign(n, std::nullopt);
    for (std::uint32_t id : game.post_order) {
        const GameVertex& v = game.vertices[id];
        if (v.terminal()) {
            r.wins[id] = v.terminal_winner;
            continue;
        }
        r.wins[id] = opponent(v.owner);
        r.strategy[id] = v.succ.front();
        for (std::uint32_t s : v.succ) {
            if (r.wins[s] == v.owner) {
                r.wins[id] = v.owner;
                r.strategy[id] = s;
                break;
            }
        }
    }
    r.winner = r.wins[game.initial];
    return r;
}

std::size_t Game::longest_play() const {
    std::vector<std::size_t> len(vertices.size(), 0);
    for (std::uint32_t id : post_order) {
        for (std::uint32_t s : vertices[id].succ) len[id] = std::max(len[id], len[s] + 1);
    }
    return vertices.empty() ? 0 : len[initial];
}

std::string Game::dump(const KripkeStructure& k) const {
    std::ostringstream out;
    for (std::size_t id = 0; id < vertices.size(); ++id) {
        const auto& v = vertices[id];
        out << '#' << id << " owner=" << (v.owner == Player::Verifier ? 'V' : 'F') << " (";
        for (const auto& b : v.assignment.bindings()) {
            out << core.vars()[b.var] << ':' << path_text(b.value, k) << ", ";
        }
        out << to_string(core.to_formula(v.node)) << ", " << int(v.b);
        if (v.j) out << ", " << *v.j;
        out << ")\n";
    }
    for (std::size_t id = 0; id < vertices.size(); ++id) {
        for (auto s : vertices[id].succ) out << '#' << id << " -> #" << s << '\n';
    }
    return out.str();
}

}  // namespace hyperlogic
