#include "hyperlogic/hyperltl.hpp"

#include <atomic>
#include <set>
#include <thread>
#include <unordered_map>

#include "hyperlogic/compiled.hpp"
#include "hyperlogic/error.hpp"
#include "hyperlogic/expansion.hpp"
#include "hyperlogic/prenex.hpp"

namespace hyperlogic {

namespace {

void require_alphabet(const Formula& f, const TraceSet& t) {
    if (t.empty()) throw EvalError("trace set is empty");
    for (const auto& p : props(f)) {
        if (!t.alphabet.contains(p)) throw EvalError("proposition " + p + " is not in the trace alphabet");
    }
}

// Quantifier tree after miniscoping. Leaves hold quantifier-free formulas
// compiled over the prefix variables.
class QTree {
public:
    enum class Type { Leaf, Not, And, Or, Exists, Forall };

    struct Node {
        Type type;
        std::uint32_t var = 0;
        std::vector<int> kids;
        std::uint64_t free = 0;
        int leaf = -1;
    };

    struct Leaf {
        CoreFormula core;
        std::vector<Letter> bits;
    };

    QTree(const Sentence& phi, const Alphabet& alphabet, bool miniscope) : alphabet_(alphabet) {
        for (const auto& q : phi.prefix) vars_.push_back(q.var);
        for (const auto& v : free_vars(phi.matrix)) {
            if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) {
                throw ScopeError("variable " + v + " is not bound by the prefix");
            }
        }
        if (vars_.size() > 64) throw EvalError("at most 64 trace variables are supported");
        int n = miniscope ? split(phi.matrix) : make_leaf(phi.matrix);
        for (std::size_t i = phi.prefix.size(); i-- > 0;) {
            const Type q = phi.prefix[i].quant == Quant::Exists ? Type::Exists : Type::Forall;
            n = miniscope ? push(q, static_cast<std::uint32_t>(i), n) : quant(q, static_cast<std::uint32_t>(i), n);
        }
        root_ = n;
        memo_.resize(nodes_.size());
        memoize_ = miniscope;
    }

    bool evaluate(const TraceSet& t) {
        traces_ = &t;
        idx_.assign(vars_.size(), 0);
        env_.assign(vars_.size(), nullptr);
        return eval(root_);
    }

private:
    int add(Node n) {
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int make_leaf(const Formula& f) {
        Leaf l{CoreFormula::compile(f, vars_), {}};
        l.bits = prop_bits(l.core, alphabet_);
        Node n{Type::Leaf, 0, {}, 0, -1};
        n.free = l.core.free_mask(l.core.root());
        n.leaf = static_cast<int>(leaves_.size());
        leaves_.push_back(std::move(l));
        return add(std::move(n));
    }

    int boolean(Type type, std::vector<int> kids) {
        if (kids.size() == 1) return kids.front();
        Node n{type, 0, {}, 0, -1};
        for (int k : kids) n.free |= nodes_[k].free;
        n.kids = std::move(kids);
        return add(std::move(n));
    }

    int negate(int k) {
        if (nodes_[k].type == Type::Not) return nodes_[k].kids.front();
        Node n{Type::Not, 0, {}, 0, -1};
        n.free = nodes_[k].free;
        n.kids = {k};
        return add(std::move(n));
    }

    int quant(Type q, std::uint32_t var, int body) {
        Node n{q, 0, {}, 0, -1};
        n.var = var;
        n.free = nodes_[body].free & ~(std::uint64_t{1} << var);
        n.kids = {body};
        return add(std::move(n));
    }

    // Splits the Boolean skeleton of the matrix; subformulas over at most one
    // variable stay whole.
    int split(const Formula& f) {
        if (free_vars(f).size() <= 1) return make_leaf(f);
        switch (f.kind()) {
            case Kind::Not:
                return negate(split(f.lhs()));
            case Kind::And:
            case Kind::Or: {
                std::vector<int> kids;
                collect(f, f.kind(), kids);
                return boolean(f.kind() == Kind::And ? Type::And : Type::Or, std::move(kids));
            }
            case Kind::Implies:
                return boolean(Type::Or, {negate(split(f.lhs())), split(f.rhs())});
            case Kind::Iff: {
                const int a = split(f.lhs());
                const int b = split(f.rhs());
                return boolean(Type::Or, {boolean(Type::And, {a, b}), boolean(Type::And, {negate(a), negate(b)})});
            }
            default:
                return make_leaf(f);
        }
    }

    void collect(const Formula& f, Kind k, std::vector<int>& out) {
        if (f.kind() == k) {
            collect(f.lhs(), k, out);
            collect(f.rhs(), k, out);
        } else {
            out.push_back(split(f));
        }
    }

    int push(Type q, std::uint32_t var, int n) {
        const std::uint64_t bit = std::uint64_t{1} << var;
        if (!(nodes_[n].free & bit)) return n;
        const Node node = nodes_[n];
        const Type dual = q == Type::Exists ? Type::Forall : Type::Exists;
        switch (node.type) {
            case Type::Not:
                return negate(push(dual, var, node.kids.front()));
            case Type::And:
            case Type::Or: {
                const bool distributes = (q == Type::Forall) == (node.type == Type::And);
                std::vector<int> kids;
                if (distributes) {
                    for (int k : node.kids) kids.push_back(push(q, var, k));
                    return boolean(node.type, std::move(kids));
                }
                std::vector<int> with;
                std::size_t pos = 0;
                for (int k : node.kids) {
                    if (nodes_[k].free & bit) {
                        if (with.empty()) pos = kids.size();
                        with.push_back(k);
                    } else {
                        kids.push_back(k);
                    }
                }
                const int inner = with.size() == 1 ? push(q, var, with.front())
                                                   : quant(q, var, boolean(node.type, std::move(with)));
                kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(pos), inner);
                return boolean(node.type, std::move(kids));
            }
            default:
                return quant(q, var, n);
        }
    }

    std::string key(std::uint64_t mask) const {
        std::string k;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            if (mask & (std::uint64_t{1} << v)) {
                const std::uint32_t i = idx_[v];
                k.append(reinterpret_cast<const char*>(&i), sizeof i);
            }
        }
        return k;
    }

    bool eval(int id) {
        const Node& n = nodes_[id];
        switch (n.type) {
            case Type::Not:
                return !eval(n.kids.front());
            case Type::And:
                for (int k : n.kids) {
                    if (!eval(k)) return false;
                }
                return true;
            case Type::Or:
                for (int k : n.kids) {
                    if (eval(k)) return true;
                }
                return false;
            default:
                break;
        }
        std::string k;
        if (memoize_) {
            k = key(n.free);
            if (auto it = memo_[id].find(k); it != memo_[id].end()) return it->second;
        }
        bool r;
        if (n.type == Type::Leaf) {
            const Leaf& l = leaves_[n.leaf];
            r = build_expansion_bits(l.core, env_, l.bits).holds();
        } else {
            const bool exists = n.type == Type::Exists;
            r = !exists;
            for (std::size_t i = 0; i < traces_->size(); ++i) {
                idx_[n.var] = static_cast<std::uint32_t>(i);
                env_[n.var] = &(*traces_)[i];
                if (eval(n.kids.front()) == exists) {
                    r = exists;
                    break;
                }
            }
            env_[n.var] = nullptr;
        }
        if (memoize_) memo_[id].emplace(std::move(k), r);
        return r;
    }

    Alphabet alphabet_;
    std::vector<std::string> vars_;
    std::vector<Node> nodes_;
    std::vector<Leaf> leaves_;
    int root_ = -1;
    bool memoize_ = true;
    std::vector<std::unordered_map<std::string, bool>> memo_;
    const TraceSet* traces_ = nullptr;
    std::vector<std::uint32_t> idx_;
    std::vector<const LassoTrace*> env_;
};

}  // namespace

bool check(const Sentence& phi, const TraceSet& t, CheckOptions opts) {
    require_alphabet(phi.matrix, t);
    QTree tree(phi, t.alphabet, opts.miniscope);
    return tree.evaluate(t);
}

bool check_formula(const Formula& phi, const TraceSet& t, CheckOptions opts) {
    return check(to_prenex(phi), t, opts);
}

bool eval_qf(const Formula& psi, const std::map<std::string, LassoTrace>& assignment, const Alphabet& alphabet) {
    if (!is_quantifier_free(psi)) throw EvalError("eval_qf needs a quantifier-free formula");
    std::vector<std::string> order;
    std::vector<const LassoTrace*> env;
    for (const auto& [v, tr] : assignment) {
        order.push_back(v);
        env.push_back(&tr);
    }
    const CoreFormula core = CoreFormula::compile(psi, order);
    env.resize(core.vars().size(), nullptr);
    return build_expansion(core, env, alphabet).holds();
}

std::vector<LassoTrace> candidate_traces(std::size_t num_props, std::size_t max_stem, std::size_t max_loop) {
    if (num_props * (max_stem + max_loop) > 24) throw EvalError("candidate space is too large");
    const Letter letters = Letter{1} << num_props;
    std::vector<LassoTrace> out;
    for (std::size_t s = 0; s <= max_stem; ++s) {
        for (std::size_t l = 1; l <= max_loop; ++l) {
            std::vector<Letter> seq(s + l, 0);
            while (true) {
                LassoTrace t(std::vector<Letter>(seq.begin(), seq.begin() + s),
                             std::vector<Letter>(seq.begin() + s, seq.end()));
                if (t.canonical() == t) out.push_back(std::move(t));
                std::size_t i = 0;
                while (i < seq.size() && ++seq[i] == letters) seq[i++] = 0;
                if (i == seq.size()) break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const LassoTrace& a, const LassoTrace& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (a.stem.size() != b.stem.size()) return a.stem.size() < b.stem.size();
        return a < b;
    });
    return out;
}

namespace {

// Conjuncts of the matrix that mention only variables of the leading
// universal block; every member (or pair of members) of a model satisfies them.
struct Constraint {
    CoreFormula core;
    std::vector<Letter> bits;
    std::size_t arity;
};

std::vector<Constraint> universal_constraints(const Sentence& phi, const Alphabet& alphabet) {
    std::set<std::string> uni;
    for (const auto& q : phi.prefix) {
        if (q.quant != Quant::Forall) break;
        uni.insert(q.var);
    }
    std::vector<Formula> conjuncts;
    std::vector<Formula> stack{phi.matrix};
    while (!stack.empty()) {
        Formula f = stack.back();
        stack.pop_back();
        if (f.kind() == Kind::And) {
            stack.push_back(f.rhs());
            stack.push_back(f.lhs());
        } else {
            conjuncts.push_back(f);
        }
    }
    std::vector<Constraint> out;
    for (const auto& c : conjuncts) {
        const auto fv = free_vars(c);
        if (fv.empty() || fv.size() > 2) continue;
        if (!std::all_of(fv.begin(), fv.end(), [&](const std::string& v) { return uni.count(v) > 0; })) continue;
        std::vector<std::string> order(fv.begin(), fv.end());
        Constraint k{CoreFormula::compile(c, order), {}, order.size()};
        k.bits = prop_bits(k.core, alphabet);
        out.push_back(std::move(k));
    }
    return out;
}

bool holds_on(const Constraint& c, const LassoTrace& x, const LassoTrace& y) {
    const LassoTrace* env[2] = {&x, &y};
    return build_expansion_bits(c.core, std::span<const LassoTrace* const>(env, c.arity), c.bits).holds();
}

class Enumerator {
public:
    Enumerator(const Sentence& phi, const SearchBudget& budget, unsigned jobs)
        : phi_(phi), budget_(budget), jobs_(std::max(1u, jobs)) {
        std::set<std::string> ps;
        for (const auto& p : props(phi.to_formula())) ps.insert(p);
        alphabet_ = Alphabet(std::vector<std::string>(ps.begin(), ps.end()));
        cands_ = candidate_traces(ps.size(), budget.max_stem, budget.max_loop);
        constraints_ = universal_constraints(phi, alphabet_);
        unary_ok_.resize(cands_.size());
        for (std::size_t i = 0; i < cands_.size(); ++i) {
            unary_ok_[i] = std::all_of(constraints_.begin(), constraints_.end(), [&](const Constraint& c) {
                return holds_on(c, cands_[i], cands_[i]);
            });
        }
        start_ = std::chrono::steady_clock::now();
    }

    SatResult run() {
        const std::size_t max_total = budget_.max_traces * (budget_.max_stem + budget_.max_loop);
        std::vector<std::uint32_t> cur;
        for (std::size_t total = 1; total <= max_total && !stop_; ++total) {
            dfs(0, total, cur);
            if (!stop_) flush();
        }
        if (timed_out_) result_.status = SatStatus::TimedOut;
        else if (!found_) result_.status = SatStatus::Exhausted;
        return result_;
    }

private:
    bool out_of_time() {
        if (!budget_.time_limit) return false;
        if (std::chrono::steady_clock::now() - start_ >= *budget_.time_limit) {
            timed_out_ = true;
            stop_ = true;
        }
        return stop_;
    }

    bool pair_ok(std::uint32_t i, std::uint32_t j) {
        const std::uint64_t k = (std::uint64_t{i} << 32) | j;
        if (auto it = pairs_.find(k); it != pairs_.end()) return it->second;
        bool ok = true;
        for (const auto& c : constraints_) {
            if (c.arity == 2 && (!holds_on(c, cands_[i], cands_[j]) || !holds_on(c, cands_[j], cands_[i]))) {
                ok = false;
                break;
            }
        }
        pairs_.emplace(k, ok);
        return ok;
    }

    void dfs(std::size_t from, std::size_t remaining, std::vector<std::uint32_t>& cur) {
        if (stop_) return;
        if (remaining == 0) {
            batch_.push_back(cur);
            if (batch_.size() >= 64 * jobs_) flush();
            return;
        }
        if (cur.size() == budget_.max_traces) return;
        if ((++steps_ & 0xfff) == 0 && out_of_time()) return;
        for (std::size_t i = from; i < cands_.size() && !stop_; ++i) {
            if (cands_[i].size() > remaining) break;
            if (!unary_ok_[i]) continue;
            const auto ii = static_cast<std::uint32_t>(i);
            if (!std::all_of(cur.begin(), cur.end(), [&](std::uint32_t j) { return pair_ok(j, ii); })) continue;
            cur.push_back(ii);
            dfs(i + 1, remaining - cands_[i].size(), cur);
            cur.pop_back();
        }
    }

    TraceSet make_set(const std::vector<std::uint32_t>& ids) const {
        TraceSet t;
        t.alphabet = alphabet_;
        for (auto i : ids) t.add(cands_[i]);
        return t;
    }

    void flush() {
        if (batch_.empty() || out_of_time()) return;
        const std::size_t n = batch_.size();
        std::atomic<std::size_t> next{0};
        std::atomic<std::size_t> best{n};
        auto work = [&] {
            for (std::size_t i; (i = next++) < n;) {
                if (i > best.load()) continue;
                if (check(phi_, make_set(batch_[i]))) {
                    std::size_t b = best.load();
                    while (i < b && !best.compare_exchange_weak(b, i)) {
                    }
                }
            }
        };
        if (jobs_ == 1 || n == 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < jobs_; ++j) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        const std::size_t b = best.load();
        result_.sets_checked += b < n ? b + 1 : n;
        if (b < n) {
            found_ = true;
            stop_ = true;
            result_.status = SatStatus::Found;
            result_.model = make_set(batch_[b]);
        }
        batch_.clear();
    }

    const Sentence& phi_;
    SearchBudget budget_;
    unsigned jobs_;
    Alphabet alphabet_;
    std::vector<LassoTrace> cands_;
    std::vector<Constraint> constraints_;
    std::vector<bool> unary_ok_;
    std::unordered_map<std::uint64_t, bool> pairs_;
    std::vector<std::vector<std::uint32_t>> batch_;
    std::chrono::steady_clock::time_point start_;
    std::size_t steps_ = 0;
    bool stop_ = false;
    bool found_ = false;
    bool timed_out_ = false;
    SatResult result_;
};

}  // namespace

SatResult sat_enum(const Sentence& phi, const SearchBudget& budget, unsigned jobs) {
    if (budget.max_traces == 0 || budget.max_stem == 0 || budget.max_loop == 0) {
        throw EvalError("search budget bounds must be at least 1");
    }
    Enumerator e(phi, budget, jobs);
    return e.run();
}

}  // namespace hyperlogic
