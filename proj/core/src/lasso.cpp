#include "hyperlogic/lasso.hpp"

#include <set>

namespace hyperlogic {

Alphabet::Alphabet(std::vector<std::string> props) : props_(std::move(props)) {
    if (props_.size() > 64) throw EvalError("alphabets are limited to 64 propositions");
    std::set<std::string> seen;
    for (const auto& p : props_) {
        if (!seen.insert(p).second) throw EvalError("duplicate proposition " + p);
    }
}

std::optional<std::size_t> Alphabet::index(const std::string& prop) const {
    for (std::size_t i = 0; i < props_.size(); ++i) {
        if (props_[i] == prop) return i;
    }
    return std::nullopt;
}

Letter Alphabet::bit(const std::string& prop) const {
    auto i = index(prop);
    if (!i) throw EvalError("proposition " + prop + " is not in the alphabet");
    return Letter{1} << *i;
}

std::string Alphabet::format(Letter l) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < props_.size(); ++i) {
        if (l >> i & 1) {
            if (!first) out += ' ';
            out += props_[i];
            first = false;
        }
    }
    out += '}';
    return out;
}

void TraceSet::add(LassoTrace t, std::string name) {
    if (name.empty()) {
        std::size_t k = traces.size();
        auto taken = [&](const std::string& n) {
            for (const auto& nt : traces) {
                if (nt.name == n) return true;
            }
            return false;
        };
        do {
            name = "t" + std::to_string(k++);
        } while (taken(name));
    } else {
        for (const auto& nt : traces) {
            if (nt.name == name) throw EvalError("duplicate trace name " + name);
        }
    }
    traces.push_back({std::move(name), std::move(t)});
}

std::string format_trace(const LassoTrace& t, const Alphabet& alphabet) {
    std::string out;
    for (Letter l : t.stem) out += alphabet.format(l);
    out += '(';
    for (Letter l : t.loop) out += alphabet.format(l);
    out += ')';
    return out;
}

}  // namespace hyperlogic
