#include "hyperlogic/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hyperlogic/error.hpp"

namespace hyperlogic {

namespace {

struct Line {
    std::string_view text;
    std::size_t offset;
};

std::vector<Line> lines_of(std::string_view text) {
    std::vector<Line> out;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t j = text.find('\n', i);
        if (j == std::string_view::npos) j = text.size();
        std::string_view line = text.substr(i, j - i);
        const std::size_t k = line.find_first_not_of(" \t\r");
        if (k != std::string_view::npos && line[k] != '#') {
            const std::size_t e = line.find_last_not_of(" \t\r");
            out.push_back({line.substr(k, e - k + 1), i + k});
        }
        i = j + 1;
    }
    return out;
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Cursor over one line that reports errors at absolute offsets.
class Cursor {
public:
    explicit Cursor(const Line& l) : s_(l.text), base_(l.offset) {}

    void ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        ws();
        return i_ >= s_.size();
    }
    bool peek(char c) {
        ws();
        return i_ < s_.size() && s_[i_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    std::string ident() {
        ws();
        const std::size_t start = i_;
        while (i_ < s_.size() && ident_char(s_[i_])) ++i_;
        if (start == i_) fail("expected a name");
        return std::string(s_.substr(start, i_ - start));
    }
    void keyword(std::string_view kw) {
        const std::size_t at = i_;
        if (ident() != kw) {
            i_ = at;
            fail("expected '" + std::string(kw) + "'");
        }
    }
    void end() {
        if (!done()) fail("unexpected text");
    }
    std::string_view rest() {
        ws();
        return s_.substr(i_);
    }
    std::size_t offset() const { return base_ + i_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + i_); }

    Letter letter(const Alphabet& a) {
        expect('{');
        Letter l = 0;
        while (!peek('}')) {
            if (peek(',')) {
                ++i_;
                continue;
            }
            const std::size_t at = i_;
            const std::string p = ident();
            auto idx = a.index(p);
            if (!idx) {
                i_ = at;
                fail("proposition " + p + " is not declared");
            }
            l |= Letter{1} << *idx;
        }
        expect('}');
        return l;
    }

    LassoTrace trace(const Alphabet& a) {
        std::vector<Letter> stem;
        std::vector<Letter> loop;
        while (peek('{')) stem.push_back(letter(a));
        expect('(');
        while (peek('{')) loop.push_back(letter(a));
        if (loop.empty()) fail("the loop must contain at least one letter");
        expect(')');
        return LassoTrace(std::move(stem), std::move(loop));
    }

private:
    std::string_view s_;
    std::size_t base_;
    std::size_t i_ = 0;
};

bool starts_with_word(std::string_view s, std::string_view w) {
    return s.substr(0, w.size()) == w && (s.size() == w.size() || !ident_char(s[w.size()]));
}

// The `props:` line if present, else every name written inside braces.
Alphabet alphabet_of(const std::vector<Line>& lines) {
    for (const auto& l : lines) {
        if (starts_with_word(l.text, "props")) {
            Cursor c(l);
            c.keyword("props");
            c.expect(':');
            std::vector<std::string> props;
            while (!c.done()) props.push_back(c.ident());
            try {
                return Alphabet(props);
            } catch (const EvalError& e) {
                throw ParseError(e.what(), l.offset);
            }
        }
    }
    std::set<std::string> seen;
    for (const auto& l : lines) {
        bool inside = false;
        std::string cur;
        for (char ch : l.text) {
            if (ch == '{') inside = true;
            else if (ch == '}') inside = false;
            if (inside && ident_char(ch)) {
                cur += ch;
            } else if (!cur.empty()) {
                seen.insert(cur);
                cur.clear();
            }
        }
    }
    return Alphabet(std::vector<std::string>(seen.begin(), seen.end()));
}

std::string props_line(const Alphabet& a) {
    std::string out = "props:";
    for (const auto& p : a.props()) out += " " + p;
    return out + "\n";
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LassoTrace parse_trace(std::string_view text, const Alphabet& alphabet) {
    Cursor c(Line{text, 0});
    LassoTrace t = c.trace(alphabet);
    c.end();
    return t;
}

TraceSet parse_trace_set(std::string_view text) {
    const auto lines = lines_of(text);
    TraceSet t;
    t.alphabet = alphabet_of(lines);
    for (const auto& l : lines) {
        if (starts_with_word(l.text, "props")) continue;
        Cursor c(l);
        c.keyword("trace");
        const std::size_t at = c.offset();
        const std::string name = c.ident();
        c.expect('=');
        LassoTrace tr = c.trace(t.alphabet);
        c.end();
        try {
            t.add(std::move(tr), name);
        } catch (const EvalError& e) {
            throw ParseError(e.what(), at);
        }
    }
    if (t.empty()) throw ParseError("trace set is empty", text.size());
    return t;
}

std::string format_trace_set(const TraceSet& t) {
    std::string out = props_line(t.alphabet);
    for (const auto& nt : t.traces) out += "trace " + nt.name + " = " + format_trace(nt.trace, t.alphabet) + "\n";
    return out;
}

KripkeStructure parse_kripke(std::string_view text) {
    const auto lines = lines_of(text);
    KripkeStructure k(alphabet_of(lines));
    auto vertex = [&](Cursor& c) {
        const std::size_t at = c.offset();
        const std::string name = c.ident();
        auto v = k.find(name);
        if (!v) throw ParseError("unknown vertex " + name, at);
        return *v;
    };
    // Vertices first so that edges may refer to vertices declared later.
    for (const auto& l : lines) {
        if (!starts_with_word(l.text, "vertex")) continue;
        Cursor c(l);
        c.keyword("vertex");
        const std::size_t at = c.offset();
        const std::string name = c.ident();
        const Letter label = c.letter(k.alphabet());
        c.end();
        if (k.find(name)) throw ParseError("duplicate vertex " + name, at);
        k.add_vertex(name, label);
    }
    bool has_init = false;
    for (const auto& l : lines) {
        Cursor c(l);
        if (starts_with_word(l.text, "vertex") || starts_with_word(l.text, "props")) continue;
        if (starts_with_word(l.text, "init")) {
            c.keyword("init");
            if (has_init) c.fail("duplicate init line");
            k.set_initial(vertex(c));
            has_init = true;
        } else if (starts_with_word(l.text, "edge")) {
            c.keyword("edge");
            const VertexId from = vertex(c);
            const VertexId to = vertex(c);
            k.add_edge(from, to);
        } else {
            c.fail("expected vertex, init or edge");
        }
        c.end();
    }
    if (!has_init) throw ParseError("missing init line", text.size());
    return k;
}

std::string format_kripke(const KripkeStructure& k) {
    std::string out = props_line(k.alphabet());
    for (VertexId v = 0; v < k.size(); ++v) out += "vertex " + k.name(v) + " " + k.alphabet().format(k.label(v)) + "\n";
    out += "init " + k.name(k.initial()) + "\n";
    for (VertexId v = 0; v < k.size(); ++v) {
        for (VertexId w : k.successors(v)) out += "edge " + k.name(v) + " " + k.name(w) + "\n";
    }
    return out;
}

Word parse_word(std::string_view text) {
    const auto lines = lines_of(text);
    Word w;
    w.alphabet = alphabet_of(lines);
    bool seen = false;
    for (const auto& l : lines) {
        if (starts_with_word(l.text, "props")) continue;
        Cursor c(l);
        c.keyword("word");
        if (seen) c.fail("duplicate word line");
        seen = true;
        c.expect('=');
        while (!c.done()) w.letters.push_back(c.letter(w.alphabet));
    }
    if (!seen) throw ParseError("missing word line", text.size());
    return w;
}

std::string format_word(const Word& w) {
    std::string out = props_line(w.alphabet) + "word =";
    for (Letter l : w.letters) out += " " + w.alphabet.format(l);
    return out + "\n";
}

TileSet parse_tiles(std::string_view text) {
    TileSet ts;
    for (const auto& l : lines_of(text)) {
        Cursor c(l);
        if (starts_with_word(l.text, "colors")) {
            c.keyword("colors");
            c.expect(':');
            while (!c.done()) ts.colors.push_back(c.ident());
        } else if (starts_with_word(l.text, "recurring")) {
            c.keyword("recurring");
            c.expect(':');
            ts.recurring = c.ident();
            c.end();
        } else if (starts_with_word(l.text, "tile")) {
            c.keyword("tile");
            Tile t;
            t.name = c.ident();
            std::set<std::string> sides;
            while (!c.done()) {
                const std::size_t at = c.offset();
                const std::string side = c.ident();
                c.expect('=');
                const std::string color = c.ident();
                if (!sides.insert(side).second) throw ParseError("side " + side + " given twice", at);
                if (side == "north") t.north = color;
                else if (side == "south") t.south = color;
                else if (side == "east") t.east = color;
                else if (side == "west") t.west = color;
                else throw ParseError("unknown side " + side, at);
            }
            if (sides.size() != 4) c.fail("tile " + t.name + " needs all four sides");
            ts.tiles.push_back(std::move(t));
        } else {
            c.fail("expected colors, tile or recurring");
        }
    }
    try {
        ts.validate();
    } catch (const EvalError& e) {
        throw ParseError(e.what(), text.size());
    }
    return ts;
}

}  // namespace hyperlogic
