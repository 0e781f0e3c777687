#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hyperlogic/hyperlogic.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = hyperlogic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("hyperlogic_cli_" + std::to_string(counter_++))) {
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path dir_;
};

std::string slurp(const std::string& path) { return hyperlogic::read_file(path); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check-trace") {
    Scratch s;
    const auto f = s.file("f.hl", "exists p. a[p]\n");
    const auto t = s.file("t.tr", "props: a\ntrace m = ({a})\n");
    const auto t2 = s.file("t2.tr", "props: a\ntrace m = ({})\n");
    Run r = run({"check-trace", "--formula", f, "--traces", t});
    CHECK(r.code == 0);
    CHECK(r.out == "RESULT: true\n");
    r = run({"check-trace", "-f", f, "-t", t2, "--naive"});
    CHECK(r.code == 1);
    CHECK(r.out == "RESULT: false\n");
}

TEST_CASE("check-sys") {
    Scratch s;
    const auto f = s.file("phiset.hc", hyperlogic::to_string(hyperlogic::gen_phiset()) + "\n");
    const auto k = s.file("one.ks", "vertex v {a}\ninit v\nedge v v\n");
    Run r = run({"check-sys", "--formula", f, "--system", k, "--stem-bound", "1", "--loop-bound", "2"});
    CHECK(r.code == 1);
    CHECK(r.out == "RESULT: false (bounded semantics at S=1,L=2)\n");
    const auto g = s.file("g.hc", "forall p. G a[p]\n");
    const auto dump = s.path("game.txt");
    r = run({"check-sys", "-f", g, "-s", k, "--engine", "both", "--game-dump", dump});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("RESULT: true", 0) == 0);
    CHECK(slurp(dump).rfind("#0 owner=F", 0) == 0);
}

TEST_CASE("gen tiling writes a seven-conjunct sentence") {
    Scratch s;
    const auto tiles = s.file("t.tl", "colors: c\ntile t0 north=c south=c east=c west=c\nrecurring: t0\n");
    const auto out = s.path("out.hl");
    Run r = run({"gen", "tiling", "--tiles", tiles, "-o", out});
    CHECK(r.code == 0);
    const auto phi = hyperlogic::parse_hyperltl(slurp(out));
    CHECK(phi == hyperlogic::gen_tiling(hyperlogic::parse_tiles(slurp(tiles))));
}

TEST_CASE("sat-enum") {
    Scratch s;
    const auto f = s.file("f.hl", "exists p. a[p]\n");
    const auto model = s.path("m.tr");
    Run r = run({"sat-enum", "-f", f, "--budget-traces", "2", "--budget-stem", "1", "--budget-loop", "1", "-o", model,
                 "--jobs", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "RESULT: FOUND\n");
    CHECK(slurp(model) == "props: a\ntrace t0 = ({a})\n");

    const auto g = s.file("g.hl", "exists p. a[p] & !a[p]\n");
    r = run({"sat-enum", "-f", g});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("RESULT: EXHAUSTED (", 0) == 0);
}

TEST_CASE("classify and pnf") {
    Scratch s;
    const auto f = s.file("f.hl", "(exists p. a[p]) & (exists p. b[p])\n");
    Run r = run({"pnf", "-f", f});
    CHECK(r.code == 0);
    CHECK(r.out == "exists p. exists p_1. a[p] & b[p_1]\n");
    const auto g = s.file("g.hl", "forall p. exists q. a[p] & a[q]\n");
    r = run({"classify", "-f", g});
    CHECK(r.code == 0);
    CHECK(r.out == "CLASS: Pi_2\n");
}

TEST_CASE("fo subcommands") {
    Scratch s;
    const auto f = s.file("f.fo", "exists x. forall y. x <= y & a(x)\n");
    const auto w = s.file("w.wd", "props: a\nword = {a} {}\n");
    Run r = run({"fo", "eval", "-f", f, "-w", w});
    CHECK(r.code == 0);
    CHECK(r.out == "RESULT: true\n");
    r = run({"fo", "translate", "-f", f});
    CHECK(r.out == "exists x. forall y. F (o[x] & F o[y]) & a[x]\n");
    r = run({"fo", "encode", "-w", w, "--stretch", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "props: a o\ntrace t0 = {a}{}{o}({})\ntrace t1 = {}{}{}{}{o}({})\n");
    const auto q = s.file("q.hl", "X X o[p]\n");
    r = run({"fo", "simpl", "-f", q});
    CHECK(r.out == "false\n");
}

TEST_CASE("usage and input errors") {
    Scratch s;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"check-trace", "--formula", s.path("missing.hl")}).code == 2);
    const auto f = s.file("f.hl", "exists p. a[q]\n");
    const auto t = s.file("t.tr", "props: a\ntrace m = ({a})\n");
    Run r = run({"check-trace", "-f", f, "-t", t});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
    CHECK(run({"check-trace", "-f", s.path("nope.hl"), "-t", t}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"sat-enum", "-f", t, "--jobs", "0"}).code == 2);
}

}  // TEST_SUITE
