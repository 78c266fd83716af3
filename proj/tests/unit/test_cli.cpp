#include "cli.hpp"
#include "result_cache.hpp"

#include "borelz/formats.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace borelz;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("borelz-test-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::map<std::string, std::string> parse_record(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream ss(line);
    std::string field;
    while (ss >> field) {
        auto eq = field.find('=');
        REQUIRE(eq != std::string::npos);
        kv[field.substr(0, eq)] = field.substr(eq + 1);
    }
    return kv;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    for (std::string l; std::getline(ss, l);)
        if (!l.empty()) out.push_back(l);
    return out;
}

void write_text(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("decide reports yes and no through the exit status") {
    auto no = run({"decide", "--gens", "1", "--colors", "2"});
    CHECK(no.code == cli::kExitFalse);
    CHECK(no.out.find("answer     no") != std::string::npos);
    auto yes = run({"decide", "--gens", "1", "--colors", "3"});
    CHECK(yes.code == cli::kExitOk);
    CHECK(yes.out.find("answer     yes") != std::string::npos);
    auto r158 = run({"decide", "--gens", "1,5,8", "--colors", "3", "--format", "records"});
    CHECK(r158.code == cli::kExitFalse);
    auto rec = parse_record(lines(r158.out).front());
    CHECK(rec["answer"] == "no");
    CHECK(rec["code_space"] == "19683");
    CHECK(rec["vertices"] == "120");
}

TEST_CASE("decide reads SFT files and writes witnesses and DOT") {
    TempDir tmp;
    write_text(tmp.file("x.sft"), "alphabet 3\n0 0\n1 1\n2 2\n");
    auto r = run({"decide", "--sft", tmp.file("x.sft"), "--witness-out", tmp.file("w.txt"), "--dot",
                  tmp.file("h.dot")});
    CHECK(r.code == cli::kExitOk);
    CHECK(fs::exists(tmp.file("h.dot")));
    auto v = run({"verify", tmp.file("w.txt"), "--sft", tmp.file("x.sft")});
    CHECK(v.code == cli::kExitOk);
    CHECK(v.out.rfind("ok witness", 0) == 0);
}

TEST_CASE("usage and capacity errors") {
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"chi"}).code == cli::kExitUsage);
    auto gcd = run({"chi", "--gens", "2,4"});
    CHECK(gcd.code == cli::kExitUsage);
    CHECK(gcd.err.find("gcd") != std::string::npos);
    CHECK(run({"decide", "--gens", "1,2"}).code == cli::kExitUsage);
    CHECK(run({"decide", "--gens", "1", "--colors", "3", "--budget", "0"}).code == cli::kExitUsage);
    auto cap = run({"decide", "--gens", "1,5,8", "--colors", "4", "--budget", "1000"});
    CHECK(cap.code == cli::kExitCapacity);
    CHECK(cap.err.find("budget") != std::string::npos);
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("chi reports value, bounds, provenance and decisions") {
    auto r = run({"chi", "--gens", "1,5,8", "--no-cache"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("chi        4") != std::string::npos);
    CHECK(r.out.find("bpc-loop") != std::string::npos);
    CHECK(r.out.find("b=3 no") != std::string::npos);
    CHECK(r.out.find("b=4 yes") != std::string::npos);

    auto rec = parse_record(run({"chi", "--gens", "1,2,3,4", "--format", "records", "--no-cache"}).out);
    CHECK(rec["chi"] == "6");
    CHECK(rec["method"] == "one-to-n");
    auto pair = parse_record(run({"chi", "--gens", "1,2", "--format", "records", "--no-cache"}).out);
    CHECK(pair["chi"] == "4");
}

TEST_CASE("verify rejects broken certificates") {
    TempDir tmp;
    write_text(tmp.file("even.txt"), "gamma 2 4 6\ng 0 1 2 1 0 2 1 2\n");
    auto even = run({"verify", tmp.file("even.txt"), "--gens", "1", "--colors", "3"});
    CHECK(even.code == cli::kExitFalse);
    CHECK(even.out.find("gcd") != std::string::npos);

    auto t = cong_construction(GeneratorSet({1, 3}), 1);
    {
        std::ofstream f(tmp.file("good.tiles"));
        write_tiles(f, t);
    }
    CHECK(run({"verify", tmp.file("good.tiles"), "--gens", "1,3"}).code == cli::kExitOk);
    t.c2.back() = t.c2.back() == 0 ? 1 : 0;
    {
        std::ofstream f(tmp.file("bad.tiles"));
        write_tiles(f, t);
    }
    auto bad = run({"verify", tmp.file("bad.tiles"), "--gens", "1,3"});
    CHECK(bad.code == cli::kExitFalse);
    CHECK(bad.out.rfind("FAIL", 0) == 0);

    write_text(tmp.file("junk.txt"), "hello\n");
    CHECK(run({"verify", tmp.file("junk.txt"), "--gens", "1"}).code == cli::kExitUsage);
}

TEST_CASE("cache transparency") {
    TempDir tmp;
    const auto cache = tmp.file("cache/decisions.txt");
    auto cold = run({"chi", "--gens", "1,5,8", "--method", "bpc-only", "--cache", cache});
    CHECK(fs::exists(cache));
    auto warm = run({"chi", "--gens", "1,5,8", "--method", "bpc-only", "--cache", cache});
    auto none = run({"chi", "--gens", "1,5,8", "--method", "bpc-only", "--no-cache"});
    CHECK(cold.out == warm.out);
    CHECK(cold.out == none.out);

    cli::FileDecisionCache c(cache);
    CHECK(c.size() == 2);
    CHECK(c.lookup(GeneratorSet({1, 5, 8}), 3) == false);
    CHECK(c.lookup(GeneratorSet({1, 5, 8}), 4) == true);

    // entries from another engine version are ignored
    write_text(tmp.file("old.txt"), "key=1,5,8/3 decision=yes timestamp=0 version=0.0.1\n");
    cli::FileDecisionCache old(tmp.file("old.txt"));
    CHECK(old.size() == 0);

    auto sweep_cold = run({"sweep", "--family", "pairs", "--max", "6", "--method", "bpc-only", "--cache", cache});
    auto sweep_warm = run({"sweep", "--family", "pairs", "--max", "6", "--method", "bpc-only", "--cache", cache,
                           "--workers", "3"});
    CHECK(sweep_cold.out == sweep_warm.out);
}

TEST_CASE("sweep records round trip through verify") {
    TempDir tmp;
    auto r = run({"sweep", "--family", "triples", "--max", "6", "--witness-dir", tmp.file("w"), "--no-cache",
                  "--workers", "2"});
    REQUIRE(r.code == cli::kExitOk);
    auto rows = lines(r.out);
    CHECK(rows.size() == cli::enumerate_family("triples", 6).size());
    for (const auto& row : rows) {
        auto rec = parse_record(row);
        REQUIRE(rec.count("witness"));
        auto v = run({"verify", rec["witness"], "--gens", rec["gens"], "--colors", rec["chi"]});
        CHECK_MESSAGE(v.code == cli::kExitOk, row << "\n" << v.out);
    }
}

TEST_CASE("sweep families") {
    CHECK(cli::enumerate_family("pairs", 4).size() == 5); // 12 13 14 23 34
    for (const auto& s : cli::enumerate_family("odd", 9))
        for (auto a : s.values()) CHECK(a % 2 == 1);
    CHECK(cli::enumerate_family("triples", 4).size() == 4);
    CHECK_THROWS(cli::enumerate_family("quads", 4));

    auto odd = run({"sweep", "--family", "odd", "--max", "9", "--format", "records", "--no-cache"});
    for (const auto& row : lines(odd.out)) CHECK(parse_record(row)["chi"] == "3");
    auto pairs = run({"sweep", "--family", "pairs", "--max", "9", "--kappa", "3", "--no-cache"});
    auto rows = lines(pairs.out);
    REQUIRE(rows.size() == 1);
    CHECK(parse_record(rows[0])["gens"] == "1,2");
}

TEST_CASE("bench prints one timing line per instance") {
    auto r = run({"bench", "1,5,8:3", "1:2"});
    CHECK(r.code == cli::kExitOk);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(parse_record(rows[0])["codes"] == "19683");
    CHECK(parse_record(rows[1])["vertices"] == "2");
    CHECK(run({"bench", "1,5,8"}).code == cli::kExitUsage);
}
