#include "borelz/errors.hpp"
#include "borelz/sft.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace borelz;

namespace {

std::vector<Word> forbidden_words(const Sft& sft) {
    std::vector<Word> out;
    for (auto c : sft.forbidden()) out.push_back(decode(c, sft.alphabet().size(), sft.window_len()));
    return out;
}

Word w(std::initializer_list<Symbol> s) { return Word(s); }

} // namespace

TEST_SUITE("sft") {

TEST_CASE("generator sets are validated and canonical") {
    GeneratorSet s({8, 1, 5});
    CHECK(s.values() == std::vector<std::uint32_t>{1, 5, 8});
    CHECK(s.to_string() == "1,5,8");
    CHECK(GeneratorSet::parse(" 8, 5,1") == s);
    CHECK(s.contains(5));
    CHECK_FALSE(s.contains(4));
    CHECK_THROWS_AS(GeneratorSet({}), InvalidArgument);
    CHECK_THROWS_AS(GeneratorSet({0, 1}), InvalidArgument);
    CHECK_THROWS_AS(GeneratorSet({2, 2, 3}), InvalidArgument);
    CHECK_THROWS_WITH_AS(GeneratorSet({2, 4}), doctest::Contains("gcd"), InvalidArgument);
    CHECK_THROWS_AS(GeneratorSet::parse("1,x"), InvalidArgument);
    CHECK_THROWS_AS(Alphabet(0), InvalidArgument);
}

TEST_CASE("radix codes round trip with position 0 most significant") {
    CHECK(encode(w({1, 0, 2}), 3) == 11);
    CHECK(decode(11, 3, 3) == w({1, 0, 2}));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::uint32_t b = 1 + rng() % 6, len = 1 + rng() % 8;
        Word x(len);
        for (auto& s : x) s = static_cast<Symbol>(rng() % b);
        CHECK(decode(encode(x, b), b, len) == x);
    }
    CHECK(code_space(3, 9) == 19683);
    CHECK(code_space(2, 62) == std::uint64_t{1} << 62);
    CHECK_FALSE(code_space(2, 63).has_value());
    CHECK_FALSE(code_space(10, 19).has_value());
}

TEST_CASE("normalize examples") {
    auto a = normalize(Alphabet(2), {w({0})});
    CHECK(a.window_len() == 1);
    CHECK(forbidden_words(a) == std::vector<Word>{w({0})});

    auto b = normalize(Alphabet(2), {w({0}), w({1, 1})});
    CHECK(b.window_len() == 2);
    CHECK(forbidden_words(b) == std::vector<Word>{w({0, 0}), w({0, 1}), w({1, 1})});

    auto c = normalize(Alphabet(3), {w({0, 1}), w({2})});
    CHECK(c.window_len() == 2);
    CHECK(forbidden_words(c) == std::vector<Word>{w({0, 1}), w({2, 0}), w({2, 1}), w({2, 2})});

    CHECK_THROWS_AS(normalize(Alphabet(2), {Word{}}), InvalidArgument);
    CHECK_THROWS_AS(normalize(Alphabet(2), {w({0, 2})}), InvalidArgument);
}

TEST_CASE("normalize is idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::uint32_t b = 1 + rng() % 3;
        std::vector<Word> pats(1 + rng() % 4);
        for (auto& p : pats) {
            p.resize(1 + rng() % 3);
            for (auto& s : p) s = static_cast<Symbol>(rng() % b);
        }
        auto once = normalize(Alphabet(b), pats);
        auto twice = normalize(Alphabet(b), forbidden_words(once));
        CHECK(once.forbidden() == twice.forbidden());
        CHECK(once.window_len() == twice.window_len());
    }
}

TEST_CASE("avoidance is preserved by normalization") {
    // Right-extension sees an occurrence only if a full window starts there,
    // so input occurrences are counted at start positions 0..|w|-L.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t b = 2 + rng() % 2;
        std::vector<Word> pats(1 + rng() % 3);
        for (auto& p : pats) {
            p.resize(1 + rng() % 3);
            for (auto& s : p) s = static_cast<Symbol>(rng() % b);
        }
        const auto sft = normalize(Alphabet(b), pats);
        const auto L = sft.window_len();
        for (std::uint32_t len = L; len <= L + 3; ++len) {
            for (const auto& word : oracle::all_words(b, len)) {
                const std::size_t starts = word.size() - L + 1;
                bool input_ok = true;
                for (const auto& p : pats) {
                    for (std::size_t i = 0; i < starts; ++i) {
                        if (i + p.size() <= word.size() && std::equal(p.begin(), p.end(), word.begin() + i)) input_ok = false;
                    }
                }
                bool windows_ok = true;
                for (std::size_t i = 0; i + L <= word.size(); ++i) {
                    windows_ok = windows_ok && !sft.is_forbidden(std::span<const Symbol>(word).subspan(i, L));
                }
                CHECK(input_ok == windows_ok);
            }
        }
    }
}

TEST_CASE("coloring SFT counts match direct enumeration") {
    CHECK(coloring_sft(GeneratorSet({1}), Alphabet(2)).window_len() == 2);
    CHECK(forbidden_words(coloring_sft(GeneratorSet({1}), Alphabet(2))) == std::vector<Word>{w({0, 0}), w({1, 1})});

    auto s12 = coloring_sft(GeneratorSet({1, 2}), Alphabet(3));
    CHECK(s12.window_len() == 3);
    CHECK(s12.forbidden_count() == 21);
    for (const auto& f : forbidden_words(s12)) {
        auto sorted = f;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted != w({0, 1, 2}));
    }

    // frozen from an independent scan of all 3^9 and 4^9 words
    auto s158 = coloring_sft(GeneratorSet({1, 5, 8}), Alphabet(3));
    CHECK(s158.window_len() == 9);
    CHECK(s158.forbidden_count() == 19563);
    CHECK(oracle::coloring_forbidden_count({1, 5, 8}, 3) == 19563);
    CHECK(coloring_sft(GeneratorSet({1, 5, 8}), Alphabet(4)).forbidden_count() == 262144 - 6624);

    for (auto gens : oracle::gcd_one_subsets(5)) {
        for (std::uint32_t b = 1; b <= 3; ++b) {
            auto sft = coloring_sft(GeneratorSet(gens), Alphabet(b));
            CHECK(sft.forbidden_count() == oracle::coloring_forbidden_count(gens, b));
            CHECK(sft.forbidden().size() == sft.forbidden_count());
        }
    }
}

TEST_CASE("coloring SFTs are closed under reversal") {
    for (auto gens : oracle::gcd_one_subsets(5)) {
        auto sft = coloring_sft(GeneratorSet(gens), Alphabet(3));
        for (auto f : forbidden_words(sft)) {
            std::reverse(f.begin(), f.end());
            CHECK(sft.is_forbidden(f));
        }
    }
}

TEST_CASE("allowed window count grows with the number of colors") {
    for (auto gens : oracle::gcd_one_subsets(5)) {
        const GeneratorSet s(gens);
        std::uint64_t prev = 0;
        for (std::uint32_t b = 1; b <= 4; ++b) {
            auto sft = coloring_sft(s, Alphabet(b));
            auto allowed = sft.code_space() - sft.forbidden_count();
            CHECK(allowed >= prev);
            prev = allowed;
        }
    }
}

TEST_CASE("is_allowed scans every window") {
    auto x = normalize(Alphabet(2), {w({0, 0}), w({1, 1})});
    CHECK(is_allowed(x, w({0, 1, 0, 1})));
    CHECK_FALSE(is_allowed(x, w({0, 1, 1, 0})));
    CHECK(is_allowed(x, w({1})));
    CHECK_THROWS_AS(is_allowed(x, w({0, 2})), InvalidArgument);
    CHECK(is_allowed(coloring_sft(GeneratorSet({1, 2}), Alphabet(3)), w({0, 1, 2, 0, 1, 2, 0})));
    CHECK_FALSE(is_allowed(coloring_sft(GeneratorSet({1, 2}), Alphabet(3)), w({0, 1, 0})));
}

TEST_CASE("code space beyond 63 bits is a capacity error") {
    CHECK_THROWS_AS(coloring_sft(GeneratorSet({1, 40}), Alphabet(3)), CapacityError);
    CHECK_THROWS_AS(Sft(Alphabet(2), 64, {}), CapacityError);
    CHECK_NOTHROW(Sft(Alphabet(2), 62, {}));
}

TEST_CASE("explicit forbidden lists are sorted and deduplicated") {
    Sft s(Alphabet(2), 2, {3, 0, 3});
    CHECK(s.forbidden() == std::vector<WordCode>{0, 3});
    CHECK(s.forbidden_count() == 2);
    CHECK_THROWS_AS(Sft(Alphabet(2), 2, {4}), InvalidArgument);
    CHECK_THROWS_AS(Sft(Alphabet(2), 0, {}), InvalidArgument);
}

}
