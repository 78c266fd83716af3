#include "borelz/chromatic.hpp"
#include "borelz/errors.hpp"
#include "borelz/witness.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace borelz;

namespace {

GeneratorSet S(std::vector<std::uint32_t> v) { return GeneratorSet(std::move(v)); }

// Independent respects check: every labelled walk of window_len vertices
// along either cycle (walks on a cycle of length >= window_len are simple).
bool respects_by_cycles(const TwoTilesGraph& gamma, const Word& g, const Sft& sft) {
    const auto L = sft.window_len();
    for (int which = 0; which < 2; ++which) {
        auto cyc = gamma.cycle(which);
        for (std::size_t start = 0; start < cyc.size(); ++start) {
            Word w;
            for (std::size_t i = 0; i < L; ++i) w.push_back(g[cyc[(start + i) % cyc.size()]]);
            if (sft.is_forbidden(w)) return false;
        }
    }
    // paths leaving the shared path along one arc and entering it along the other
    auto p = gamma.cycle(0), q = gamma.cycle(1);
    const auto n = gamma.n();
    for (auto* first : {&p, &q}) {
        for (auto* second : {&p, &q}) {
            // walk the tail of `first` after the shared path, then the shared
            // path, then the arc of `second`
            Word tour;
            for (std::size_t i = n; i < first->size(); ++i) tour.push_back(g[(*first)[i]]);
            const std::size_t tail = tour.size();
            for (std::size_t i = 0; i < second->size(); ++i) tour.push_back(g[(*second)[i]]);
            for (std::size_t s = 0; s + L <= tour.size(); ++s) {
                if (s >= tail) break;
                Word w(tour.begin() + s, tour.begin() + s + L);
                if (sft.is_forbidden(w)) return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_SUITE("witness") {

TEST_CASE("two-tiles graph shape") {
    TwoTilesGraph g(3, 7, 9);
    CHECK(g.vertex_count() == 13);
    CHECK(g.cycle(0).size() == 7);
    CHECK(g.cycle(1).size() == 9);
    auto p = g.cycle(0), q = g.cycle(1);
    CHECK(std::equal(p.begin(), p.begin() + 3, q.begin()));
    CHECK(TwoTilesGraph(1, 2, 3).vertex_count() == 4);
    CHECK(TwoTilesGraph(2, 3, 4).vertex_count() == 5);
    CHECK_THROWS_AS(TwoTilesGraph(3, 3, 5), InvalidArgument);
    CHECK_THROWS_AS(TwoTilesGraph(0, 2, 3), InvalidArgument);

    for (auto [n, pp, qq] : {std::tuple{3u, 7u, 9u}, {1u, 2u, 3u}, {2u, 3u, 4u}, {4u, 11u, 6u}}) {
        TwoTilesGraph t(n, pp, qq);
        std::vector<int> in(t.vertex_count()), out(t.vertex_count());
        for (VertexId v = 0; v < t.vertex_count(); ++v) {
            for_each_successor(t, v, [&](VertexId w) {
                ++out[v];
                ++in[w];
            });
        }
        for (VertexId v = 0; v < t.vertex_count(); ++v) {
            CHECK(out[v] == (v == n - 1 ? 2 : 1));
            CHECK(in[v] == (v == 0 ? 2 : 1));
        }
    }
}

TEST_CASE("respects examples") {
    auto two = normalize(Alphabet(2), {{0, 0}, {1, 1}});
    TwoTilesGraph g123(1, 2, 3);
    CHECK_FALSE(respects(g123, Word(4, 0), two));
    int respecting = 0;
    for (const auto& lab : oracle::all_words(2, 4)) respecting += respects(g123, lab, two);
    CHECK(respecting == 0);

    TwoTilesGraph g234(2, 3, 4);
    auto three = coloring_sft(S({1}), Alphabet(3));
    auto lab = search_gamma_labeling(three, 2, 3, 4);
    REQUIRE(lab.has_value());
    CHECK(respects(g234, *lab, three));
    CHECK_THROWS_AS(respects(g234, Word{0, 1, 2, 3, 0}, three), InvalidArgument);
}

TEST_CASE("respects agrees with a cycle-walk check") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        std::uint32_t b = 2 + rng() % 2;
        std::vector<Word> pats(1 + rng() % 3);
        for (auto& p : pats) {
            p.resize(1 + rng() % 3);
            for (auto& s : p) s = static_cast<Symbol>(rng() % b);
        }
        auto sft = normalize(Alphabet(b), pats);
        std::uint32_t n = sft.window_len() + rng() % 2;
        std::uint32_t p = n + 1 + rng() % 4, q = n + 1 + rng() % 4;
        TwoTilesGraph gamma(n, p, q);
        Word lab(gamma.vertex_count());
        for (auto& s : lab) s = static_cast<Symbol>(rng() % b);
        CHECK(respects(gamma, lab, sft) == respects_by_cycles(gamma, lab, sft));
    }
}

TEST_CASE("search examples") {
    CHECK_FALSE(search_gamma_labeling(coloring_sft(S({1}), Alphabet(2)), 2, 3, 4).has_value());
    auto yes = search_gamma_labeling(coloring_sft(S({1}), Alphabet(3)), 2, 3, 4);
    REQUIRE(yes.has_value());
    CHECK(verify_two_tiles({TwoTilesGraph(2, 3, 4), *yes, coloring_sft(S({1}), Alphabet(3))}));
    CHECK_FALSE(search_gamma_labeling(coloring_sft(S({1, 5, 8}), Alphabet(3)), 9, 10, 11).has_value());
    CHECK_THROWS_AS(search_gamma_labeling(coloring_sft(S({1}), Alphabet(3)), 2, 4, 6), InvalidArgument);
    CHECK_THROWS_AS(search_gamma_labeling(coloring_sft(S({1, 2}), Alphabet(3)), 2, 3, 5), InvalidArgument);
}

TEST_CASE("extract_certificate examples") {
    auto w = extract_certificate(coloring_sft(S({1}), Alphabet(3)));
    REQUIRE(w.has_value());
    CHECK(std::gcd(w->gamma.p(), w->gamma.q()) == 1);
    CHECK(verify_two_tiles(*w));
    CHECK_FALSE(extract_certificate(coloring_sft(S({1}), Alphabet(2))).has_value());
    auto full = extract_certificate(Sft(Alphabet(2), 1, {}));
    REQUIRE(full.has_value());
    CHECK(full->gamma.n() == 1);
    CHECK(verify_two_tiles(*full));
}

TEST_CASE("verify_two_tiles rejects bad parameters and labels") {
    auto sft = coloring_sft(S({1}), Alphabet(3));
    auto w = *extract_certificate(sft);
    CHECK_FALSE(two_tiles_failure(w).has_value());

    auto broken = w;
    broken.labeling[0] = broken.labeling[1];
    CHECK(two_tiles_failure(broken).has_value());

    TwoTilesWitness even{TwoTilesGraph(2, 4, 6), Word{0, 1, 2, 1, 0, 2, 1, 2}, sft};
    auto why = two_tiles_failure(even);
    REQUIRE(why.has_value());
    CHECK(why->find("gcd") != std::string::npos);

    TwoTilesWitness short_n{TwoTilesGraph(1, 2, 3), Word{0, 1, 2, 1}, coloring_sft(S({1, 2}), Alphabet(3))};
    CHECK(two_tiles_failure(short_n).has_value());

    TwoTilesWitness wrong_size{TwoTilesGraph(2, 3, 4), Word{0, 1, 2}, sft};
    CHECK(two_tiles_failure(wrong_size).has_value());
}

TEST_CASE("certificates from random SFTs verify") {
    std::mt19937_64 rng(37);
    int yes = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::uint32_t b = 2 + rng() % 2;
        std::vector<Word> pats(1 + rng() % 5);
        for (auto& p : pats) {
            p.resize(1 + rng() % 4);
            for (auto& s : p) s = static_cast<Symbol>(rng() % b);
        }
        auto sft = normalize(Alphabet(b), pats);
        auto cert = extract_certificate(sft);
        CHECK(cert.has_value() == decide(sft).answer);
        if (cert) {
            ++yes;
            CHECK(verify_two_tiles(*cert));
            CHECK(respects_by_cycles(cert->gamma, cert->labeling, sft));
        }
    }
    CHECK(yes > 30);
}

TEST_CASE("engine and exhaustive search agree on small coloring problems") {
    for (auto gens : oracle::gcd_one_subsets(4)) {
        for (std::uint32_t b = 2; b <= 4; ++b) {
            auto sft = coloring_sft(S(gens), Alphabet(b));
            const std::uint32_t n = sft.window_len();
            if (decide(sft).answer) {
                auto cert = extract_certificate(sft);
                REQUIRE(cert.has_value());
                auto found = search_gamma_labeling(sft, n, cert->gamma.p(), cert->gamma.q());
                REQUIRE(found.has_value());
                CHECK(verify_two_tiles({cert->gamma, *found, sft}));
            } else {
                for (std::uint32_t p = n + 1; p <= 3 * n; ++p)
                    for (std::uint32_t q = p + 1; q <= 3 * n; ++q)
                        if (std::gcd(p, q) == 1) CHECK_FALSE(search_gamma_labeling(sft, n, p, q).has_value());
            }
        }
    }
}

TEST_CASE("S-colorations") {
    CHECK(verify_s_coloration(Word{0, 1, 2, 0}, S({1, 2})));
    CHECK_FALSE(verify_s_coloration(Word{0, 1, 0}, S({2, 3})));
    CHECK(verify_s_coloration(cong_construction(S({1, 3}), 1).c2, S({1, 3})));
}

TEST_CASE("tile pair verifier") {
    auto t = cong_construction(S({1, 3}), 1);
    CHECK(verify_tile_pair(t.c1, t.c2, S({1, 3}), t.ell));
    CHECK(t.colors() == 3);
    CHECK(std::gcd(t.p, t.q) == 1);
    CHECK(t.c1.size() == t.ell + t.p);
    CHECK(t.c2.size() == t.ell + t.q);

    Word x{0, 1, 0, 1};
    CHECK_FALSE(verify_tile_pair(x, x, S({1}), 1));

    auto bad = t;
    bad.c2.back() = bad.c2.back() == 0 ? 1 : 0;
    CHECK_FALSE(verify_tile_pair(bad.c1, bad.c2, S({1, 3}), t.ell));

    auto pair = pair_construction(1, 4);
    CHECK(verify_tile_pair(pair.c1, pair.c2, S({1, 4}), pair.ell));
    CHECK(pair.p == 3 * pair.ell);
    CHECK(pair.q == 3 * pair.ell - 2);
}

TEST_CASE("construction examples") {
    auto one_to_n = cong_construction(S({1, 2, 3, 4}), 4);
    CHECK(one_to_n.colors() == 6);
    CHECK(verify_tile_pair(one_to_n.c1, one_to_n.c2, S({1, 2, 3, 4}), one_to_n.ell));
    auto t158 = cong_construction(S({1, 5, 8}), 2);
    CHECK(t158.colors() == 4);
    CHECK(verify_tile_pair(t158.c1, t158.c2, S({1, 5, 8}), t158.ell));
    CHECK_THROWS_AS(cong_construction(S({1, 2}), 1), InvalidArgument);

    for (auto gens : {std::vector<std::uint32_t>{2, 3}, {3, 4, 5}, {1}}) {
        auto t = two_a1_construction(S(gens));
        CHECK(t.colors() == 3);
        CHECK(verify_tile_pair(t.c1, t.c2, S(gens), t.ell));
    }
    CHECK_THROWS_AS(two_a1_construction(S({1, 3})), InvalidArgument);

    for (auto [a1, a2] : {std::pair{1u, 4u}, {3u, 7u}, {2u, 5u}, {2u, 7u}, {3u, 8u}}) {
        auto t = pair_construction(a1, a2);
        CHECK(t.colors() == 3);
        CHECK_MESSAGE(verify_tile_pair(t.c1, t.c2, S({a1, a2}), t.ell), t.construction);
    }
    CHECK_THROWS_AS(pair_construction(1, 2), InvalidArgument);
    CHECK_THROWS_AS(pair_construction(2, 4), InvalidArgument);
}

TEST_CASE("every construction verifies for all admissible S with a_n <= 9") {
    int checked = 0;
    for (auto gens : oracle::gcd_one_subsets(9)) {
        const auto s = S(gens);
        for (std::uint32_t m = 1; m <= s.max(); ++m) {
            if (std::any_of(gens.begin(), gens.end(), [m](std::uint32_t a) { return a % (m + 1) == 0; })) continue;
            auto t = cong_construction(s, m);
            CHECK_MESSAGE(verify_tile_pair(t.c1, t.c2, s, t.ell), s.to_string() << " m=" << m);
            CHECK(t.colors() <= m + 2);
            ++checked;
        }
        if (s.max() < 2 * s.min()) {
            auto t = two_a1_construction(s);
            CHECK_MESSAGE(verify_tile_pair(t.c1, t.c2, s, t.ell), s.to_string());
            ++checked;
        }
        if (gens.size() == 2 && !(gens[0] == 1 && gens[1] == 2)) {
            auto t = pair_construction(gens[0], gens[1]);
            CHECK_MESSAGE(verify_tile_pair(t.c1, t.c2, s, t.ell), s.to_string() << " " << t.construction);
            CHECK(t.colors() == 3);
            ++checked;
        }
        const auto r = gens[0] % 3;
        if (r != 0 && std::all_of(gens.begin(), gens.end(), [r](std::uint32_t a) { return a % 3 == r; })) {
            auto t = mod3_construction(s);
            CHECK_MESSAGE(verify_tile_pair(t.c1, t.c2, s, t.ell), s.to_string());
            CHECK(t.colors() == 3);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("pair construction verifies for every pair up to 40") {
    for (std::uint32_t a2 = 2; a2 <= 40; ++a2) {
        for (std::uint32_t a1 = 1; a1 < a2; ++a1) {
            if (std::gcd(a1, a2) != 1 || (a1 == 1 && a2 == 2)) continue;
            auto t = pair_construction(a1, a2);
            CHECK_MESSAGE(verify_tile_pair(t.c1, t.c2, S({a1, a2}), t.ell), a1 << "," << a2 << " " << t.construction);
            CHECK(t.colors() == 3);
            CHECK(std::gcd(t.p, t.q) == 1);
        }
    }
}

TEST_CASE("a verified tile pair implies a yes decision and a witness") {
    for (auto gens : oracle::gcd_one_subsets(6)) {
        const auto s = S(gens);
        std::vector<TilePair> pairs;
        if (s.max() < 2 * s.min()) pairs.push_back(two_a1_construction(s));
        if (gens.size() == 2 && !(gens[0] == 1 && gens[1] == 2)) pairs.push_back(pair_construction(gens[0], gens[1]));
        if (std::none_of(gens.begin(), gens.end(), [](std::uint32_t a) { return a % 2 == 0; }))
            pairs.push_back(cong_construction(s, 1));
        for (const auto& t : pairs) {
            REQUIRE(verify_tile_pair(t.c1, t.c2, s, t.ell));
            CHECK(bpc(s, t.colors()));
            auto w = tiles_to_witness(t, s);
            CHECK(verify_two_tiles(w));
            CHECK(w.gamma.p() == t.p);
            CHECK(w.gamma.q() == t.q);
        }
    }
}

}
