// Explicit tile pairs certifying upper bounds on the Borel chromatic number.
#include "borelz/errors.hpp"
#include "borelz/witness.hpp"

#include <algorithm>
#include <numeric>

namespace borelz {

namespace {

Word repeat(const Word& block, std::uint64_t times) {
    Word out;
    out.reserve(block.size() * times);
    for (std::uint64_t i = 0; i < times; ++i) out.insert(out.end(), block.begin(), block.end());
    return out;
}

Word run(Symbol s, std::uint32_t count) { return Word(count, s); }

Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::uint32_t ceil_div(std::uint32_t a, std::uint32_t b) { return (a + b - 1) / b; }

TilePair finish(Word c1, Word c2, std::uint32_t ell, std::string name) {
    TilePair t;
    t.p = c1.size() - ell;
    t.q = c2.size() - ell;
    t.c1 = std::move(c1);
    t.c2 = std::move(c2);
    t.ell = ell;
    t.construction = std::move(name);
    return t;
}

// Replaces the first `count` occurrences of `from` in word[begin..] by `to`.
void replace_first(Word& word, std::size_t begin, Symbol from, Symbol to, std::uint64_t count) {
    for (std::size_t i = begin; i < word.size() && count > 0; ++i) {
        if (word[i] == from) {
            word[i] = to;
            --count;
        }
    }
    if (count > 0) {
        throw InternalError("tile too short for the replacement schedule");
    }
}


} // namespace

std::uint32_t TilePair::colors() const {
    Symbol top = 0;
    for (auto s : c1) top = std::max(top, s);
    for (auto s : c2) top = std::max(top, s);
    return top + 1;
}

TilePair cong_construction(const GeneratorSet& gens, std::uint32_t m) {
    if (m < 1) {
        throw InvalidArgument("congruence construction needs m >= 1");
    }
    for (auto a : gens.values()) {
        if (a % (m + 1) == 0) {
            throw InvalidArgument("generator " + std::to_string(a) + " is divisible by m+1=" + std::to_string(m + 1));
        }
    }
    const std::uint32_t period = m + 1;
    const std::uint32_t M = ceil_div(gens.max() + 1, period);
    const std::uint32_t ell = M * period;
    const std::uint64_t gap = 2 * std::uint64_t{M} + 2;
    // b[0] < b[m] < b[m-1] < ... < b[1] < N, consecutive ones `gap` apart
    std::vector<std::uint64_t> b(m + 1);
    b[0] = gap;
    for (std::uint32_t i = 1; i <= m; ++i) b[i] = b[0] + (m + 1 - i) * gap;
    const std::uint64_t N = b[1] + gap;

    Word block(period);
    std::iota(block.begin(), block.end(), 0);
    Word c1 = repeat(block, N);

    // d_0: drop the 0 sitting right after the leading copy of c_0
    Word c2 = c1;
    c2.erase(c2.begin() + ell);
    replace_first(c2, ell, 1, m + 1, b[1]);
    for (std::uint32_t i = 2; i <= m; ++i) replace_first(c2, ell, i, i - 1, b[i]);
    replace_first(c2, ell, 0, m, b[0]);

    return finish(std::move(c1), std::move(c2), ell, "congruence(m=" + std::to_string(m) + ")");
}

TilePair two_a1_construction(const GeneratorSet& gens) {
    const std::uint32_t a1 = gens.min();
    if (gens.max() >= 2 * a1) {
        throw InvalidArgument("construction needs a_n < 2 a_1");
    }
    const std::uint32_t M = ceil_div(gens.max() + 1, 3 * a1);
    const std::uint32_t ell = 3 * a1 * M;
    const std::uint64_t N = 2 * std::uint64_t{M} + 2;
    Word c1 = repeat(cat({run(0, a1), run(1, a1), run(2, a1)}), N);
    Word c2 = c1;
    c2.erase(c2.begin() + ell);
    return finish(std::move(c1), std::move(c2), ell, "a_n<2a_1");
}

TilePair mod3_construction(const GeneratorSet& gens) {
    const std::uint32_t residue = gens.min() % 3;
    if (residue == 0 || std::any_of(gens.values().begin(), gens.values().end(),
                                    [&](std::uint32_t a) { return a % 3 != residue; })) {
        throw InvalidArgument("construction needs all generators in 1+3Z or all in 2+3Z");
    }
    const std::uint32_t M = ceil_div(gens.max() + 1, 3);
    const std::uint32_t ell = 3 * M;
    // closed lengths 3K and 3K - residue; K odd keeps them coprime when residue is 2
    std::uint64_t K = M + 1;
    if (K % 2 == 0) ++K;
    Word c1 = repeat(Word{0, 1, 2}, M + K);
    Word c2 = c1;
    c2.erase(c2.begin() + ell, c2.begin() + ell + residue);
    return finish(std::move(c1), std::move(c2), ell, "residue-mod-3");
}

TilePair pair_construction(std::uint32_t a1, std::uint32_t a2) {
    const GeneratorSet gens({a1, a2});
    a1 = gens.values()[0];
    a2 = gens.values()[1];
    if (a1 == 1 && a2 == 2) {
        throw InvalidArgument("(1,2) needs four colors; no three-color pair construction exists");
    }
    if (a1 == 1 && a2 % 2 == 1) return cong_construction(gens, 1);
    if (a2 < 2 * a1) return two_a1_construction(gens);

    if (a1 == 1) {
        // a_2 even: c_0 = (01)^t 021
        const std::uint32_t ell = a2 + 1;
        const Word c0 = cat({repeat(Word{0, 1}, a2 / 2 - 1), Word{0, 2, 1}});
        Word c1 = repeat(c0, 4);
        Word c2 = c1;
        c2.erase(c2.begin() + ell, c2.begin() + ell + 2);
        return finish(std::move(c1), std::move(c2), ell, "pair-a1-one");
    }

    const std::uint32_t m = a2 / a1;
    const std::uint32_t b = a2 - m * a1;
    const std::uint32_t ell = a1 + a2;
    const Word u = run(0, a1);
    const Word v = cat({run(1, a1 - 1), Word{2}});
    const Word s = run(1, b);
    const Word u_star = cat({run(0, a1 - 1), Word{1}});
    const Word v_tilde = cat({run(1, a1 - 2), Word{2, 2}});

    Word c0, c0_tilde;
    std::string name;
    if (m % 2 == 1) {
        const std::uint32_t t = (m - 1) / 2;
        const Word w = run(2, a1);
        const Word w_minus = run(2, a1 - 1);
        c0 = cat({repeat(cat({u, v}), t), u, s, w});
        c0_tilde = cat({repeat(cat({u_star, v_tilde}), t), u_star, s, w_minus});
        name = "pair-odd-quotient";
    } else {
        const std::uint32_t t = m / 2 - 1;
        const std::uint32_t d = a1 - b;
        const Word x = run(2, d);
        const Word y = run(0, b);
        const Word z = run(1, a1);
        c0 = cat({repeat(cat({u, v}), t), u, s, x, y, z});
        // inserted block of length ell+1: (u~ v)^t u~ s 2^{d+1} y 1^{a_1-1} 2
        const Word u_tilde = cat({Word{2}, run(0, a1 - 1)});
        const Word filler =
            cat({repeat(cat({u_tilde, v}), t), u_tilde, s, run(2, d + 1), y, run(1, a1 - 1), Word{2}});
        if (c0.size() != ell || filler.size() != ell + 1) {
            throw InternalError("pair construction produced blocks of the wrong length");
        }
        return finish(repeat(c0, 4), cat({c0, filler, c0, c0}), ell, "pair-even-quotient");
    }
    if (c0.size() != ell || c0_tilde.size() + 1 != ell) {
        throw InternalError("pair construction produced blocks of the wrong length");
    }
    Word c1 = repeat(c0, 4);
    Word c2 = cat({c0, c0_tilde, c0, c0});
    return finish(std::move(c1), std::move(c2), ell, name);
}

bool verify_s_coloration(std::span<const Symbol> word, const GeneratorSet& gens) {
    for (auto a : gens.values()) {
        for (std::size_t i = 0; i + a < word.size(); ++i) {
            if (word[i] == word[i + a]) return false;
        }
    }
    return true;
}

std::optional<std::string> tile_pair_failure(std::span<const Symbol> c1, std::span<const Symbol> c2,
                                             const GeneratorSet& gens, std::uint32_t ell) {
    if (ell < gens.max() + 1) {
        return "overlap ell=" + std::to_string(ell) + " is shorter than a_n+1=" + std::to_string(gens.max() + 1);
    }
    if (c1.size() <= 2 * std::size_t{ell} || c2.size() <= 2 * std::size_t{ell}) {
        return "tiles must be longer than 2*ell (p, q > ell); lengths are " + std::to_string(c1.size()) + " and " +
               std::to_string(c2.size());
    }
    const std::uint64_t p = c1.size() - ell;
    const std::uint64_t q = c2.size() - ell;
    if (std::gcd(p, q) != 1) {
        return "p=" + std::to_string(p) + " and q=" + std::to_string(q) + " are not coprime";
    }
    for (int i = 0; i < 2; ++i) {
        const auto& c = i == 0 ? c1 : c2;
        for (auto a : gens.values()) {
            for (std::size_t x = 0; x + a < c.size(); ++x) {
                if (c[x] == c[x + a]) {
                    return "c" + std::to_string(i + 1) + " repeats color " + std::to_string(c[x]) + " at positions " +
                           std::to_string(x) + " and " + std::to_string(x + a);
                }
            }
        }
    }
    const auto head = c1.first(ell);
    const std::span<const Symbol> blocks[] = {c1.last(ell), c2.first(ell), c2.last(ell)};
    const char* names[] = {"last ell of c1", "first ell of c2", "last ell of c2"};
    for (int i = 0; i < 3; ++i) {
        if (!std::equal(head.begin(), head.end(), blocks[i].begin())) {
            return std::string(names[i]) + " differs from the first ell symbols of c1";
        }
    }
    return std::nullopt;
}

bool verify_tile_pair(std::span<const Symbol> c1, std::span<const Symbol> c2, const GeneratorSet& gens,
                      std::uint32_t ell) {
    return !tile_pair_failure(c1, c2, gens, ell).has_value();
}

TwoTilesWitness tiles_to_witness(const TilePair& tiles, const GeneratorSet& gens) {
    if (auto why = tile_pair_failure(tiles.c1, tiles.c2, gens, tiles.ell)) {
        throw InvalidArgument("tile pair does not verify: " + *why);
    }
    const auto ell = tiles.ell;
    const auto p = static_cast<std::uint32_t>(tiles.p);
    const auto q = static_cast<std::uint32_t>(tiles.q);
    Word labeling(tiles.c1.begin(), tiles.c1.begin() + p);
    labeling.insert(labeling.end(), tiles.c2.begin() + ell, tiles.c2.begin() + q);
    return TwoTilesWitness{TwoTilesGraph(ell, p, q), std::move(labeling), coloring_sft(gens, Alphabet(tiles.colors()))};
}

} // namespace borelz
