#include "borelz/chromatic.hpp"

#include "borelz/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace borelz {

CoreSubgraph core_subgraph(const GeneratorSet& gens) {
    CoreSubgraph k;
    k.vertices.push_back(0);
    for (auto a : gens.values()) k.vertices.push_back(a);
    const std::size_t n = k.vertices.size();
    if (n > 64) {
        throw InvalidArgument("core subgraph has " + std::to_string(n) + " vertices; the exact solvers stop at 64");
    }
    k.graph.adjacency.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (gens.contains(k.vertices[j] - k.vertices[i])) {
                k.edges.emplace_back(k.vertices[i], k.vertices[j]);
                k.graph.adjacency[i] |= std::uint64_t{1} << j;
                k.graph.adjacency[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return k;
}

namespace {

void check_small(const SmallGraph& g) {
    if (g.vertex_count() > 64) {
        throw InvalidArgument("graph has " + std::to_string(g.vertex_count()) + " vertices; the exact solvers stop at 64");
    }
}

std::uint64_t all_vertices(const SmallGraph& g) {
    return g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
}

// Bron-Kerbosch with pivoting, pruned by the best clique so far.
void max_clique(const SmallGraph& g, std::uint64_t r_size, std::uint64_t p, std::uint64_t x, std::uint32_t& best) {
    if (p == 0 && x == 0) {
        best = std::max<std::uint32_t>(best, static_cast<std::uint32_t>(r_size));
        return;
    }
    if (r_size + std::popcount(p) <= best) return;
    const std::uint64_t px = p | x;
    const int pivot = std::countr_zero(px);
    std::uint64_t candidates = p & ~g.adjacency[pivot];
    while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        const std::uint64_t bit = std::uint64_t{1} << v;
        max_clique(g, r_size + 1, p & g.adjacency[v], x & g.adjacency[v], best);
        p &= ~bit;
        x |= bit;
    }
}

// Backtracking k-colorability, always branching on the most saturated
// uncolored vertex.
bool colorable(const SmallGraph& g, std::uint32_t k) {
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::function<bool(std::size_t)> place = [&](std::size_t done) {
        if (done == n) return true;
        int pick = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::uint64_t used = 0;
            int deg = 0;
            for (std::size_t w = 0; w < n; ++w) {
                if (!g.adjacent(v, w)) continue;
                if (color[w] >= 0) used |= std::uint64_t{1} << color[w];
                else ++deg;
            }
            const int sat = std::popcount(used);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = static_cast<int>(v);
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::uint64_t used = 0;
        for (std::size_t w = 0; w < n; ++w) {
            if (g.adjacent(pick, w) && color[w] >= 0) used |= std::uint64_t{1} << color[w];
        }
        // symmetry: never open more than one fresh color
        const int opened = *std::max_element(color.begin(), color.end()) + 1;
        const int limit = std::min<int>(static_cast<int>(k), opened + 1);
        for (int c = 0; c < limit; ++c) {
            if ((used >> c) & 1U) continue;
            color[pick] = c;
            if (place(done + 1)) return true;
        }
        color[pick] = -1;
        return false;
    };
    return place(0);
}

} // namespace

std::uint32_t clique_number(const SmallGraph& g) {
    check_small(g);
    std::uint32_t best = 0;
    if (g.vertex_count() > 0) max_clique(g, 0, all_vertices(g), 0, best);
    return best;
}

std::uint32_t chromatic_number_exact(const SmallGraph& g) {
    check_small(g);
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    for (std::uint32_t k = std::max<std::uint32_t>(clique_number(g), n ? 1 : 0); k < n; ++k) {
        if (colorable(g, k)) return k;
    }
    return n;
}

std::uint32_t lower_bound(const GeneratorSet& gens) {
    return chromatic_number_exact(core_subgraph(gens).graph) + 1;
}

std::uint32_t congruence_upper_bound(const GeneratorSet& gens) {
    for (std::uint32_t t = 2;; ++t) {
        if (std::none_of(gens.values().begin(), gens.values().end(), [t](std::uint32_t a) { return a % t == 0; })) {
            return t + 1;
        }
    }
}

namespace {

std::pair<std::uint32_t, std::string> upper_with_source(const GeneratorSet& gens) {
    const std::uint32_t cong = congruence_upper_bound(gens);
    const auto n = static_cast<std::uint32_t>(gens.size());
    if (n > 1 && 3 * n / 2 + 1 < cong) return {3 * n / 2 + 1, "floor(3n/2)+1"};
    return {cong, "congruence(t=" + std::to_string(cong - 1) + ")"};
}

} // namespace

std::uint32_t general_upper_bound(const GeneratorSet& gens) { return upper_with_source(gens).first; }

BoundInfo bounds(const GeneratorSet& gens) {
    const auto core = core_subgraph(gens);
    BoundInfo info;
    info.clique = clique_number(core.graph);
    info.core_chromatic = chromatic_number_exact(core.graph);
    info.lower = info.core_chromatic + 1;
    std::tie(info.upper, info.upper_source) = upper_with_source(gens);
    return info;
}

std::optional<FastPath> fast_path(const GeneratorSet& gens, const FastPathOptions& options) {
    const auto& a = gens.values();
    const auto n = static_cast<std::uint32_t>(a.size());
    if (n == 1) return FastPath{3, "intro/congruence"}; // gcd 1 forces S = {1}
    if (std::all_of(a.begin(), a.end(), [](std::uint32_t x) { return x % 2 == 1; })) {
        return FastPath{3, "all-odd"};
    }
    if (gens.max() < 2 * gens.min()) return FastPath{3, "a_n<2a_1"};
    if (n == 2) return FastPath{(a[0] == 1 && a[1] == 2) ? 4U : 3U, "pair-formula"};
    if (gens.max() == n) return FastPath{n + 2, "one-to-n"};
    const std::uint32_t r = a[0] % 3;
    if (r != 0 && std::all_of(a.begin(), a.end(), [r](std::uint32_t x) { return x % 3 == r; })) {
        return FastPath{3, "residue-mod-3"};
    }
    const auto info = bounds(gens);
    if (options.triple_formula && n == 3 && (info.core_chromatic == 3 || info.core_chromatic == 4)) {
        return FastPath{info.core_chromatic + 1, "triple-kappa"};
    }
    if (info.lower == info.upper) return FastPath{info.lower, "bounds-meet"};
    return std::nullopt;
}

std::optional<TilePair> fast_path_tiles(const GeneratorSet& gens, const FastPath& fp) {
    const auto& tag = fp.tag;
    if (tag == "intro/congruence" || tag == "all-odd") return cong_construction(gens, 1);
    if (tag == "a_n<2a_1") return two_a1_construction(gens);
    if (tag == "pair-formula") {
        if (fp.value == 4) return cong_construction(gens, 2);
        return pair_construction(gens.values()[0], gens.values()[1]);
    }
    if (tag == "one-to-n") return cong_construction(gens, static_cast<std::uint32_t>(gens.size()));
    if (tag == "residue-mod-3") return mod3_construction(gens);
    if (tag == "bounds-meet" && congruence_upper_bound(gens) == fp.value) {
        return cong_construction(gens, fp.value - 2);
    }
    return std::nullopt;
}

bool bpc(const GeneratorSet& gens, std::uint32_t colors, const BuildOptions& build, DecisionCache* cache) {
    if (cache) {
        if (auto hit = cache->lookup(gens, colors)) return *hit;
    }
    DecideOptions opts;
    opts.build = build;
    const bool answer = decide(coloring_sft(gens, Alphabet(colors)), opts).answer;
    if (cache) cache->store(gens, colors, answer);
    return answer;
}

namespace {

std::optional<TwoTilesWitness> witness_for(const GeneratorSet& gens, std::uint32_t value,
                                           const std::optional<FastPath>& fp, const BuildOptions& build) {
    if (fp) {
        if (auto tiles = fast_path_tiles(gens, *fp)) {
            if (tiles->colors() <= value && verify_tile_pair(tiles->c1, tiles->c2, gens, tiles->ell)) {
                return tiles_to_witness(*tiles, gens);
            }
        }
    }
    return extract_certificate(coloring_sft(gens, Alphabet(value)), build);
}

} // namespace

ChiResult chi(const GeneratorSet& gens, const ChiOptions& options) {
    ChiResult result;
    result.bounds = bounds(gens);
    const auto& info = result.bounds;

    std::optional<FastPath> fp;
    if (options.method != ChiMethod::BpcOnly) fp = fast_path(gens, options.fast_paths);

    if (options.method == ChiMethod::BoundsOnly) {
        result.method = fp ? fp->tag : "bounds";
        if (fp) result.value = fp->value;
        return result;
    }

    if (fp) {
        result.value = fp->value;
        result.method = fp->tag;
        if (options.verify_fast_paths) {
            const bool yes = bpc(gens, fp->value, options.build, options.cache);
            result.per_b_decisions[fp->value] = yes;
            bool below = false;
            if (fp->value - 1 >= info.lower) {
                below = bpc(gens, fp->value - 1, options.build, options.cache);
                result.per_b_decisions[fp->value - 1] = below;
            }
            if (!yes || below) {
                throw InternalError("fast path '" + fp->tag + "' claims chi(" + gens.to_string() +
                                    ") = " + std::to_string(fp->value) + " but BPC disagrees");
            }
        }
    } else {
        result.method = "bpc-loop";
        for (std::uint32_t b = info.lower; b <= info.upper; ++b) {
            const bool yes = bpc(gens, b, options.build, options.cache);
            result.per_b_decisions[b] = yes;
            if (yes) {
                result.value = b;
                break;
            }
        }
        if (!result.value) {
            throw InternalError("BPC found no coloring of " + gens.to_string() + " with up to " +
                                std::to_string(info.upper) + " colors, below the proven upper bound");
        }
    }

    if (options.want_witness) {
        result.witness = witness_for(gens, *result.value, fp, options.build);
    }
    return result;
}

std::string to_string(ChiMethod method) {
    switch (method) {
    case ChiMethod::Auto: return "auto";
    case ChiMethod::BpcOnly: return "bpc-only";
    case ChiMethod::BoundsOnly: return "bounds-only";
    }
    return "?";
}

ChiMethod parse_chi_method(const std::string& text) {
    if (text == "auto") return ChiMethod::Auto;
    if (text == "bpc-only" || text == "bpc") return ChiMethod::BpcOnly;
    if (text == "bounds-only" || text == "bounds") return ChiMethod::BoundsOnly;
    throw InvalidArgument("unknown method '" + text + "' (auto, bpc-only, bounds-only)");
}

} // namespace borelz
