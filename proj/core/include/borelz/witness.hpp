#pragma once

#include "borelz/digraph.hpp"
#include "borelz/sft.hpp"
#include "borelz/transition_graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace borelz {

// Two directed cycles of lengths p and q glued along a common directed path
// of n vertices. Canonical vertex order: the shared path s_0..s_{n-1}, then
// the p-n vertices private to the p-cycle in cycle order, then the q-n
// vertices private to the q-cycle. s_{n-1} is the branch point, s_0 the merge.
class TwoTilesGraph {
public:
    TwoTilesGraph(std::uint32_t n, std::uint32_t p, std::uint32_t q);

    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t q() const noexcept { return q_; }
    std::size_t vertex_count() const noexcept { return std::size_t{p_} + q_ - n_; }

    // Vertices of the p-cycle (which = 0) or q-cycle (which = 1), starting at s_0.
    std::vector<VertexId> cycle(int which) const;

    std::optional<SuccessorStep> next_successor(VertexId v, std::uint64_t cursor) const;

private:
    std::uint32_t n_, p_, q_;
};

struct TwoTilesWitness {
    TwoTilesGraph gamma;
    Word labeling; // canonical vertex order
    Sft sft;
};

// True iff no directed path of window_len vertices spells a forbidden word.
// Simple paths only; they may run through the branch and merge points.
bool respects(const TwoTilesGraph& gamma, std::span<const Symbol> labeling, const Sft& sft);

// Exhaustive backtracking for a labeling of Gamma_{n,p,q} respecting `sft`.
// Requires window_len <= n < p, q and gcd(p, q) = 1.
std::optional<Word> search_gamma_labeling(const Sft& sft, std::uint32_t n, std::uint32_t p, std::uint32_t q);

// Builds a certificate from an aperiodic component of the window graph, or
// nullopt when no component has period 1.
std::optional<TwoTilesWitness> extract_certificate(const Sft& sft, const BuildOptions& options = {});

// Empty when the witness is valid, otherwise a description of the first failure.
std::optional<std::string> two_tiles_failure(const TwoTilesWitness& witness);
bool verify_two_tiles(const TwoTilesWitness& witness);

// Two finite S-colorations whose first and last `ell` symbols all agree;
// p = |c1| - ell and q = |c2| - ell are the closed lengths they realize.
struct TilePair {
    Word c1;
    Word c2;
    std::uint32_t ell = 0;
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::string construction;

    std::uint32_t colors() const;
};

// Requires S to avoid every multiple of m+1; yields m+2 colors.
TilePair cong_construction(const GeneratorSet& gens, std::uint32_t m);
// Requires a_n < 2 a_1; yields 3 colors.
TilePair two_a1_construction(const GeneratorSet& gens);
// Any pair other than (1,2); yields 3 colors.
TilePair pair_construction(std::uint32_t a1, std::uint32_t a2);
// Requires every generator congruent to 1 mod 3, or every one to 2 mod 3.
TilePair mod3_construction(const GeneratorSet& gens);

bool verify_s_coloration(std::span<const Symbol> word, const GeneratorSet& gens);
std::optional<std::string> tile_pair_failure(std::span<const Symbol> c1, std::span<const Symbol> c2,
                                             const GeneratorSet& gens, std::uint32_t ell);
bool verify_tile_pair(std::span<const Symbol> c1, std::span<const Symbol> c2, const GeneratorSet& gens,
                      std::uint32_t ell);

// Gamma_{ell,p,q} labeling read off a verified tile pair, over the coloring
// SFT with the pair's number of colors.
TwoTilesWitness tiles_to_witness(const TilePair& tiles, const GeneratorSet& gens);

} // namespace borelz
