#pragma once

#include "borelz/period.hpp"
#include "borelz/sft.hpp"
#include "borelz/witness.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace borelz {

// Simple undirected graph on at most 64 vertices, adjacency as bit rows.
struct SmallGraph {
    std::vector<std::uint64_t> adjacency;

    std::size_t vertex_count() const noexcept { return adjacency.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return (adjacency.at(u) >> v) & 1U; }
};

// Subgraph of the Cayley graph of Z induced by {0, a_1, ..., a_n}.
struct CoreSubgraph {
    std::vector<std::uint32_t> vertices; // 0, a_1, ..., a_n
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // by value, smaller first
    SmallGraph graph;
};

CoreSubgraph core_subgraph(const GeneratorSet& gens);

// Exact, by branch and bound. Throw InvalidArgument above 64 vertices.
std::uint32_t clique_number(const SmallGraph& g);
std::uint32_t chromatic_number_exact(const SmallGraph& g);

struct BoundInfo {
    std::uint32_t clique = 0;         // lambda_S
    std::uint32_t core_chromatic = 0; // kappa_S
    std::uint32_t lower = 0;          // kappa_S + 1
    std::uint32_t upper = 0;
    std::string upper_source;
};

std::uint32_t lower_bound(const GeneratorSet& gens);
// t+1 for the least t >= 2 dividing no generator.
std::uint32_t congruence_upper_bound(const GeneratorSet& gens);
// min(floor(3n/2)+1 for n > 1, congruence bound)
std::uint32_t general_upper_bound(const GeneratorSet& gens);
BoundInfo bounds(const GeneratorSet& gens);

struct FastPath {
    std::uint32_t value;
    std::string tag;
};

struct FastPathOptions {
    // The triple formula for kappa_S in {3,4} is published without proof;
    // off unless asked for.
    bool triple_formula = false;
};

std::optional<FastPath> fast_path(const GeneratorSet& gens, const FastPathOptions& options = {});

// Explicit tile pair for a fast-path value, when one of the constructions
// applies to this generator set.
std::optional<TilePair> fast_path_tiles(const GeneratorSet& gens, const FastPath& fp);

// Persistent memo of BPC answers keyed by (S, number of colors).
class DecisionCache {
public:
    virtual ~DecisionCache() = default;
    virtual std::optional<bool> lookup(const GeneratorSet& gens, std::uint32_t colors) = 0;
    virtual void store(const GeneratorSet& gens, std::uint32_t colors, bool answer) = 0;
};

enum class ChiMethod { Auto, BpcOnly, BoundsOnly };

struct ChiOptions {
    ChiMethod method = ChiMethod::Auto;
    FastPathOptions fast_paths;
    // Confirm a fast-path value with BPC: yes at the value, no just below it.
    bool verify_fast_paths = false;
    bool want_witness = false;
    BuildOptions build;
    DecisionCache* cache = nullptr;
};

struct ChiResult {
    std::optional<std::uint32_t> value; // unset only for an unresolved bounds-only query
    BoundInfo bounds;
    std::string method; // fast-path tag, "bpc-loop" or "bounds"
    std::map<std::uint32_t, bool> per_b_decisions;
    std::optional<TwoTilesWitness> witness;
};

// Is there a Borel proper coloring of G_S with `colors` colors?
bool bpc(const GeneratorSet& gens, std::uint32_t colors, const BuildOptions& build = {},
         DecisionCache* cache = nullptr);

// Borel chromatic number of the Schreier graph G_S.
ChiResult chi(const GeneratorSet& gens, const ChiOptions& options = {});

std::string to_string(ChiMethod method);
ChiMethod parse_chi_method(const std::string& text);

} // namespace borelz
