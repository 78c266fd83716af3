#include "borelz/witness.hpp"

#include "borelz/errors.hpp"
#include "borelz/period.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace borelz {

TwoTilesGraph::TwoTilesGraph(std::uint32_t n, std::uint32_t p, std::uint32_t q) : n_(n), p_(p), q_(q) {
    if (n < 1 || n >= p || n >= q) {
        throw InvalidArgument("two-tiles graph needs 1 <= n < p, q; got n=" + std::to_string(n) +
                              " p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
    if (std::uint64_t{p} + q - n > std::numeric_limits<VertexId>::max()) {
        throw CapacityError("two-tiles graph too large", std::uint64_t{p} + q - n,
                            std::numeric_limits<VertexId>::max());
    }
}

std::vector<VertexId> TwoTilesGraph::cycle(int which) const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n_; ++v) out.push_back(v);
    if (which == 0) {
        for (VertexId v = n_; v < p_; ++v) out.push_back(v);
    } else {
        for (VertexId v = p_; v < p_ + q_ - n_; ++v) out.push_back(v);
    }
    return out;
}

std::optional<SuccessorStep> TwoTilesGraph::next_successor(VertexId v, std::uint64_t cursor) const {
    const VertexId last = p_ + q_ - n_ - 1;
    if (v + 1 < n_) {
        if (cursor == 0) return SuccessorStep{v + 1, 1};
        return std::nullopt;
    }
    if (v + 1 == n_) {
        // branch point: into the p-private arc, then the q-private arc
        if (cursor == 0) return SuccessorStep{n_, 1};
        if (cursor == 1) return SuccessorStep{p_, 2};
        return std::nullopt;
    }
    if (cursor != 0) return std::nullopt;
    if (v + 1 == p_ || v == last) return SuccessorStep{0, 1};
    return SuccessorStep{v + 1, 1};
}

// ---------------------------------------------------------------------------

namespace {

void check_labels(const TwoTilesGraph& gamma, std::span<const Symbol> labeling, const Sft& sft) {
    if (labeling.size() != gamma.vertex_count()) {
        throw InvalidArgument("labeling has " + std::to_string(labeling.size()) + " symbols, graph has " +
                              std::to_string(gamma.vertex_count()) + " vertices");
    }
    for (auto s : labeling) {
        if (!sft.alphabet().contains(s)) {
            throw InvalidArgument("label " + std::to_string(s) + " outside alphabet of size " +
                                  std::to_string(sft.alphabet().size()));
        }
    }
}

// Depth-first over simple paths; returns the first offending path, if any.
std::optional<std::vector<VertexId>> first_bad_path(const TwoTilesGraph& gamma, std::span<const Symbol> labeling,
                                                    const Sft& sft) {
    const std::uint32_t len = sft.window_len();
    const auto n = static_cast<VertexId>(gamma.vertex_count());
    std::vector<VertexId> path;
    std::vector<char> on_path(n, 0);
    Word window(len);

    struct Frame {
        VertexId v;
        std::uint64_t cursor;
    };
    for (VertexId start = 0; start < n; ++start) {
        std::vector<Frame> frames{{start, 0}};
        path.assign(1, start);
        on_path[start] = 1;
        while (!frames.empty()) {
            if (path.size() == len) {
                for (std::uint32_t i = 0; i < len; ++i) window[i] = labeling[path[i]];
                if (sft.is_forbidden(window)) return path;
            } else if (auto step = gamma.next_successor(frames.back().v, frames.back().cursor)) {
                frames.back().cursor = step->next_cursor;
                if (!on_path[step->target]) {
                    on_path[step->target] = 1;
                    path.push_back(step->target);
                    frames.push_back({step->target, 0});
                }
                continue;
            }
            on_path[frames.back().v] = 0;
            frames.pop_back();
            path.pop_back();
        }
    }
    return std::nullopt;
}

} // namespace

bool respects(const TwoTilesGraph& gamma, std::span<const Symbol> labeling, const Sft& sft) {
    check_labels(gamma, labeling, sft);
    return !first_bad_path(gamma, labeling, sft).has_value();
}

// ---------------------------------------------------------------------------

std::optional<Word> search_gamma_labeling(const Sft& sft, std::uint32_t n, std::uint32_t p, std::uint32_t q) {
    const std::uint32_t len = sft.window_len();
    if (len > n) {
        throw InvalidArgument("search needs n >= window length " + std::to_string(len));
    }
    if (std::gcd(p, q) != 1) {
        throw InvalidArgument("search needs gcd(p, q) = 1; got p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
    const TwoTilesGraph gamma(n, p, q);
    const auto count = static_cast<VertexId>(gamma.vertex_count());

    // With len <= n every window lies on one of the two cycles; bucket each
    // cyclic window under its largest vertex so it is checked exactly when its
    // last vertex gets labelled.
    std::vector<std::vector<std::vector<VertexId>>> due(count);
    for (int which = 0; which < 2; ++which) {
        const auto cyc = gamma.cycle(which);
        for (std::size_t start = 0; start < cyc.size(); ++start) {
            std::vector<VertexId> w(len);
            for (std::uint32_t i = 0; i < len; ++i) w[i] = cyc[(start + i) % cyc.size()];
            const VertexId key = *std::max_element(w.begin(), w.end());
            due[key].push_back(std::move(w));
        }
    }

    const std::uint32_t b = sft.alphabet().size();
    Word labels(count, 0);
    Word window(len);
    auto consistent = [&](VertexId v) {
        for (const auto& w : due[v]) {
            for (std::uint32_t i = 0; i < len; ++i) window[i] = labels[w[i]];
            if (sft.is_forbidden(window)) return false;
        }
        return true;
    };

    std::vector<Symbol> next(count, 0);
    VertexId v = 0;
    while (true) {
        bool placed = false;
        for (Symbol s = next[v]; s < b; ++s) {
            labels[v] = s;
            if (consistent(v)) {
                next[v] = s + 1;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (v + 1 == count) return labels;
            ++v;
            next[v] = 0;
            continue;
        }
        if (v == 0) return std::nullopt;
        --v;
    }
}

// ---------------------------------------------------------------------------

namespace {

// Distinct closed-walk lengths through a root, each with one realizing walk
// given as the vertex sequence after the root (ending back at the root).
struct WalkBasis {
    VertexId root;
    std::map<std::uint64_t, std::vector<VertexId>> walks;
};

WalkBasis closed_walks(const TransitionGraph& g, const SccDecomposition& sccs, std::uint32_t c) {
    const auto members = sccs.members(c);
    const VertexId root = *std::min_element(members.begin(), members.end());
    constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
    const auto n = g.vertex_count();

    // forward BFS tree from the root
    std::vector<std::uint32_t> dist_from(n, kUnseen);
    std::vector<VertexId> parent(n, 0);
    std::vector<VertexId> queue{root};
    dist_from[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for_each_successor(g, u, [&](VertexId w) {
            if (sccs.component_of(w) == c && dist_from[w] == kUnseen) {
                dist_from[w] = dist_from[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        });
    }
    // backward BFS: shortest route from every member back to the root
    std::vector<std::uint32_t> dist_to(n, kUnseen);
    std::vector<VertexId> toward(n, 0);
    queue.assign(1, root);
    dist_to[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        g.for_each_predecessor(u, [&](VertexId w) {
            if (sccs.component_of(w) == c && dist_to[w] == kUnseen) {
                dist_to[w] = dist_to[u] + 1;
                toward[w] = u;
                queue.push_back(w);
            }
        });
    }

    WalkBasis basis{root, {}};
    for (VertexId x : members) {
        for_each_successor(g, x, [&](VertexId y) {
            if (sccs.component_of(y) != c) return;
            const std::uint64_t len = std::uint64_t{dist_from[x]} + 1 + dist_to[y];
            if (basis.walks.count(len)) return;
            std::vector<VertexId> walk;
            for (VertexId v = x; v != root; v = parent[v]) walk.push_back(v);
            std::reverse(walk.begin(), walk.end());
            for (VertexId v = y; v != root; v = toward[v]) walk.push_back(v);
            walk.push_back(root);
            basis.walks.emplace(len, std::move(walk));
        });
    }
    return basis;
}

// Smallest L > floor with L and L+1 both sums of basis lengths. The
// lengths have gcd 1, so every integer from (min-1)(max-1) on is such a sum.
// Returns the decompositions of L and L+1 as lists of lengths.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> coprime_pair(
    const std::vector<std::uint64_t>& lengths, std::uint64_t floor) {
    std::uint64_t g = 0;
    for (auto l : lengths) g = std::gcd(g, l);
    if (g != 1) {
        throw InternalError("closed walk lengths through the root have gcd " + std::to_string(g));
    }
    const std::uint64_t lo = lengths.front();
    const std::uint64_t hi = lengths.back();
    const std::uint64_t cap = std::max(floor + 1, (lo - 1) * (hi - 1)) + 2;
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> last(cap + 1, kNone);
    last[0] = 0;
    for (std::uint64_t x = 1; x <= cap; ++x) {
        for (auto l : lengths) {
            if (l <= x && last[x - l] != kNone) {
                last[x] = l;
                break;
            }
        }
    }
    auto unroll = [&](std::uint64_t x) {
        std::vector<std::uint64_t> parts;
        while (x) {
            parts.push_back(last[x]);
            x -= last[x];
        }
        return parts;
    };
    for (std::uint64_t x = floor + 1; x + 1 <= cap; ++x) {
        if (last[x] != kNone && last[x + 1] != kNone) return {unroll(x), unroll(x + 1)};
    }
    throw InternalError("no consecutive realizable closed walk lengths below " + std::to_string(cap));
}

} // namespace

std::optional<TwoTilesWitness> extract_certificate(const Sft& sft, const BuildOptions& options) {
    const auto graph = TransitionGraph::build(sft, options);
    const auto sccs = strongly_connected_components(graph);
    const auto decision = decide(graph, sccs, true);
    if (!decision.answer) return std::nullopt;

    const auto basis = closed_walks(graph, sccs, *decision.witness_component);
    std::vector<std::uint64_t> lengths;
    for (const auto& [len, walk] : basis.walks) lengths.push_back(len);

    const std::uint32_t n = sft.window_len();
    auto [p_parts, q_parts] = coprime_pair(lengths, n);

    const Word root_word = graph.word(basis.root);
    auto arc = [&](const std::vector<std::uint64_t>& parts) {
        // last symbols of the composed walk, minus the final n that re-spell the root
        Word symbols;
        for (auto len : parts) {
            for (VertexId v : basis.walks.at(len)) symbols.push_back(graph.word(v).back());
        }
        symbols.resize(symbols.size() - n);
        return symbols;
    };
    Word p_arc = arc(p_parts);
    Word q_arc = arc(q_parts);
    const auto p = static_cast<std::uint32_t>(p_arc.size() + n);
    const auto q = static_cast<std::uint32_t>(q_arc.size() + n);

    Word labeling = root_word;
    labeling.insert(labeling.end(), p_arc.begin(), p_arc.end());
    labeling.insert(labeling.end(), q_arc.begin(), q_arc.end());
    return TwoTilesWitness{TwoTilesGraph(n, p, q), std::move(labeling), sft};
}

std::optional<std::string> two_tiles_failure(const TwoTilesWitness& witness) {
    const auto& gamma = witness.gamma;
    if (witness.sft.window_len() > gamma.n()) {
        return "window length " + std::to_string(witness.sft.window_len()) + " exceeds shared path length n=" +
               std::to_string(gamma.n());
    }
    if (gamma.n() >= gamma.p() || gamma.n() >= gamma.q()) {
        return "need n < p, q";
    }
    if (std::gcd(gamma.p(), gamma.q()) != 1) {
        return "gcd(p, q) = " + std::to_string(std::gcd(gamma.p(), gamma.q())) + ", not 1";
    }
    if (witness.labeling.size() != gamma.vertex_count()) {
        return "labeling has " + std::to_string(witness.labeling.size()) + " symbols, expected " +
               std::to_string(gamma.vertex_count());
    }
    for (std::size_t i = 0; i < witness.labeling.size(); ++i) {
        if (!witness.sft.alphabet().contains(witness.labeling[i])) {
            return "vertex " + std::to_string(i) + " has label " + std::to_string(witness.labeling[i]) +
                   " outside the alphabet";
        }
    }
    if (auto bad = first_bad_path(gamma, witness.labeling, witness.sft)) {
        std::string where;
        Word spelled;
        for (auto v : *bad) {
            where += (where.empty() ? "" : " ") + std::to_string(v);
            spelled.push_back(witness.labeling[v]);
        }
        return "path [" + where + "] spells forbidden word " +
               format_word(spelled, witness.sft.alphabet().size());
    }
    return std::nullopt;
}

bool verify_two_tiles(const TwoTilesWitness& witness) {
    return !two_tiles_failure(witness).has_value();
}

} // namespace borelz
