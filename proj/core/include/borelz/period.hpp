#pragma once

#include "borelz/digraph.hpp"
#include "borelz/errors.hpp"
#include "borelz/sft.hpp"
#include "borelz/transition_graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

namespace borelz {

// Period 0 stands for "no directed cycle in the component".
using Period = std::uint64_t;

struct SccInfo {
    std::uint32_t id;
    std::span<const VertexId> members;
    std::uint64_t internal_edge_count;
    Period period;
};

// Partition of a digraph into strongly connected components, stored flat:
// members of component c are order[offsets[c] .. offsets[c+1]).
class SccDecomposition {
public:
    std::size_t component_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t vertex_count() const noexcept { return component_of_.size(); }
    std::uint32_t component_of(VertexId v) const { return component_of_.at(v); }

    std::span<const VertexId> members(std::uint32_t c) const {
        return std::span<const VertexId>(order_).subspan(offsets_.at(c), offsets_.at(c + 1) - offsets_[c]);
    }
    std::uint64_t internal_edge_count(std::uint32_t c) const { return internal_edges_.at(c); }

    // Period left at 0; fill it in with period().
    SccInfo info(std::uint32_t c) const { return SccInfo{c, members(c), internal_edge_count(c), 0}; }

    template <Digraph G>
    friend SccDecomposition strongly_connected_components(const G& g);

private:
    std::vector<std::uint32_t> component_of_;
    std::vector<VertexId> order_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint64_t> internal_edges_;
};

// Tarjan's single-pass lowlink algorithm with an explicit frame stack, so
// deep graphs cannot overflow the call stack. Linear in |V| + |E|.
template <Digraph G>
SccDecomposition strongly_connected_components(const G& g) {
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const auto n = static_cast<VertexId>(g.vertex_count());

    SccDecomposition out;
    out.component_of_.assign(n, kUnvisited);
    out.order_.reserve(n);
    out.offsets_.push_back(0);

    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<VertexId> stack;

    struct Frame {
        VertexId v;
        std::uint64_t cursor;
    };
    std::vector<Frame> frames;
    std::uint32_t counter = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);

        while (!frames.empty()) {
            Frame& f = frames.back();
            if (auto step = g.next_successor(f.v, f.cursor)) {
                f.cursor = step->next_cursor;
                VertexId w = step->target;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    frames.push_back({w, 0});
                } else if (out.component_of_[w] == kUnvisited) {
                    // w still on the stack
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }

            VertexId v = f.v;
            frames.pop_back();
            if (!frames.empty()) {
                VertexId parent = frames.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                const auto c = static_cast<std::uint32_t>(out.offsets_.size() - 1);
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    out.component_of_[w] = c;
                    out.order_.push_back(w);
                } while (w != v);
                out.offsets_.push_back(out.order_.size());
            }
        }
    }

    out.internal_edges_.assign(out.component_count(), 0);
    for (VertexId v = 0; v < n; ++v) {
        const auto c = out.component_of_[v];
        for_each_successor(g, v, [&](VertexId w) {
            if (out.component_of_[w] == c) ++out.internal_edges_[c];
        });
    }
    return out;
}

// gcd of all directed cycle lengths inside component `c`. BFS levels from
// any member; every internal edge u->v contributes level(u) + 1 - level(v),
// and the gcd of those contributions equals the gcd of the cycle lengths.
template <Digraph G>
Period period(const G& g, const SccDecomposition& sccs, std::uint32_t c) {
    if (sccs.vertex_count() != g.vertex_count() || c >= sccs.component_count()) {
        throw InvalidArgument("component " + std::to_string(c) + " does not belong to this graph");
    }
    if (sccs.internal_edge_count(c) == 0) return 0;
    const auto members = sccs.members(c);
    if (members.size() == 1) return 1; // only a self-loop can be internal

    // levels indexed by position in the sorted member list, so the scratch
    // space is proportional to the component, not the graph
    std::vector<VertexId> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    auto local = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };

    constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> level(sorted.size(), kUnseen);
    std::vector<VertexId> queue{members.front()};
    level[local(members.front())] = 0;
    Period gcd = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        const std::uint64_t next_level = std::uint64_t{level[local(u)]} + 1;
        for_each_successor(g, u, [&](VertexId w) {
            if (sccs.component_of(w) != c) return;
            auto& lw = level[local(w)];
            if (lw == kUnseen) {
                lw = static_cast<std::uint32_t>(next_level);
                queue.push_back(w);
            } else {
                gcd = std::gcd(gcd, next_level > lw ? next_level - lw : lw - next_level);
            }
        });
        if (gcd == 1) break;
    }
    return gcd;
}

struct GraphStats {
    std::uint64_t code_space = 0;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t components = 0;
};

struct SccSummary {
    std::uint32_t id;
    std::uint64_t size;
    std::uint64_t internal_edges;
    std::optional<Period> period; // unset when the scan stopped before it
};

struct Decision {
    bool answer = false;
    std::optional<std::uint32_t> witness_component;
    GraphStats stats;
    std::vector<SccSummary> table;
};

struct DecideOptions {
    BuildOptions build;
    // Stop at the first aperiodic component instead of filling the whole table.
    bool short_circuit = true;
};

// Whether some strongly connected component of the window graph has period 1,
// i.e. whether the SFT admits a Borel (equivalently continuous) equivariant
// image of the free part of the Bernoulli shift.
Decision decide(const Sft& sft, const DecideOptions& options = {});
Decision decide(const TransitionGraph& graph, const SccDecomposition& sccs, bool short_circuit = true);

} // namespace borelz
