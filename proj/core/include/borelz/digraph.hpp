#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <vector>

namespace borelz {

using VertexId = std::uint32_t;

// One step of a successor scan: the target and the cursor to resume from.
struct SuccessorStep {
    VertexId target;
    std::uint64_t next_cursor;
};

// Minimal interface the SCC and period code needs. Successors are produced
// lazily through a resumable cursor (start at 0) so implicit graphs never
// have to materialize adjacency lists.
template <class G>
concept Digraph = requires(const G& g, VertexId v, std::uint64_t cursor) {
    { g.vertex_count() } -> std::convertible_to<std::size_t>;
    { g.next_successor(v, cursor) } -> std::same_as<std::optional<SuccessorStep>>;
};

template <Digraph G, class F>
void for_each_successor(const G& g, VertexId v, F&& f) {
    std::uint64_t cursor = 0;
    while (auto step = g.next_successor(v, cursor)) {
        f(step->target);
        cursor = step->next_cursor;
    }
}

// Explicit adjacency lists; used for synthetic graphs and the two-tiles graphs.
class AdjacencyDigraph {
public:
    AdjacencyDigraph() = default;
    explicit AdjacencyDigraph(std::size_t n) : out_(n) {}

    void add_edge(VertexId u, VertexId v) { out_.at(u).push_back(v); }

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept {
        std::size_t m = 0;
        for (const auto& row : out_) m += row.size();
        return m;
    }
    const std::vector<VertexId>& successors(VertexId v) const { return out_.at(v); }

    std::optional<SuccessorStep> next_successor(VertexId v, std::uint64_t cursor) const {
        const auto& row = out_[v];
        if (cursor >= row.size()) return std::nullopt;
        return SuccessorStep{row[cursor], cursor + 1};
    }

private:
    std::vector<std::vector<VertexId>> out_;
};

} // namespace borelz
