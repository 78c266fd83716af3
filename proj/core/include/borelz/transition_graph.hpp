#pragma once

#include "borelz/digraph.hpp"
#include "borelz/sft.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace borelz {

struct BuildOptions {
    // Maximum number of vertices (allowed windows) the engine will hold.
    std::uint64_t vertex_budget = std::uint64_t{1} << 27;
    // Graphs with at most this many vertices get a cached CSR adjacency;
    // larger ones compute successors from the shift formula on each query.
    std::uint64_t dense_threshold = std::uint64_t{1} << 22;
};

// Window graph of an SFT: one vertex per allowed window of length L, an edge
// u -> v whenever the last L-1 symbols of u are the first L-1 symbols of v.
// Vertices are numbered by increasing code.
class TransitionGraph {
public:
    static TransitionGraph build(const Sft& sft, const BuildOptions& options = {});

    const Sft& sft() const noexcept { return sft_; }
    std::size_t vertex_count() const noexcept { return codes_.size(); }
    std::uint64_t edge_count() const noexcept { return edge_count_; }
    bool dense() const noexcept { return !offsets_.empty(); }

    WordCode code(VertexId v) const { return codes_.at(v); }
    const std::vector<WordCode>& codes() const noexcept { return codes_; }
    std::optional<VertexId> index_of(WordCode code) const;
    Word word(VertexId v) const;

    std::optional<SuccessorStep> next_successor(VertexId v, std::uint64_t cursor) const;

    template <class F>
    void for_each_predecessor(VertexId v, F&& f) const {
        WordCode head = codes_[v] / sft_.alphabet().size();
        for (std::uint32_t s = 0; s < sft_.alphabet().size(); ++s) {
            if (auto u = index_of(s * shift_unit_ + head)) f(*u);
        }
    }

    // Codes of the out-neighbors of `u`; throws InvalidArgument if u is not a vertex.
    std::vector<WordCode> out_neighbors(WordCode u) const;

    // Graphviz export, vertices labelled by their decoded windows.
    void write_dot(std::ostream& out) const;

private:
    explicit TransitionGraph(const Sft& sft) : sft_(sft) {}

    std::optional<SuccessorStep> scan_successor(VertexId v, std::uint64_t cursor) const;

    Sft sft_;
    std::vector<WordCode> codes_;
    // b^(L-1): weight of the leading symbol of a window
    std::uint64_t shift_unit_ = 1;
    std::uint64_t edge_count_ = 0;
    std::vector<std::uint64_t> offsets_;
    std::vector<VertexId> targets_;
};

} // namespace borelz
