#include "borelz/period.hpp"

namespace borelz {

Decision decide(const TransitionGraph& graph, const SccDecomposition& sccs, bool short_circuit) {
    Decision d;
    d.stats.code_space = graph.sft().code_space();
    d.stats.vertices = graph.vertex_count();
    d.stats.edges = graph.edge_count();
    d.stats.components = sccs.component_count();

    d.table.reserve(sccs.component_count());
    for (std::uint32_t c = 0; c < sccs.component_count(); ++c) {
        d.table.push_back({c, sccs.members(c).size(), sccs.internal_edge_count(c), std::nullopt});
    }
    for (auto& row : d.table) {
        if (d.answer && short_circuit) break;
        row.period = period(graph, sccs, row.id);
        if (*row.period == 1 && !d.answer) {
            d.answer = true;
            d.witness_component = row.id;
        }
    }
    return d;
}

Decision decide(const Sft& sft, const DecideOptions& options) {
    const auto graph = TransitionGraph::build(sft, options.build);
    const auto sccs = strongly_connected_components(graph);
    return decide(graph, sccs, options.short_circuit);
}

} // namespace borelz
