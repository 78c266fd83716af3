#include "borelz/transition_graph.hpp"

#include "borelz/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace borelz {

namespace {

constexpr std::uint64_t kMaxVertexIds = std::numeric_limits<VertexId>::max();

std::uint64_t effective_budget(const BuildOptions& options) {
    if (options.vertex_budget == 0) {
        throw InvalidArgument("vertex budget must be at least 1");
    }
    return std::min(options.vertex_budget, kMaxVertexIds);
}

[[noreturn]] void over_budget(const Sft& sft, std::uint64_t required, std::uint64_t budget) {
    std::string need = required ? std::to_string(required) : "more than " + std::to_string(budget);
    throw CapacityError("transition graph for alphabet " + std::to_string(sft.alphabet().size()) + ", window " +
                            std::to_string(sft.window_len()) + " needs " + need + " vertices; budget is " +
                            std::to_string(budget),
                        required, budget);
}

// Codes of the complement of a sorted forbidden list.
std::vector<WordCode> complement_codes(const Sft& sft, std::uint64_t budget) {
    const auto forbidden = sft.forbidden();
    const std::uint64_t count = sft.code_space() - forbidden.size();
    if (count > budget) {
        over_budget(sft, count, budget);
    }
    std::vector<WordCode> out;
    out.reserve(count);
    auto next_bad = forbidden.begin();
    for (WordCode code = 0; code < sft.code_space(); ++code) {
        if (next_bad != forbidden.end() && *next_bad == code) {
            ++next_bad;
            continue;
        }
        out.push_back(code);
    }
    return out;
}

// Depth-first enumeration of proper windows of a coloring rule. A symbol is
// placed only if it differs from every symbol a generator's distance back, so
// dead prefixes are cut immediately. Emits codes in increasing order.
std::vector<WordCode> coloring_codes(const Sft& sft, std::uint64_t budget) {
    const auto& gens = sft.coloring_rule()->values();
    const std::uint32_t b = sft.alphabet().size();
    const std::uint32_t len = sft.window_len();

    std::vector<WordCode> out;
    std::vector<Symbol> digits(len, 0);
    std::vector<WordCode> prefix(len + 1, 0);
    std::uint32_t pos = 0;
    Symbol next = 0;
    while (true) {
        bool placed = false;
        for (Symbol s = next; s < b; ++s) {
            bool ok = true;
            for (auto a : gens) {
                if (a > pos) break;
                if (digits[pos - a] == s) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                digits[pos] = s;
                prefix[pos + 1] = prefix[pos] * b + s;
                placed = true;
                break;
            }
        }
        if (placed && pos + 1 == len) {
            out.push_back(prefix[len]);
            if (out.size() > budget) {
                over_budget(sft, 0, budget);
            }
            next = digits[pos] + 1;
            continue;
        }
        if (placed) {
            ++pos;
            next = 0;
            continue;
        }
        if (pos == 0) break;
        --pos;
        next = digits[pos] + 1;
    }
    return out;
}

} // namespace

TransitionGraph TransitionGraph::build(const Sft& sft, const BuildOptions& options) {
    const std::uint64_t budget = effective_budget(options);
    TransitionGraph g(sft);
    g.codes_ = sft.coloring_rule() ? coloring_codes(sft, budget) : complement_codes(sft, budget);
    g.shift_unit_ = *code_space(sft.alphabet().size(), sft.window_len() - 1);

    const auto n = static_cast<VertexId>(g.codes_.size());
    if (g.codes_.size() <= options.dense_threshold) {
        g.offsets_.assign(n + std::size_t{1}, 0);
        for (VertexId v = 0; v < n; ++v) {
            std::uint64_t cursor = 0;
            while (auto step = g.scan_successor(v, cursor)) {
                g.targets_.push_back(step->target);
                cursor = step->next_cursor;
            }
            g.offsets_[v + 1] = g.targets_.size();
        }
        g.edge_count_ = g.targets_.size();
    } else {
        for (VertexId v = 0; v < n; ++v) {
            std::uint64_t cursor = 0;
            while (auto step = g.scan_successor(v, cursor)) {
                ++g.edge_count_;
                cursor = step->next_cursor;
            }
        }
    }
    return g;
}

std::optional<VertexId> TransitionGraph::index_of(WordCode code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<VertexId>(it - codes_.begin());
}

Word TransitionGraph::word(VertexId v) const {
    return decode(code(v), sft_.alphabet().size(), sft_.window_len());
}

std::optional<SuccessorStep> TransitionGraph::scan_successor(VertexId v, std::uint64_t cursor) const {
    const std::uint32_t b = sft_.alphabet().size();
    if (cursor >= b) return std::nullopt;
    const WordCode base = (codes_[v] % shift_unit_) * b;
    auto it = std::lower_bound(codes_.begin(), codes_.end(), base + cursor);
    if (it == codes_.end() || *it >= base + b) return std::nullopt;
    return SuccessorStep{static_cast<VertexId>(it - codes_.begin()), *it - base + 1};
}

std::optional<SuccessorStep> TransitionGraph::next_successor(VertexId v, std::uint64_t cursor) const {
    if (offsets_.empty()) return scan_successor(v, cursor);
    const std::uint64_t pos = offsets_[v] + cursor;
    if (pos >= offsets_[v + 1]) return std::nullopt;
    return SuccessorStep{targets_[pos], cursor + 1};
}

std::vector<WordCode> TransitionGraph::out_neighbors(WordCode u) const {
    auto v = index_of(u);
    if (!v) {
        throw InvalidArgument("code " + std::to_string(u) + " is not a vertex of the transition graph");
    }
    std::vector<WordCode> out;
    for_each_successor(*this, *v, [&](VertexId w) { out.push_back(codes_[w]); });
    return out;
}

void TransitionGraph::write_dot(std::ostream& out) const {
    const auto b = sft_.alphabet().size();
    out << "digraph H {\n";
    for (VertexId v = 0; v < vertex_count(); ++v) {
        out << "  v" << v << " [label=\"" << format_word(word(v), b) << "\"];\n";
    }
    for (VertexId v = 0; v < vertex_count(); ++v) {
        for_each_successor(*this, v, [&](VertexId w) { out << "  v" << v << " -> v" << w << ";\n"; });
    }
    out << "}\n";
}

} // namespace borelz
