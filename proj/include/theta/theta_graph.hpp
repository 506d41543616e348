#ifndef THETA_THETA_GRAPH_HPP
#define THETA_THETA_GRAPH_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "theta/errors.hpp"

namespace theta {

using Label = long long;

// An s-bridge graph: s internally disjoint (u,v)-paths with edge counts
// a_1 <= a_2 <= ... <= a_s. Lengths are normalized (sorted) on construction;
// original input order is not kept.
class ThetaGraph {
public:
    const std::vector<int>& lengths() const noexcept { return lengths_; }
    int path_count() const noexcept { return static_cast<int>(lengths_.size()); }
    long long size() const noexcept { return m_; }                  // edge count
    long long order() const noexcept { return m_ - path_count() + 2; }

    bool operator==(const ThetaGraph& o) const noexcept { return lengths_ == o.lengths_; }
    bool operator<(const ThetaGraph& o) const noexcept { return lengths_ < o.lengths_; }

    friend ThetaGraph make_theta(std::vector<int> lengths);

private:
    ThetaGraph() = default;
    std::vector<int> lengths_;
    long long m_ = 0;
};

ThetaGraph make_theta(std::vector<int> lengths);

// Compact display, e.g. "theta(2,6^[5])".
std::string to_string(const ThetaGraph& g);

struct VertexRef {
    enum class Kind { U, V, Internal };
    Kind kind = Kind::U;
    int path = -1; // 0-based, valid for Internal
    int pos = 0;   // 1..a_i-1 counted from u, valid for Internal

    static VertexRef u() { return {Kind::U, -1, 0}; }
    static VertexRef v() { return {Kind::V, -1, 0}; }
    static VertexRef internal(int path, int pos) { return {Kind::Internal, path, pos}; }

    friend bool operator==(const VertexRef& a, const VertexRef& b) {
        return a.kind == b.kind && a.path == b.path && a.pos == b.pos;
    }
    friend bool operator<(const VertexRef& a, const VertexRef& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.path != b.path) return a.path < b.path;
        return a.pos < b.pos;
    }
};

std::string to_string(const VertexRef& v);

// Per-path ordered label sequences, read from the u-end to the v-end.
struct EdgeLabeling {
    std::vector<std::vector<Label>> per_path;

    // Reversing a path is an explicit operation; sequence order stays u->v.
    void reverse_path(int i);
};

// Induced vertex colors (sums of incident labels). Does not require f to be
// a bijection; only the shape must match g.
struct InducedColoring {
    Label u = 0;
    Label v = 0;
    std::vector<std::vector<Label>> internal; // internal[i][p-1], p in 1..a_i-1
    std::set<Label> palette;
    int count = 0;

    Label color_of(const VertexRef& ref) const;
};

InducedColoring induced_coloring(const ThetaGraph& g, const EdgeLabeling& f);

// JSON wire format: {"lengths":[...],"paths":[[...],...]} with fixed field order.
std::string labeling_to_json(const ThetaGraph& g, const EdgeLabeling& f);
std::pair<ThetaGraph, EdgeLabeling> labeling_from_json(const std::string& text);

// DOT export; vertices named "u", "v", "p{i}_{k}".
std::string to_dot(const ThetaGraph& g, const EdgeLabeling* f = nullptr);

} // namespace theta

#endif
