#ifndef THETA_SEARCH_ENGINE_HPP
#define THETA_SEARCH_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "theta/feasibility.hpp"
#include "theta/theta_graph.hpp"

namespace theta {

struct SearchOptions {
    bool enable_pruning = true; // toggleable: pruning may not change verdicts
    bool count_all = false;     // count every (cover, orientation) witness
};

struct SearchResult {
    std::optional<EdgeLabeling> witness;
    std::string reason;          // set when there is no witness
    long long witness_count = 0; // populated in count_all mode

    bool found() const { return witness.has_value(); }
};

// Sound and complete decision procedure for "admits a local antimagic
// labeling with exactly 2 colors". Structure: parity gate, forced (x,y)
// targets, per-path labelings determined by their u-end label, exact cover
// over [1,m], then an orientation subset-sum fixing f+(u) = y.
SearchResult exists_two_coloring(const ThetaGraph& g, const SearchOptions& opts = {});

// Minimum color count over all m! bijections (permutation backtracking with
// adjacent-sum pruning). Exact chi_la for desk-size graphs.
int brute_force_min_colors(const ThetaGraph& g, long long max_m = 9);

struct CrossCheckReport {
    struct Row {
        std::vector<int> lengths;
        bool family_member = false;
        bool search_witness = false;
        std::optional<int> brute_min_colors; // only for m <= 9
        bool agree = false;
    };
    std::vector<Row> rows;
    bool all_agree = true;
    std::vector<std::vector<int>> positives;
};

// For every even theta graph with m <= max_m: search verdict vs classifier;
// for m <= 9 additionally vs the permutation oracle (all parities).
CrossCheckReport cross_check(long long max_m);

// All theta-graph length multisets with m <= max_m (at most one 1, order >= 3).
std::vector<std::vector<int>> all_theta_lengths(long long max_m, bool even_only);

} // namespace theta

#endif
