#ifndef THETA_AP_TOOLKIT_HPP
#define THETA_AP_TOOLKIT_HPP

#include <optional>
#include <vector>

#include "theta/errors.hpp"
#include "theta/theta_graph.hpp"

namespace theta {

// Arithmetic progression A_len(first; diff).
struct APSpec {
    Label first = 0;
    Label diff = 0;
    int len = 1;
};

std::vector<Label> ap_terms(const APSpec& spec);

// Interleave two equal-length sequences: odd positions from a, even from b.
std::vector<Label> diamond_interleave(const std::vector<Label>& a,
                                      const std::vector<Label>& b);

struct PairwiseSums {
    Label aligned = 0;                 // k-th of a + k-th of b, constant
    std::optional<Label> shifted;      // k-th of a + (k-1)-st of b; absent for len 1
};

// Requires a.diff == -b.diff and equal lengths.
PairwiseSums pairwise_sums(const APSpec& a, const APSpec& b);

// Exact term-set disjointness. Guaranteed true when 0 < |i1-i2| < |d| for
// equal |diff|; computed exactly in all cases.
bool ap_disjoint(const APSpec& a, const APSpec& b);

// The forced labeling of an even path whose interior colors alternate x,y:
// alpha_k = alpha1 + (k-1)(y-x), beta_k = x - alpha_k; path reads
// alpha_1, beta_1, ..., alpha_r, beta_r.
struct PathLabels {
    std::vector<Label> alphas;
    std::vector<Label> betas;
    std::vector<Label> interleaved() const;
};

PathLabels complete_path_labels(Label alpha1, int r, Label x, Label y);

// Subset of {1,3,...,2n-1} with prescribed sum, by the constructive
// case analysis: delta in [0,n^2] minus the two impossible values.
struct SubsetSelection {
    long long n = 0;
    Label delta = 0;
    std::vector<Label> chosen;
    // internals of the constructive algorithm, kept for traceability
    long long k = 0;
    Label kappa = 0;
    Label tau = 0;
};

SubsetSelection odd_subset_with_sum(long long n, Label delta);

// Subset of distinct signed odd integers with prescribed sum, deterministic:
// positives descending then negatives descending, include-first DFS with
// suffix-sum pruning; first solution wins. Fast path through
// odd_subset_with_sum when the positive part is a full odd range.
std::optional<std::vector<Label>> signed_subset_with_sum(
    const std::vector<Label>& available, Label delta);

} // namespace theta

#endif
