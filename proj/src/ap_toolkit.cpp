#include "theta/ap_toolkit.hpp"

#include <algorithm>
#include <cstdlib>

namespace theta {

std::vector<Label> ap_terms(const APSpec& spec) {
    if (spec.len < 1)
        throw Error(ErrorCode::OutOfRange, "ap_terms: len must be >= 1");
    std::vector<Label> out;
    out.reserve(spec.len);
    for (int k = 0; k < spec.len; ++k)
        out.push_back(spec.first + static_cast<Label>(k) * spec.diff);
    return out;
}

std::vector<Label> diamond_interleave(const std::vector<Label>& a,
                                      const std::vector<Label>& b) {
    if (a.size() != b.size() || a.empty())
        throw Error(ErrorCode::LengthMismatch, "diamond_interleave: unequal lengths");
    std::vector<Label> out;
    out.reserve(2 * a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out.push_back(a[i]);
        out.push_back(b[i]);
    }
    return out;
}

PairwiseSums pairwise_sums(const APSpec& a, const APSpec& b) {
    if (a.diff != -b.diff || a.len != b.len)
        throw Error(ErrorCode::SpecMismatch, "pairwise_sums: need equal lengths and opposite diffs");
    PairwiseSums s;
    s.aligned = a.first + b.first;
    if (a.len >= 2) s.shifted = s.aligned + a.diff;
    return s;
}

bool ap_disjoint(const APSpec& a, const APSpec& b) {
    // walk the shorter progression, membership test in the other
    const APSpec& p = (a.len <= b.len) ? a : b;
    const APSpec& q = (a.len <= b.len) ? b : a;
    for (int k = 0; k < p.len; ++k) {
        Label v = p.first + static_cast<Label>(k) * p.diff;
        if (q.diff == 0) {
            if (v == q.first) return false;
            continue;
        }
        Label off = v - q.first;
        if (off % q.diff != 0) continue;
        Label j = off / q.diff;
        if (j >= 0 && j < q.len) return false;
    }
    return true;
}

std::vector<Label> PathLabels::interleaved() const {
    return diamond_interleave(alphas, betas);
}

PathLabels complete_path_labels(Label alpha1, int r, Label x, Label y) {
    Label g = y - x;
    PathLabels out;
    out.alphas = ap_terms({alpha1, g, r});
    out.betas = ap_terms({x - alpha1, -g, r});
    return out;
}

SubsetSelection odd_subset_with_sum(long long n, Label delta) {
    if (n < 1)
        throw Error(ErrorCode::OutOfRange, "odd_subset_with_sum: n must be >= 1");
    if (delta < 0 || delta > n * n || delta == 2 || delta == n * n - 2)
        throw Error(ErrorCode::OutOfRange, "odd_subset_with_sum: delta outside [0,n^2] or excluded");
    SubsetSelection sel;
    sel.n = n;
    sel.delta = delta;
    if (delta == 0) return sel;
    if (delta <= 2 * n - 1) {
        if (delta % 2 == 1)
            sel.chosen = {delta};
        else
            sel.chosen = {1, delta - 1}; // even, >= 4 here
        return sel;
    }
    // largest k with kappa(k) = k(2n-k) <= delta; kappa increases for k <= n
    long long k = n;
    while (k * (2 * n - k) > delta) --k;
    sel.k = k;
    sel.kappa = k * (2 * n - k);
    sel.tau = delta - sel.kappa;
    Label tau = sel.tau;
    auto block = [&](long long from) {
        for (Label v = from; v <= 2 * n - 1; v += 2) sel.chosen.push_back(v);
    };
    if (tau == 0) {
        block(2 * n - 2 * k + 1);
    } else if (tau % 2 == 1) {
        block(2 * n - 2 * k + 1);
        sel.chosen.push_back(tau);
    } else if (tau >= 4) {
        block(2 * n - 2 * k + 1);
        sel.chosen.push_back(tau - 1);
        sel.chosen.push_back(1);
    } else {
        // tau == 2; by the choice of k this forces k <= n-2, and k = n-2
        // would mean delta = n^2-2 which is excluded, so k <= n-3 holds
        block(2 * n - 2 * k + 3);
        sel.chosen.push_back(2 * n - 2 * k - 1);
        sel.chosen.push_back(3);
        sel.chosen.push_back(1);
    }
    return sel;
}

std::optional<std::vector<Label>> signed_subset_with_sum(
    const std::vector<Label>& available, Label delta) {
    std::vector<Label> pos, neg;
    for (Label v : available) {
        if (v == 0 || v % 2 == 0)
            throw Error(ErrorCode::OutOfRange, "signed_subset_with_sum: elements must be odd");
        (v > 0 ? pos : neg).push_back(v);
    }
    std::sort(pos.begin(), pos.end(), std::greater<>());
    std::sort(neg.begin(), neg.end(), std::greater<>());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end() ||
        std::adjacent_find(neg.begin(), neg.end()) != neg.end())
        throw Error(ErrorCode::OutOfRange, "signed_subset_with_sum: duplicate element");

    // fast path: positive part a full odd range {1,3,...,2n-1} and delta admissible
    if (!pos.empty()) {
        bool full_range = true;
        for (size_t i = 0; i < pos.size(); ++i)
            if (pos[i] != 2 * static_cast<Label>(pos.size() - i) - 1) {
                full_range = false;
                break;
            }
        long long n = static_cast<long long>(pos.size());
        if (full_range && delta >= 0 && delta <= n * n && delta != 2 && delta != n * n - 2)
            return odd_subset_with_sum(n, delta).chosen;
    }

    std::vector<Label> order = pos;
    order.insert(order.end(), neg.begin(), neg.end());
    size_t n = order.size();
    std::vector<Label> sufmin(n + 1, 0), sufmax(n + 1, 0);
    for (size_t i = n; i-- > 0;) {
        sufmin[i] = sufmin[i + 1] + std::min<Label>(order[i], 0);
        sufmax[i] = sufmax[i + 1] + std::max<Label>(order[i], 0);
    }
    std::vector<Label> out;
    auto dfs = [&](auto&& self, size_t i, Label rem) -> bool {
        if (rem == 0) return true;
        if (i == n) return false;
        if (rem < sufmin[i] || rem > sufmax[i]) return false;
        out.push_back(order[i]);
        if (self(self, i + 1, rem - order[i])) return true;
        out.pop_back();
        return self(self, i + 1, rem);
    };
    if (dfs(dfs, 0, delta)) return out;
    return std::nullopt;
}

} // namespace theta
