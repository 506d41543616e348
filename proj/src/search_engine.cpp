#include "theta/search_engine.hpp"

#include <algorithm>
#include <numeric>

#include "theta/ap_toolkit.hpp"
#include "theta/verifier.hpp"

namespace theta {

namespace {

struct PathCand {
    Label alpha;
    std::vector<Label> labels; // the 2r labels this alpha covers
};

struct PathSlot {
    int r = 0;
    std::vector<PathCand> cands;
};

} // namespace

SearchResult exists_two_coloring(const ThetaGraph& g, const SearchOptions& opts) {
    SearchResult res;
    if (!parity_check(g)) {
        res.reason = g.path_count() == 2 ? "cycle" : "parity";
        return res;
    }
    auto tgo = two_color_targets(g);
    if (!tgo) {
        res.reason = "targets not integral";
        return res;
    }
    const TwoColorTargets tg = *tgo;
    const Label m = tg.m, x = tg.x, y = tg.y, gap = tg.gap;
    const int s = tg.s;

    // all labels in [1, y-x] must sit on end-edges, of which there are 2s
    if (opts.enable_pruning && std::min(gap, m) > 2LL * s) {
        res.reason = "end-edge labels exceed end-edge count";
        return res;
    }

    // candidate u-end labels per path, normalized to alpha < beta_r;
    // the orientation phase decides which end faces u
    std::vector<PathSlot> slots;
    for (int a : g.lengths()) {
        PathSlot slot;
        slot.r = a / 2;
        Label r = slot.r;
        Label hi = m - (r - 1) * gap;
        hi = std::min(hi, (x - (r - 1) * gap - 1) / 2); // strict alpha < beta_r
        if (opts.enable_pruning && r >= 2)
            hi = std::min(hi, 2 * x - y - 1); // interior labels exceed the gap
        for (Label alpha = 1; alpha <= hi; ++alpha) {
            PathLabels pl = complete_path_labels(alpha, slot.r, x, y);
            std::vector<Label> labs = pl.interleaved();
            bool ok = true;
            {
                auto sorted = labs;
                std::sort(sorted.begin(), sorted.end());
                if (sorted.front() < 1 || sorted.back() > m ||
                    std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    ok = false;
            }
            if (ok && opts.enable_pruning && y % 2 == 0 && r >= 2) {
                // y/2 can only be an end-edge label
                Label half = y / 2;
                for (size_t i = 1; i + 1 < labs.size(); ++i)
                    if (labs[i] == half) {
                        ok = false;
                        break;
                    }
            }
            if (ok) slot.cands.push_back({alpha, std::move(labs)});
        }
        if (slot.cands.empty()) {
            res.reason = "a path has no feasible labeling";
            return res;
        }
        slots.push_back(std::move(slot));
    }
    // deterministic search order: paths by length descending
    std::stable_sort(slots.begin(), slots.end(),
                     [](const PathSlot& a, const PathSlot& b) { return a.r > b.r; });

    std::vector<char> used(m + 1, 0);
    std::vector<const PathCand*> chosen(slots.size(), nullptr);

    // orientation: pick alpha or beta_r per path so the u-sum equals y
    auto orient = [&](std::vector<char>& picks_rev) -> bool {
        size_t n = slots.size();
        std::vector<Label> alt(n), base(n);
        Label base_sum = 0;
        for (size_t i = 0; i < n; ++i) {
            Label r = slots[i].r;
            base[i] = chosen[i]->alpha;
            alt[i] = x - chosen[i]->alpha - (r - 1) * gap; // beta_r
            base_sum += base[i];
        }
        std::vector<Label> sufmin(n + 1, 0), sufmax(n + 1, 0);
        for (size_t i = n; i-- > 0;) {
            Label d = alt[i] - base[i];
            sufmin[i] = sufmin[i + 1] + std::min<Label>(d, 0);
            sufmax[i] = sufmax[i + 1] + std::max<Label>(d, 0);
        }
        picks_rev.assign(n, 0);
        auto dfs = [&](auto&& self, size_t i, Label rem) -> bool {
            if (i == n) return rem == 0;
            if (rem < sufmin[i] || rem > sufmax[i]) return false;
            picks_rev[i] = 1;
            if (self(self, i + 1, rem - (alt[i] - base[i]))) return true;
            picks_rev[i] = 0;
            return self(self, i + 1, rem);
        };
        return dfs(dfs, 0, y - base_sum);
    };

    auto count_orientations = [&]() -> long long {
        size_t n = slots.size();
        Label need = y;
        std::vector<Label> diffs(n);
        for (size_t i = 0; i < n; ++i) {
            Label r = slots[i].r;
            need -= chosen[i]->alpha;
            diffs[i] = x - chosen[i]->alpha - (r - 1) * gap - chosen[i]->alpha;
        }
        auto rec = [&](auto&& self, size_t i, Label rem) -> long long {
            if (i == n) return rem == 0 ? 1 : 0;
            return self(self, i + 1, rem) + self(self, i + 1, rem - diffs[i]);
        };
        return rec(rec, 0, need);
    };

    std::optional<EdgeLabeling> witness;
    long long count = 0;

    auto emit = [&]() -> bool {
        std::vector<char> rev;
        if (opts.count_all) count += count_orientations();
        if (witness) return !opts.count_all;
        if (!orient(rev)) return false;
        // rebuild in the normalized (sorted lengths) order
        std::vector<std::pair<int, std::vector<Label>>> built;
        for (size_t i = 0; i < slots.size(); ++i) {
            auto seq = complete_path_labels(chosen[i]->alpha, slots[i].r, x, y).interleaved();
            if (rev[i]) std::reverse(seq.begin(), seq.end());
            built.push_back({slots[i].r * 2, std::move(seq)});
        }
        std::stable_sort(built.begin(), built.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        EdgeLabeling f;
        for (auto& [len, seq] : built) f.per_path.push_back(std::move(seq));
        auto report = verify(g, f, std::make_pair(x, y));
        if (!report.valid_two_coloring())
            throw Error(ErrorCode::ConstructionBug, "search: witness failed verification");
        witness = std::move(f);
        return !opts.count_all;
    };

    auto cover = [&](auto&& self, size_t pi) -> bool {
        if (pi == slots.size()) return emit();
        Label lo = 1;
        if (pi > 0 && slots[pi - 1].r == slots[pi].r)
            lo = chosen[pi - 1]->alpha + 1; // equal lengths: ascending alpha
        for (const PathCand& c : slots[pi].cands) {
            if (c.alpha < lo) continue;
            bool clash = false;
            for (Label v : c.labels)
                if (used[v]) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (Label v : c.labels) used[v] = 1;
            chosen[pi] = &c;
            if (self(self, pi + 1)) return true;
            for (Label v : c.labels) used[v] = 0;
        }
        return false;
    };
    cover(cover, 0);

    res.witness = std::move(witness);
    res.witness_count = count;
    if (!res.witness) res.reason = "exhausted cover/orientation space";
    return res;
}

int brute_force_min_colors(const ThetaGraph& g, long long max_m) {
    if (g.size() > max_m)
        throw Error(ErrorCode::TooLarge, "brute_force_min_colors: m exceeds limit");
    const auto& lengths = g.lengths();
    const long long m = g.size();
    const int s = g.path_count();
    std::vector<std::vector<Label>> seq(s);
    for (int i = 0; i < s; ++i) seq[i].assign(lengths[i], 0);
    std::vector<char> used(m + 1, 0);
    int best = static_cast<int>(g.order());

    // flatten edge positions path by path
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < s; ++i)
        for (int e = 0; e < lengths[i]; ++e) pos.push_back({i, e});

    auto leaf_colors = [&]() -> int {
        std::vector<Label> cols;
        Label cu = 0, cv = 0;
        for (int i = 0; i < s; ++i) {
            cu += seq[i].front();
            cv += seq[i].back();
        }
        cols.push_back(cu);
        cols.push_back(cv);
        for (int i = 0; i < s; ++i)
            for (int e = 0; e + 1 < lengths[i]; ++e) cols.push_back(seq[i][e] + seq[i][e + 1]);
        // adjacency involving u, v
        for (int i = 0; i < s; ++i) {
            if (lengths[i] == 1) {
                if (cu == cv) return -1;
            } else {
                if (cu == seq[i][0] + seq[i][1]) return -1;
                int n = lengths[i];
                if (cv == seq[i][n - 2] + seq[i][n - 1]) return -1;
            }
        }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        return static_cast<int>(cols.size());
    };

    auto rec = [&](auto&& self, size_t k) -> void {
        if (best == 2) return;
        if (k == pos.size()) {
            int c = leaf_colors();
            if (c > 0 && c < best) best = c;
            return;
        }
        auto [i, e] = pos[k];
        for (Label v = 1; v <= m; ++v) {
            if (used[v]) continue;
            // consecutive internal vertices must differ once both sums exist
            if (e >= 2 && seq[i][e - 2] + seq[i][e - 1] == seq[i][e - 1] + v) continue;
            used[v] = 1;
            seq[i][e] = v;
            self(self, k + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return best;
}

std::vector<std::vector<int>> all_theta_lengths(long long max_m, bool even_only) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, long long rest, int minp) -> void {
        if (rest == 0) {
            if (acc.size() >= 2 && std::count(acc.begin(), acc.end(), 1) <= 1) {
                long long m = std::accumulate(acc.begin(), acc.end(), 0LL);
                if (m - static_cast<long long>(acc.size()) + 2 >= 3) out.push_back(acc);
            }
            return;
        }
        for (int p = minp; p <= rest; p += even_only ? 2 : 1) {
            acc.push_back(p);
            self(self, rest - p, p);
            acc.pop_back();
        }
    };
    for (long long m = 3; m <= max_m; ++m)
        rec(rec, m, even_only ? 2 : 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long long ma = std::accumulate(a.begin(), a.end(), 0LL);
        long long mb = std::accumulate(b.begin(), b.end(), 0LL);
        if (ma != mb) return ma < mb;
        return a < b;
    });
    return out;
}

CrossCheckReport cross_check(long long max_m) {
    CrossCheckReport rep;
    for (const auto& lengths : all_theta_lengths(max_m, true)) {
        ThetaGraph g = make_theta(lengths);
        CrossCheckReport::Row row;
        row.lengths = g.lengths();
        row.family_member = classify_family(g).two_chromatic();
        row.search_witness = exists_two_coloring(g).found();
        row.agree = row.family_member == row.search_witness;
        if (g.size() <= 9) row.brute_min_colors = brute_force_min_colors(g);
        if (row.brute_min_colors)
            row.agree = row.agree && ((*row.brute_min_colors == 2) == row.search_witness);
        if (!row.agree) rep.all_agree = false;
        if (row.search_witness) rep.positives.push_back(row.lengths);
        rep.rows.push_back(std::move(row));
    }
    // odd-length graphs at oracle scale: brute force vs the search gate
    for (const auto& lengths : all_theta_lengths(std::min<long long>(max_m, 9), false)) {
        if (std::all_of(lengths.begin(), lengths.end(), [](int a) { return a % 2 == 0; }))
            continue; // covered above
        ThetaGraph g = make_theta(lengths);
        CrossCheckReport::Row row;
        row.lengths = g.lengths();
        row.family_member = classify_family(g).two_chromatic();
        row.search_witness = exists_two_coloring(g).found();
        row.brute_min_colors = brute_force_min_colors(g);
        row.agree = ((*row.brute_min_colors == 2) == row.search_witness) &&
                    row.family_member == row.search_witness;
        if (!row.agree) rep.all_agree = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace theta
