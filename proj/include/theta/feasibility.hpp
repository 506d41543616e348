#ifndef THETA_FEASIBILITY_HPP
#define THETA_FEASIBILITY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "theta/theta_graph.hpp"

namespace theta {

// The forced color pair for a hypothetical 2-coloring: u,v sit in the smaller
// bipartition class Y with color y; x = m+1, y = m(m+1)/(m-2s+4).
struct TwoColorTargets {
    long long m = 0;
    int s = 0;
    Label x = 0;
    Label y = 0;
    long long size_x = 0; // m/2
    long long size_y = 0; // m/2 - s + 2
    Label gap = 0;        // y - x
};

// true iff every length is even and s >= 3 (s=2 is a cycle).
bool parity_check(const ThetaGraph& g);

// Throws ParityFailed if parity_check fails; nullopt when y is not integral.
std::optional<TwoColorTargets> two_color_targets(const ThetaGraph& g);

enum class Family { K2S, F1, F2A, F2B, F3A, F3B, F4 };
enum class RefusalReason { OddLength, Cycle, K23OddS, NoFamily };

std::string to_string(Family f);
std::string to_string(RefusalReason r);

struct FamilyParams {
    int s = 0;
    int l = -1; // -1 when not applicable
    int t = -1;
};

struct FamilyMatch {
    Family family;
    FamilyParams params;
};

struct FamilyClassification {
    std::optional<FamilyMatch> primary;      // first match in fixed priority
    std::vector<FamilyMatch> all_matches;
    std::optional<RefusalReason> refusal;
    std::optional<TwoColorTargets> targets;  // set when two-chromatic

    bool two_chromatic() const { return primary.has_value(); }
};

// Membership test against the characterized families, solving (l,t) from the
// length multiset. Priority on overlap: K2S, F2B, F1, F2A, F3A, F3B, F4.
FamilyClassification classify_family(const ThetaGraph& g);

std::string classification_to_json(const FamilyClassification& c);

// Parameter candidates from the factorization
// (y+7-4s-t)(y+7-4s+t) = 8(s-2)(2s-3) with a <= 8 even.
struct DiophantineCandidate {
    int s = 0;
    long long a = 0;
    long long b = 0;
    long long t = 0;
    Label y = 0;
    Label x = 0;
    long long m = 0;
    int case_tag = 0; // a=8 -> 1, 6 -> 2, 4 -> 3, 2 -> 4
};

std::vector<DiophantineCandidate> diophantine_candidates(int s);

// Every family member with m <= max_m, exactly once, sorted by (m, s, lengths),
// each re-validated through classify_family.
std::vector<std::pair<ThetaGraph, FamilyClassification>>
enumerate_family_members(long long max_m);

} // namespace theta

#endif
