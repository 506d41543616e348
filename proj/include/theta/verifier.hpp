#ifndef THETA_VERIFIER_HPP
#define THETA_VERIFIER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta/theta_graph.hpp"

namespace theta {

// Independent validity check: recomputes everything from the raw sequences,
// reports violations exhaustively rather than failing fast.
struct VerificationReport {
    bool is_bijection = false;
    std::vector<Label> missing;
    std::vector<Label> duplicates;

    bool is_local_antimagic = false;
    struct Violation {
        VertexRef a;
        VertexRef b;
        Label color;
    };
    std::vector<Violation> violations;

    std::vector<Label> palette; // sorted distinct colors
    int color_count = 0;
    std::optional<bool> matches_targets;

    bool valid() const { return is_bijection && is_local_antimagic; }
    bool valid_two_coloring() const { return valid() && color_count == 2; }
};

VerificationReport verify(const ThetaGraph& g, const EdgeLabeling& f,
                          std::optional<std::pair<Label, Label>> expected = {});

std::string report_to_json(const VerificationReport& r);

} // namespace theta

#endif
