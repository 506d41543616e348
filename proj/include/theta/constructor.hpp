#ifndef THETA_CONSTRUCTOR_HPP
#define THETA_CONSTRUCTOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "theta/ap_toolkit.hpp"
#include "theta/feasibility.hpp"
#include "theta/theta_graph.hpp"

namespace theta {

// Full provenance of a constructed labeling.
struct ConstructionTrace {
    FamilyMatch family;
    TwoColorTargets targets;

    struct PathSpec {
        int length = 0;
        Label alpha1 = 0;   // first term of the generating progression
        bool reversed = false;
        bool from_split = false;
    };
    std::vector<PathSpec> path_specs;

    struct SplitInfo {
        Label merged_alpha1 = 0;
        int split_after = 0; // edges in the first piece
        Label gamma1 = 0;    // junction label on the u side of the second piece
        Label gamma2 = 0;    // junction label on the v side of the first piece
    };
    std::optional<SplitInfo> split;

    Label delta = 0;
    std::vector<Label> correction_set; // B
    std::vector<Label> u_end_labels;
    std::optional<std::string> exception_table_id;
};

std::string trace_to_json(const ConstructionTrace& t);

struct Construction {
    EdgeLabeling labeling;
    ConstructionTrace trace;
};

struct ConstructResult {
    FamilyClassification classification;
    std::optional<Construction> construction; // absent iff NotTwo
};

// Dispatches on classify_family; output always self-verified against the
// (x,y) targets before returning (ConstructionBug otherwise).
ConstructResult construct(const ThetaGraph& g);

// Per-case entry points. Each throws WrongShape/BadParams on invalid
// parameters and returns a labeling aligned with the normalized ThetaGraph.
EdgeLabeling construct_case1(int l);            // theta(4l^[3l+2], (4l+2)^[l])
EdgeLabeling construct_case2a(int l);           // theta(2l-2, (4l-2)^[3l-1])
EdgeLabeling construct_case2b(const ThetaGraph& g); // the three fixed graphs
EdgeLabeling construct_case3a(int l, int t);
EdgeLabeling construct_case3b(int l, int t);
EdgeLabeling construct_case4(int s, int t);
EdgeLabeling construct_k2s(int s);              // even s >= 4

// Embedded fixture tables (verbatim labelings keyed by id).
struct ExceptionTable {
    std::string id;
    std::vector<int> lengths;
    std::vector<std::vector<Label>> rows;
    unsigned long long checksum; // FNV-1a over the row data
};

const std::vector<ExceptionTable>& exception_tables();
const ExceptionTable* find_exception_table(const std::string& id);
unsigned long long table_checksum(const std::vector<std::vector<Label>>& rows);

} // namespace theta

#endif
