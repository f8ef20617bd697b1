#pragma once

#include <memory>
#include <optional>
#include <string>

#include "srliaison/homology.hpp"

namespace srl {

/// Witness tree for a decomposability verdict. A positive verdict's chain
/// ends at a simplex or {∅}; a negative one records, per candidate vertex,
/// which required condition failed. Branches resolved from the memo table
/// appear as kind "memo".
struct DecompositionNode {
    std::string kind;  // "simplex", "empty", "shed", "fail", "memo", "impure"
    int vertex = 0;    // chosen (weak) shedding vertex, when kind == "shed"
    bool dim_condition = false;  // dim(lk) == dim(del) - 1 (informational)
    std::vector<std::pair<int, std::string>> failures;  // per-vertex failure reasons
    std::shared_ptr<DecompositionNode> link_branch;
    std::shared_ptr<DecompositionNode> deletion_branch;
};

struct DecompositionTrace {
    bool verdict = false;
    std::shared_ptr<DecompositionNode> root;
};

/// Vertex decomposability per the recursive definition (purity checked at
/// entry; verdicts memoized on the label-compressed canonical facet form).
DecompositionTrace is_vertex_decomposable(const SimplicialComplex& dl);

/// Weak vertex decomposability: some vertex with weakly decomposable link and
/// Cohen-Macaulay deletion (over the given field).
DecompositionTrace is_weakly_vertex_decomposable(const SimplicialComplex& dl, Field field);

}  // namespace srl
