#pragma once

#include "srliaison/graph.hpp"
#include "srliaison/liaison.hpp"

namespace srl {

/// One candidate linear form f = sum of the support variables, with the
/// canonical B = I(G) + N_f it forces (Theorem "B = I(G)+N_f") and the
/// necessary-condition filter results.
struct EdgeCandidate {
    std::vector<int> support;            // orbit representative
    std::vector<int> nf_vars;            // variables of N_f
    MonomialIdeal B;
    bool nf_nonempty = false;
    std::optional<bool> cm_match;        // CM(R/B) == CM(R/I(G))
    std::optional<bool> fisxi;           // Lemma 3.7 filter, singleton supports
    bool survives = false;
    std::optional<VertexBDL> witness;    // constructed for surviving singletons
};

/// Anchored candidate-B scan (the Prop 3.6 narrative): every nonempty subset
/// of N(anchor) is a potential variable set of B when the support contains
/// the anchor; realizable means some support T with anchor in T has N_f = Y.
struct AnchoredRow {
    int anchor = 0;
    std::vector<int> vars;                       // Y, possibly empty
    bool cm = false;                             // CM of R/(I(G)+Y); empty Y: CM of R/I(G)
    bool structurally_excluded = false;          // empty Y (N_f must be nonzero)
    std::vector<std::vector<int>> realizers;     // supports T (anchor in T) with N_f(T) == Y
    bool fisxi = false;                          // only meaningful when realizers == {{anchor}}
    std::string eliminated_by;                   // "", "nonempty", "cm", "realizability", "fisxi"
};

struct EdgeSearchResult {
    bool c_unmixed = false;
    bool c_cm = false;
    std::string structural_refutation;  // nonempty when the search short-circuits
    std::vector<EdgeCandidate> candidates;
    std::vector<size_t> survivors;
    std::vector<AnchoredRow> anchored;  // filled when symmetry generators are given
    bool refuted() const { return survivors.empty(); }
};

/// Enumerates supports of size 1..max_support_bound (orbit representatives
/// when symmetry generators are supplied), builds canonical B per support and
/// applies the necessary filters in order: N_f != 0, CM of R/B matching
/// CM of R/I(G), and Lemma 3.7 for singletons. Survivors are candidates; an
/// empty survivor list is a refutation of any BDL with monomial B.
EdgeSearchResult search_edge_bdl(const Graph& g, Field field,
                                 const std::vector<std::vector<int>>* symmetry_generators = nullptr);

}  // namespace srl
