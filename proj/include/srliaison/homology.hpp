#pragma once

#include "srliaison/simplicial.hpp"

namespace srl {

/// Face counts and boundary ranks of the (reduced) simplicial chain complex,
/// enough to read off every reduced Betti number.
struct ChainRanks {
    Field field;
    std::vector<size_t> face_counts;     // index i+1 holds # i-faces, starting at i = -1
    std::vector<int> boundary_ranks;     // index i+1 holds rank of d_i, d_{-1} = 0
    int dim = -1;

    /// b~_i = nullity(d_i) - rank(d_{i+1}); 0 outside [-1, dim].
    int reduced_betti(int i) const;
};

ChainRanks chain_ranks(const SimplicialComplex& dl, Field field);

/// Rank of the i-th reduced homology over the field; 0 for i out of range.
int reduced_betti(const SimplicialComplex& dl, Field field, int i);

/// Reisner's criterion: every face link (including the link of ∅) has
/// vanishing reduced homology below its top dimension. Throws on void input.
bool is_cohen_macaulay(const SimplicialComplex& dl, Field field);

/// Cohen-Macaulayness of the quotient by a squarefree monomial ideal
/// (degree-1 generators permitted; they restrict the vertex set).
bool is_cm_quotient(const MonomialIdeal& I, Field field);

}  // namespace srl
