#pragma once

#include <cstdint>
#include <vector>

#include "srliaison/monomial_ideal.hpp"

namespace srl {

/// Subset of [n] as a bitmask; vertex v (1-based label) is bit v-1.
using VertexSet = uint32_t;

inline int vs_card(VertexSet s) { return __builtin_popcount(s); }
inline VertexSet vs_bit(int label) { return 1u << (label - 1); }
inline bool vs_subset(VertexSet a, VertexSet b) { return (a & b) == a; }
VertexSet vs_of(const std::vector<int>& labels);
std::vector<int> vs_labels(VertexSet s);

/// Simplicial complex on the label space [n], viewed on an ambient vertex
/// subset (links and deletions keep original labels, per the "complexes on
/// [n] \ {v}" convention). Stored by its facets (pairwise incomparable).
/// The void complex (no faces) and {∅} (facets == {∅}) are distinct values.
class SimplicialComplex {
  public:
    SimplicialComplex(int n, VertexSet ambient, std::vector<VertexSet> facets);

    /// Complex on ambient [n] from 1-based facet labels.
    static SimplicialComplex from_facets(int n, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex void_complex(int n, VertexSet ambient);
    static SimplicialComplex empty_complex(int n, VertexSet ambient);  // {∅}
    static SimplicialComplex simplex(int n);                           // full simplex on [n]

    int n() const { return n_; }
    VertexSet ambient() const { return ambient_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }
    /// Downward closure of a single facet (includes {∅}).
    bool is_simplex() const { return facets_.size() == 1; }

    /// dim({∅}) = -1; undefined (throws) for the void complex.
    int dim() const;
    bool is_pure() const;

    VertexSet vertices() const;  // union of facets
    bool has_face(VertexSet f) const;
    /// All faces, enumerated once and memoized, sorted ascending as masks.
    const std::vector<VertexSet>& faces() const;
    size_t face_count() const { return faces().size(); }

    SimplicialComplex link(int v) const;
    SimplicialComplex deletion(int v) const;
    SimplicialComplex link_face(VertexSet f) const;
    /// Cone with apex k; requires {k} not a face and k in [n].
    SimplicialComplex cone(int k) const;

    bool same_faces(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

  private:
    int n_;
    VertexSet ambient_;
    std::vector<VertexSet> facets_;
    struct FaceCache;
    std::shared_ptr<FaceCache> face_cache_;
};

/// Stanley-Reisner ideal: minimal nonfaces within the ambient set, as
/// squarefree monomials in the n-variable ring. The void complex gives the
/// unit ideal, {∅} gives (x_i : i in ambient).
MonomialIdeal stanley_reisner(const SimplicialComplex& dl);

/// Inverse direction, on ambient [n]: faces are the subsets whose monomial is
/// not in I. Requires all generators squarefree. The unit ideal gives the
/// void complex, the zero ideal the full simplex.
SimplicialComplex complex_of(const MonomialIdeal& I, int n);

}  // namespace srl
