#pragma once

#include <set>
#include <utility>
#include <vector>

#include "srliaison/monomial_ideal.hpp"

namespace srl {

/// Finite simple graph on [n]; no loops, no multi-edges.
class Graph {
  public:
    explicit Graph(int n) : n_(n) {
        if (n < 1 || n > 32) throw std::invalid_argument("vertex count out of range");
    }

    int n() const { return n_; }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }
    size_t edge_count() const { return edges_.size(); }

    void add_edge(int i, int j) {
        if (i == j) throw std::invalid_argument("loops are not allowed");
        if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("vertex out of range");
        edges_.insert({std::min(i, j), std::max(i, j)});
    }

    bool adjacent(int i, int j) const {
        return edges_.count({std::min(i, j), std::max(i, j)}) > 0;
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& [a, b] : edges_)
            if (a == v || b == v) ++d;
        return d;
    }

    /// Neighbours of v as a bitmask (vertex w -> bit w-1).
    uint32_t neighbours(int v) const {
        uint32_t m = 0;
        for (const auto& [a, b] : edges_) {
            if (a == v) m |= 1u << (b - 1);
            if (b == v) m |= 1u << (a - 1);
        }
        return m;
    }

  private:
    int n_;
    std::set<std::pair<int, int>> edges_;
};

/// Circulant graph C_n(S): i ~ j iff (i-j) mod n in S or -(i-j) mod n in S.
/// Requires n >= 3 and S within [1, n/2].
Graph circulant(int n, const std::vector<int>& connection);

/// Edge ideal (x_i x_j : {i,j} an edge).
MonomialIdeal edge_ideal(const Graph& g);

/// N_f = (x_j : j a common neighbour of every vertex in the support).
/// Support vertices must be distinct.
MonomialIdeal nf_ideal(const Graph& g, const std::vector<int>& f_support);

/// I(G) + N_f with minimal generators recomputed.
MonomialIdeal canonical_B(const Graph& g, const std::vector<int>& f_support);

/// Max vertex degree; upper bound for the support size of a BDL linear form.
int max_support_bound(const Graph& g);

/// The rotation i -> i mod n + 1 as a permutation (1-based images).
std::vector<int> rotation_permutation(int n);

/// Closure of a generator list under composition; throws if larger than cap.
std::vector<std::vector<int>> generate_group(const std::vector<std::vector<int>>& gens,
                                             size_t cap = 1 << 20);

}  // namespace srl
