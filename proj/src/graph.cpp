#include <algorithm>
#include <set>

#include "srliaison/graph.hpp"

namespace srl {

Graph circulant(int n, const std::vector<int>& connection) {
    if (n < 3) throw std::invalid_argument("circulant needs n >= 3");
    Graph g(n);
    for (int s : connection) {
        if (s < 1 || 2 * s > n) throw std::invalid_argument("connection element out of [1, n/2]");
        for (int i = 1; i <= n; ++i) {
            int j = (i - 1 + s) % n + 1;
            g.add_edge(i, j);
        }
    }
    return g;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const auto& [i, j] : g.edges())
        gens.push_back(Monomial::from_support(g.n(), (1u << (i - 1)) | (1u << (j - 1))));
    return MonomialIdeal(g.n(), std::move(gens));
}

MonomialIdeal nf_ideal(const Graph& g, const std::vector<int>& f_support) {
    if (f_support.empty()) throw std::invalid_argument("empty support");
    std::set<int> seen(f_support.begin(), f_support.end());
    if (seen.size() != f_support.size()) throw std::invalid_argument("repeated support vertex");
    uint32_t common = ~0u;
    for (int v : f_support) {
        if (v < 1 || v > g.n()) throw std::invalid_argument("support vertex out of range");
        common &= g.neighbours(v);
    }
    std::vector<Monomial> gens;
    for (int v = 1; v <= g.n(); ++v)
        if (common & (1u << (v - 1))) gens.push_back(Monomial::variable(g.n(), v - 1));
    return MonomialIdeal(g.n(), std::move(gens));
}

MonomialIdeal canonical_B(const Graph& g, const std::vector<int>& f_support) {
    return edge_ideal(g) + nf_ideal(g, f_support);
}

int max_support_bound(const Graph& g) {
    int d = 0;
    for (int v = 1; v <= g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> rotation_permutation(int n) {
    std::vector<int> p(n);
    for (int i = 1; i <= n; ++i) p[i - 1] = i % n + 1;
    return p;
}

std::vector<std::vector<int>> generate_group(const std::vector<std::vector<int>>& gens,
                                             size_t cap) {
    if (gens.empty()) return {};
    size_t n = gens[0].size();
    std::vector<int> id(n);
    for (size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i) + 1;
    std::set<std::vector<int>> group{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier) {
            for (const auto& g : gens) {
                if (g.size() != n) throw std::invalid_argument("permutation arity mismatch");
                std::vector<int> q(n);
                for (size_t i = 0; i < n; ++i) q[i] = g[p[i] - 1];
                if (group.insert(q).second) {
                    next.push_back(std::move(q));
                    if (group.size() > cap) throw std::invalid_argument("symmetry group too large");
                }
            }
        }
        frontier = std::move(next);
    }
    return {group.begin(), group.end()};
}

}  // namespace srl
