#include "srliaison/instances.hpp"

namespace srl {
namespace instances {

namespace {
MonomialIdeal from_triples(const std::vector<std::vector<int>>& triples) {
    std::vector<Monomial> gens;
    for (const auto& t : triples) {
        uint32_t m = 0;
        for (int v : t) m |= 1u << (v - 1);
        gens.push_back(Monomial::from_support(6, m));
    }
    return MonomialIdeal(6, std::move(gens));
}
}  // namespace

MonomialIdeal rp2_ideal() {
    return from_triples({{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
                         {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

MonomialIdeal six_vertex_ideal() {
    return from_triples({{2, 3, 4}, {1, 3, 5}, {2, 3, 5}, {1, 4, 5}, {3, 4, 5},
                         {1, 2, 6}, {2, 3, 6}, {1, 4, 6}, {2, 4, 6}, {1, 5, 6}});
}

Graph circulant16() { return circulant(16, {1, 4, 8}); }

Graph matching4() {
    Graph g(4);
    g.add_edge(1, 3);
    g.add_edge(2, 4);
    return g;
}

}  // namespace instances
}  // namespace srl
