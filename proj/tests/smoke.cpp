#include <cassert>
#include <iostream>
#include "srliaison/groebner.hpp"
#include "srliaison/homology.hpp"
#include "srliaison/graph.hpp"
#include "srliaison/decomposability.hpp"

using namespace srl;

int main() {
    PolyContext ctx(4, Field::Q);
    // Example 5.5's N
    std::vector<Polynomial> N = {
        parse_polynomial("x1*x2-x1*x4", ctx),
        parse_polynomial("x3*x4-x3*x2", ctx),
        parse_polynomial("x1+x3", ctx)};
    Ideal In(ctx, N);
    auto G = groebner_basis(In);
    for (auto& g : G) std::cout << "GB: " << to_string(g) << "\n";
    assert(G.size() == 2);
    std::cout << "ht(N) = " << height(In) << "\n";
    assert(height(In) == 2);
    assert(normal_form(parse_polynomial("x1+x3", ctx), G).is_zero());

    // colon: ((x2x4):x2) = (x4)
    Ideal I24(ctx, {parse_polynomial("x2*x4", ctx)});
    Ideal q = quotient_by_poly(I24, parse_polynomial("x2", ctx));
    assert(ideal_equal(q, Ideal(ctx, {parse_polynomial("x4", ctx)})));
    assert(is_nzd(parse_polynomial("x1", ctx), I24));
    assert(!is_nzd(parse_polynomial("x2", ctx), I24));

    // 4-cycle complex: CM, VD; RP2 quick check
    auto c4 = SimplicialComplex::from_facets(4, {{1,2},{2,3},{3,4},{1,4}});
    assert(is_cohen_macaulay(c4, Field::Q));
    assert(is_vertex_decomposable(c4).verdict);
    auto sr = stanley_reisner(c4);
    assert(sr.gens().size() == 2);
    auto back = complex_of(sr, 4);
    assert(back.same_faces(c4));

    auto rp2 = complex_of(MonomialIdeal(6, {
        parse_monomial("x1*x2*x3",6), parse_monomial("x1*x2*x4",6),
        parse_monomial("x1*x3*x5",6), parse_monomial("x1*x4*x6",6),
        parse_monomial("x1*x5*x6",6), parse_monomial("x2*x3*x6",6),
        parse_monomial("x2*x4*x5",6), parse_monomial("x2*x5*x6",6),
        parse_monomial("x3*x4*x5",6), parse_monomial("x3*x4*x6",6)}), 6);
    assert(rp2.facets().size() == 10);
    assert(is_cohen_macaulay(rp2, Field::Q));
    assert(!is_cohen_macaulay(rp2, Field::GF2));
    assert(reduced_betti(rp2, Field::GF2, 1) == 1);
    assert(height(stanley_reisner(rp2).to_ideal(Field::Q)) == 3);
    assert(!is_weakly_vertex_decomposable(rp2, Field::Q).verdict);

    auto g16 = circulant(16, {1,4,8});
    assert(g16.edge_count() == 40);
    assert(max_support_bound(g16) == 5);
    std::cout << "smoke OK\n";
    return 0;
}
