#include "srliaison/biliaison.hpp"

namespace srl {

BiliaisonVerdict verify_biliaison(const BiliaisonWitness& w, Field homology_field) {
    const PolyContext& ctx = w.I.ctx();
    require_same_context(ctx, w.J.ctx());
    require_same_context(ctx, w.N.ctx());
    require_same_context(ctx, w.a.ctx());
    require_same_context(ctx, w.x.ctx());
    if (w.a.is_zero() || w.x.is_zero())
        throw std::invalid_argument("verify_biliaison: a and x must be nonzero");

    BiliaisonVerdict out;
    out.a_in_j = ideal_contains(w.J, w.a) ? ConditionResult::pass()
                                          : ConditionResult::fail("a is not in J");
    out.a_nzd_on_n = is_nzd(w.a, w.N)
                         ? ConditionResult::pass()
                         : ConditionResult::fail("a is a zerodivisor on S/N");
    {
        int hi = height(w.I), hj = height(w.J), hn = height(w.N);
        std::string hs = "ht(I)=" + std::to_string(hi) + ", ht(J)=" + std::to_string(hj) +
                         ", ht(N)=" + std::to_string(hn);
        out.heights = (hi == hj && hi == hn + 1) ? ConditionResult::pass(hs)
                                                 : ConditionResult::fail(hs);
    }
    out.n_inside = (ideal_contains(w.I, w.N) && ideal_contains(w.J, w.N))
                       ? ConditionResult::pass()
                       : ConditionResult::fail("N is not contained in I ∩ J");
    out.preconditions_ok = out.a_in_j.ok() && out.a_nzd_on_n.ok() && out.heights.ok() &&
                           out.n_inside.ok();

    out.ell = w.x.degree() - w.a.degree();

    Ideal xJN = poly_times_ideal_plus(w.x, w.J, w.N);
    Ideal aIN = poly_times_ideal_plus(w.a, w.I, w.N);
    out.equality = ideal_equal(xJN, aIN)
                       ? ConditionResult::pass("x*J + N == a*I + N")
                       : ConditionResult::fail("x*J + N != a*I + N");
    out.L = aIN;
    out.l_monomial = as_monomial_ideal(aIN).has_value();

    if (out.preconditions_ok && out.equality.ok()) {
        out.l_bdl_of_i_on_n = verify_bdl(BDLWitness(aIN, w.a, w.I, w.N), homology_field);
        out.l_bdl_of_j_on_n = verify_bdl(BDLWitness(xJN, w.x, w.J, w.N), homology_field);
    }

    if (auto r = exact_divide(w.x, w.a)) {
        out.r = *r;
        Ideal rJN = poly_times_ideal_plus(*r, w.J, w.N);
        out.direct_equation = ideal_equal(w.I, rJN)
                                  ? ConditionResult::pass("I == r*J + N")
                                  : ConditionResult::fail("I != r*J + N");
        if (out.direct_equation->ok())
            out.direct_bdl = verify_bdl(BDLWitness(w.I, *r, w.J, w.N), homology_field);
    }
    return out;
}

}  // namespace srl
