#include "srliaison/liaison.hpp"

namespace srl {

BDLVerdict::Overall BDLVerdict::overall() const {
    bool incomplete = false;
    for (const auto& [name, r] : items()) {
        if (r->status == CheckStatus::Fail) return Overall::Refuted;
        if (r->status == CheckStatus::NotChecked) incomplete = true;
    }
    return incomplete ? Overall::Incomplete : Overall::Valid;
}

std::string BDLVerdict::overall_name() const {
    switch (overall()) {
        case Overall::Valid: return "valid";
        case Overall::Refuted: return "refuted";
        case Overall::Incomplete: return "incomplete";
    }
    return "";
}

std::vector<std::pair<std::string, const ConditionResult*>> BDLVerdict::items() const {
    return {
        {"A subset of B", &a_subset_b},
        {"ht(A)+1 == ht(B)", &height_step},
        {"ht(C) == ht(B)", &height_c},
        {"A unmixed", &a_unmixed},
        {"B unmixed", &b_unmixed},
        {"A Cohen-Macaulay", &a_cohen_macaulay},
        {"A generically Gorenstein", &a_generically_gorenstein},
        {"(A:f) == A", &colon},
        {"C == f*B + A", &equation},
    };
}

namespace {

// Proxy for the radical/purity/Reisner route: usable whenever the ideal is a
// squarefree monomial ideal (detected through its reduced basis, so
// non-monomial generator lists of monomial ideals are still recognized).
struct SquarefreeView {
    bool monomial = false;
    bool squarefree = false;
    std::optional<MonomialIdeal> mi;
};

SquarefreeView squarefree_view(const Ideal& I) {
    SquarefreeView v;
    auto mi = as_monomial_ideal(I);
    if (!mi) return v;
    v.monomial = true;
    v.squarefree = mi->is_squarefree();
    if (v.squarefree) v.mi = std::move(*mi);
    return v;
}

ConditionResult unmixed_check(const SquarefreeView& v, int n) {
    if (!v.monomial) return ConditionResult::not_checked("not a monomial ideal");
    if (!v.squarefree) return ConditionResult::not_checked("monomial but not squarefree");
    if (v.mi->is_unit()) return ConditionResult::fail("unit ideal");
    SimplicialComplex dl = complex_of(*v.mi, n);
    return dl.is_pure() ? ConditionResult::pass("Stanley-Reisner complex is pure")
                        : ConditionResult::fail("Stanley-Reisner complex is impure");
}

}  // namespace

BDLVerdict verify_bdl(const BDLWitness& w, Field homology_field) {
    const PolyContext& ctx = w.C.ctx();
    require_same_context(ctx, w.f.ctx());
    require_same_context(ctx, w.B.ctx());
    require_same_context(ctx, w.A.ctx());
    if (w.f.is_zero()) throw std::invalid_argument("verify_bdl: f must be nonzero");
    if (!w.f.is_homogeneous() || w.f.degree() < 1)
        throw std::invalid_argument("verify_bdl: f must be homogeneous of positive degree");

    BDLVerdict out;
    int n = ctx.nvars;

    out.a_subset_b = ideal_contains(w.B, w.A)
                         ? ConditionResult::pass()
                         : ConditionResult::fail("a generator of A does not reduce to 0 mod B");

    bool aU = is_unit_ideal(w.A), bU = is_unit_ideal(w.B), cU = is_unit_ideal(w.C);
    if (aU || bU) {
        out.height_step = ConditionResult::fail(aU ? "A is the unit ideal" : "B is the unit ideal");
    } else {
        int ha = height(w.A), hb = height(w.B);
        out.height_step = (ha + 1 == hb)
                              ? ConditionResult::pass("ht(A)=" + std::to_string(ha) +
                                                      ", ht(B)=" + std::to_string(hb))
                              : ConditionResult::fail("ht(A)=" + std::to_string(ha) +
                                                      ", ht(B)=" + std::to_string(hb));
    }
    if (bU || cU) {
        out.height_c = ConditionResult::fail(cU ? "C is the unit ideal" : "B is the unit ideal");
    } else {
        int hc = height(w.C), hb = height(w.B);
        out.height_c = (hc == hb) ? ConditionResult::pass("ht(C)=ht(B)=" + std::to_string(hc))
                                  : ConditionResult::fail("ht(C)=" + std::to_string(hc) +
                                                          ", ht(B)=" + std::to_string(hb));
    }

    SquarefreeView va = squarefree_view(w.A), vb = squarefree_view(w.B), vc = squarefree_view(w.C);
    out.a_unmixed = unmixed_check(va, n);
    out.b_unmixed = unmixed_check(vb, n);
    out.c_unmixed_info = unmixed_check(vc, n);

    if (va.mi) {
        out.a_cohen_macaulay =
            is_cm_quotient(*va.mi, homology_field)
                ? ConditionResult::pass("Reisner criterion")
                : ConditionResult::fail("Reisner criterion fails");
        out.a_generically_gorenstein = ConditionResult::pass("squarefree monomial, hence radical");
    } else {
        std::string why = va.monomial ? "monomial but not squarefree" : "not a monomial ideal";
        out.a_cohen_macaulay = ConditionResult::not_checked(why);
        out.a_generically_gorenstein = ConditionResult::not_checked(why);
    }

    if (aU) {
        out.colon = ConditionResult::fail("A is the unit ideal");
    } else {
        out.colon = ideal_equal(quotient_by_poly(w.A, w.f), w.A)
                        ? ConditionResult::pass()
                        : ConditionResult::fail("f is a zerodivisor on S/A");
    }

    out.equation = ideal_equal(w.C, poly_times_ideal_plus(w.f, w.B, w.A))
                       ? ConditionResult::pass()
                       : ConditionResult::fail("C != f*B + A");
    return out;
}

int degree_window(const Ideal& C) {
    int d = 0;
    for (const auto& g : C.gens()) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("degree_window requires homogeneous generators");
        d = std::max(d, g.degree());
    }
    return d;
}

VertexBDL vertex_bdl(const SimplicialComplex& dl, int k, Field field) {
    if (k < 1 || k > dl.n()) throw std::invalid_argument("vertex out of range");
    if (!dl.has_face(vs_bit(k))) throw std::invalid_argument("k is not a vertex of the complex");

    VertexBDL out;
    out.pure = dl.is_pure();
    if (!out.pure) {
        out.reason = "complex is not pure";
        return out;
    }
    SimplicialComplex del = dl.deletion(k);
    out.deletion_cm = !del.is_void() && is_cohen_macaulay(del, field);
    out.same_dimension = !del.is_void() && !del.is_empty_complex() && del.dim() == dl.dim();
    if (!out.deletion_cm) {
        out.reason = "deletion is not Cohen-Macaulay";
        return out;
    }
    if (!out.same_dimension) {
        out.reason = "deletion has smaller dimension (the complex is a cone with apex k)";
        return out;
    }
    out.applicable = true;

    out.B = stanley_reisner(dl.link(k));
    out.A = stanley_reisner(del.cone(k));  // same generators as I of the deletion view
    PolyContext ctx(dl.n(), field == Field::GF2 ? Field::GF2 : Field::Q);
    BDLWitness w(stanley_reisner(dl).to_ideal(ctx.field),
                 Polynomial::variable(ctx, k - 1),
                 out.B->to_ideal(ctx.field),
                 out.A->to_ideal(ctx.field));
    out.verdict = verify_bdl(w, field);
    return out;
}

bool fisxi_necessary(const MonomialIdeal& C, int i, Field field) {
    if (!C.is_squarefree()) throw std::invalid_argument("fisxi_necessary requires squarefree C");
    if (i < 1 || i > C.nvars()) throw std::invalid_argument("vertex out of range");
    MonomialIdeal xi(C.nvars(), {Monomial::variable(C.nvars(), i - 1)});
    return is_cm_quotient(C + xi, field);
}

}  // namespace srl
