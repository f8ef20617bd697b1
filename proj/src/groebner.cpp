#include <algorithm>
#include <deque>
#include <set>

#include "srliaison/groebner.hpp"

namespace srl {

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G) {
    for (const auto& g : G) require_same_context(p.ctx(), g.ctx());
    Polynomial r(p.ctx());
    Polynomial h = p;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : G) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(h.leading_monomial())) {
                Monomial q = h.leading_monomial() / g.leading_monomial();
                Rat c = field_normalize(h.leading_coeff() / g.leading_coeff(), p.ctx().field);
                h -= g.times_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(h.leading_monomial(), h.leading_coeff());
            h -= Polynomial(h.ctx(), h.leading_monomial(), h.leading_coeff());
        }
    }
    return r;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.times_term(l / f.leading_monomial(), Rat(1) / f.leading_coeff());
    Polynomial b = g.times_term(l / g.leading_monomial(), Rat(1) / g.leading_coeff());
    return a - b;
}

struct Pair {
    size_t i, j;
    Monomial l;
    int deg;
};

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& in, const PolyContext& ctx) {
    std::vector<Polynomial> G;
    for (const auto& g : in) {
        require_same_context(g.ctx(), ctx);
        if (!g.is_zero()) G.push_back(g.monic());
    }

    auto lm = [&](size_t i) -> const Monomial& { return G[i].leading_monomial(); };

    std::deque<Pair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = lcm(lm(i), lm(j));
            pairs.push_back(Pair{i, j, l, l.degree()});
        }
        std::stable_sort(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            return mono_cmp(a.l, b.l, ctx.order) < 0;  // normal strategy: smallest lcm first
        });
    };
    for (size_t j = 0; j < G.size(); ++j) push_pairs(j);

    std::set<std::pair<size_t, size_t>> done;
    while (!pairs.empty()) {
        Pair p = pairs.front();
        pairs.pop_front();
        done.insert({p.i, p.j});
        // Buchberger's first criterion: coprime leading monomials
        if (coprime(lm(p.i), lm(p.j))) continue;
        // chain criterion: some k with lm(k) | lcm and both (i,k),(j,k) handled
        bool chained = false;
        for (size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!lm(k).divides(p.l)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(p.i, k)) && done.count(key(p.j, k))) chained = true;
        }
        if (chained) continue;

        Polynomial r = normal_form(s_polynomial(G[p.i], G[p.j]), G);
        if (!r.is_zero()) {
            G.push_back(r.monic());
            push_pairs(G.size() - 1);
        }
    }

    // minimalize: keep only leading monomials not divisible by another's
    std::vector<Polynomial> mini;
    for (size_t i = 0; i < G.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const Monomial& a = G[j].leading_monomial();
            const Monomial& b = G[i].leading_monomial();
            if (a == b ? j < i : a.divides(b)) {
                keep = false;
                break;
            }
        }
        if (keep) mini.push_back(G[i]);
    }
    // tail interreduction against the other elements
    std::vector<Polynomial> red;
    for (size_t i = 0; i < mini.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < mini.size(); ++j)
            if (j != i) others.push_back(mini[j]);
        red.push_back(normal_form(mini[i], others).monic());
    }
    std::sort(red.begin(), red.end(), [&](const Polynomial& a, const Polynomial& b) {
        return mono_cmp(a.leading_monomial(), b.leading_monomial(), ctx.order) > 0;
    });
    return red;
}

const std::vector<Polynomial>& groebner_basis(const Ideal& I) {
    auto& cache = I.cache();
    std::call_once(cache.flag, [&] { cache.basis = buchberger(I.gens(), I.ctx()); });
    return cache.basis;
}

bool ideal_contains(const Ideal& I, const Polynomial& p) {
    require_same_context(I.ctx(), p.ctx());
    return normal_form(p, groebner_basis(I)).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
    require_same_context(I.ctx(), J.ctx());
    for (const auto& g : J.gens())
        if (!ideal_contains(I, g)) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    require_same_context(I.ctx(), J.ctx());
    // reduced bases are unique, but mutual reduction avoids recomputing one side
    return ideal_contains(I, J) && ideal_contains(J, I);
}

bool is_unit_ideal(const Ideal& I) {
    const auto& G = groebner_basis(I);
    return !G.empty() && G.front().leading_monomial().is_one();
}

namespace {

// minimum hitting set of the supports (branch on an uncovered support)
int min_hitting(const std::vector<uint32_t>& supports, uint32_t hit, int depth, int best) {
    const uint32_t* uncovered = nullptr;
    int sz = 33;
    for (const auto& s : supports) {
        if (s & hit) continue;
        int c = __builtin_popcount(s);
        if (c < sz) {
            sz = c;
            uncovered = &s;
        }
    }
    if (!uncovered) return depth;
    if (depth + 1 >= best) return best;  // bound
    for (uint32_t s = *uncovered; s;) {
        uint32_t v = s & (~s + 1);
        s ^= v;
        best = std::min(best, min_hitting(supports, hit | v, depth + 1, best));
    }
    return best;
}

}  // namespace

int dimension(const Ideal& I) {
    const auto& G = groebner_basis(I);
    if (I.ctx().nvars > 32) throw std::invalid_argument("dimension supports at most 32 variables");
    std::vector<uint32_t> supports;
    for (const auto& g : G) {
        uint32_t s = g.leading_monomial().support();
        if (s == 0) throw std::invalid_argument("dimension of the unit ideal");
        supports.push_back(s);
    }
    int n = I.ctx().nvars;
    return n - min_hitting(supports, 0, 0, n);
}

int height(const Ideal& I) { return I.ctx().nvars - dimension(I); }

std::optional<Polynomial> exact_divide(const Polynomial& g, const Polynomial& f) {
    require_same_context(g.ctx(), f.ctx());
    if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial q(g.ctx());
    Polynomial h = g;
    while (!h.is_zero()) {
        if (!f.leading_monomial().divides(h.leading_monomial())) return std::nullopt;
        Monomial m = h.leading_monomial() / f.leading_monomial();
        Rat c = field_normalize(h.leading_coeff() / f.leading_coeff(), g.ctx().field);
        q.add_term(m, c);
        h -= f.times_term(m, c);
    }
    return q;
}

Ideal quotient_by_poly(const Ideal& I, const Polynomial& f) {
    require_same_context(I.ctx(), f.ctx());
    if (f.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("quotient requires homogeneous f");

    const PolyContext& ctx = I.ctx();
    PolyContext ext(ctx.nvars + 1, ctx.field, MonomialOrder::ElimLast);
    int t = ctx.nvars;  // auxiliary variable index

    auto lift = [&](const Polynomial& p, int tdeg) {
        Polynomial out(ext);
        for (const auto& [m, c] : p.terms()) {
            std::vector<int> e = m.exps();
            e.push_back(tdeg);
            out.add_term(Monomial(std::move(e)), c);
        }
        return out;
    };

    // I ∩ (f): eliminate t from t*I + (1-t)*(f)
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens())
        if (!g.is_zero()) gens.push_back(lift(g, 1));
    gens.push_back(lift(f, 0) - lift(f, 1));
    std::vector<Polynomial> G = buchberger(gens, ext);

    std::vector<Polynomial> result;
    for (const auto& g : G) {
        bool has_t = false;
        for (const auto& [m, c] : g.terms())
            if (m.exp(t)) {
                has_t = true;
                break;
            }
        if (has_t) continue;
        Polynomial down(ctx);
        for (const auto& [m, c] : g.terms()) {
            std::vector<int> e = m.exps();
            e.pop_back();
            down.add_term(Monomial(std::move(e)), c);
        }
        auto q = exact_divide(down, f);
        if (!q) throw std::logic_error("intersection element not divisible by f");
        result.push_back(*q);
    }
    return Ideal(ctx, std::move(result));
}

bool is_nzd(const Polynomial& f, const Ideal& I) {
    if (f.is_zero() || !f.is_homogeneous())
        throw std::invalid_argument("is_nzd requires homogeneous nonzero f");
    if (is_unit_ideal(I)) throw std::invalid_argument("is_nzd requires a proper ideal");
    return ideal_equal(quotient_by_poly(I, f), I);
}

Ideal gf2_specialize(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("gf2_specialize needs at least one generator");
    const PolyContext& src = gens.front().ctx();
    PolyContext dst(src.nvars, Field::GF2, src.order);
    std::vector<Polynomial> out;
    for (const auto& g : gens) {
        require_same_context(g.ctx(), src);
        if (!g.has_integer_coeffs())
            throw std::invalid_argument("gf2_specialize requires integer coefficients");
        Polynomial p(dst);
        for (const auto& [m, c] : g.terms()) p.add_term(m, c);  // field_normalize mods by 2
        if (!p.is_zero()) out.push_back(p);
    }
    return Ideal(dst, std::move(out));
}

std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& I) {
    const auto& G = groebner_basis(I);
    std::vector<Monomial> gens;
    for (const auto& g : G) {
        if (!g.is_monomial()) return std::nullopt;
        gens.push_back(g.leading_monomial());
    }
    return MonomialIdeal(I.ctx().nvars, std::move(gens));
}

Ideal poly_times_ideal_plus(const Polynomial& f, const Ideal& B, const Ideal& A) {
    require_same_context(f.ctx(), B.ctx());
    require_same_context(B.ctx(), A.ctx());
    std::vector<Polynomial> gens;
    for (const auto& b : B.gens()) gens.push_back(f * b);
    for (const auto& a : A.gens()) gens.push_back(a);
    return Ideal(f.ctx(), std::move(gens));
}

}  // namespace srl
