#include <algorithm>

#include "srliaison/monomial_ideal.hpp"

namespace srl {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens)
        if (g.nvars() != nvars) throw std::invalid_argument("monomial arity mismatch");
    // minimalize: drop any generator divisible by another
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() < b.degree();
    });
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& kept : gens_)
            if (kept.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant && !(std::find(gens_.begin(), gens_.end(), g) != gens_.end()))
            gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
        return mono_cmp(a, b, MonomialOrder::DegRevLex) > 0;
    });
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("monomial ideal arity mismatch");
    std::vector<Monomial> all = gens_;
    all.insert(all.end(), o.gens_.begin(), o.gens_.end());
    return MonomialIdeal(nvars_, std::move(all));
}

Ideal MonomialIdeal::to_ideal(Field f) const {
    PolyContext ctx(nvars_, f);
    std::vector<Polynomial> polys;
    polys.reserve(gens_.size());
    for (const auto& g : gens_) polys.emplace_back(ctx, g);
    return Ideal(ctx, std::move(polys));
}

}  // namespace srl
