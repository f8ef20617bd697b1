#include "srliaison/monomial.hpp"

namespace srl {

// Degree-reverse-lexicographic with x1 > x2 > ... > xn: higher total degree
// wins; on ties the *last* differing exponent decides, smaller exponent wins.
static int degrevlex_cmp(const std::vector<int>& a, const std::vector<int>& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
    const auto& ea = a.exps();
    const auto& eb = b.exps();
    if (ea.size() != eb.size()) throw std::invalid_argument("monomial arity mismatch");
    int n = static_cast<int>(ea.size());
    switch (order) {
        case MonomialOrder::DegRevLex:
            return degrevlex_cmp(ea, eb, 0, n);
        case MonomialOrder::ElimLast:
            // block order: the auxiliary last variable dominates
            if (ea[n - 1] != eb[n - 1]) return ea[n - 1] < eb[n - 1] ? -1 : 1;
            return degrevlex_cmp(ea, eb, 0, n - 1);
    }
    return 0;
}

}  // namespace srl
