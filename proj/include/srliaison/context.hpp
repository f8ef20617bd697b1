#pragma once

#include <stdexcept>
#include <string>

namespace srl {

enum class Field { Q, GF2 };

/// Monomial orders. DegRevLex is the public order (x1 > x2 > ... > xn).
/// ElimLast is internal plumbing for colon/intersection computations: the
/// last variable is an auxiliary that dominates, so its elimination ideal
/// is read off the basis.
enum class MonomialOrder { DegRevLex, ElimLast };

inline std::string field_name(Field f) { return f == Field::Q ? "Q" : "GF2"; }

inline Field field_from_name(const std::string& s) {
    if (s == "Q" || s == "QQ") return Field::Q;
    if (s == "GF2" || s == "F2" || s == "GF(2)") return Field::GF2;
    throw std::invalid_argument("unknown field: " + s);
}

/// Every monomial/polynomial/ideal value carries one of these; operations on
/// values whose contexts differ are rejected.
struct PolyContext {
    int nvars = 0;
    Field field = Field::Q;
    MonomialOrder order = MonomialOrder::DegRevLex;

    PolyContext() = default;
    PolyContext(int n, Field f, MonomialOrder o = MonomialOrder::DegRevLex)
        : nvars(n), field(f), order(o) {
        if (n < 1) throw std::invalid_argument("context needs nvars >= 1");
    }

    friend bool operator==(const PolyContext&, const PolyContext&) = default;
};

inline void require_same_context(const PolyContext& a, const PolyContext& b) {
    if (!(a == b)) throw std::invalid_argument("context mismatch");
}

}  // namespace srl
