#pragma once

#include <optional>

#include "srliaison/ideal.hpp"
#include "srliaison/monomial_ideal.hpp"

namespace srl {

/// Unique remainder of p modulo a Groebner basis (full reduction: no term of
/// the result is divisible by any leading monomial of G). For arbitrary G the
/// result is a valid division remainder; uniqueness needs G reduced.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& G);

/// Buchberger with the coprimality and chain criteria, followed by
/// minimalization and tail interreduction. Result is the unique reduced
/// Groebner basis for the context order, sorted by descending leading
/// monomial, leading coefficients 1.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const PolyContext& ctx);

/// Cached reduced basis of an ideal (computed once, idempotent, thread-safe).
const std::vector<Polynomial>& groebner_basis(const Ideal& I);

bool ideal_contains(const Ideal& I, const Polynomial& p);
bool ideal_contains(const Ideal& I, const Ideal& J);  // J subseteq I
bool ideal_equal(const Ideal& I, const Ideal& J);
bool is_unit_ideal(const Ideal& I);

/// Krull dimension of the quotient ring: maximum size of a variable subset
/// containing the support of no leading monomial of the reduced basis.
/// Throws on the unit ideal. The zero ideal has dimension nvars.
int dimension(const Ideal& I);
int height(const Ideal& I);  // nvars - dimension

/// Ideal quotient (I : f) via the intersection I ∩ (f) computed with one
/// auxiliary elimination variable, then exact division by f.
/// Requires f nonzero homogeneous.
Ideal quotient_by_poly(const Ideal& I, const Polynomial& f);

/// (I : f) == I, for homogeneous nonzero f and proper I.
bool is_nzd(const Polynomial& f, const Ideal& I);

/// Coefficient-wise mod-2 image of integer-coefficient generators, in a GF(2)
/// context of the same arity. Rejects non-integer coefficients.
Ideal gf2_specialize(const std::vector<Polynomial>& gens);

/// The ideal is a monomial ideal iff its reduced basis consists of monomials.
/// Returns the minimal monomial generators in that case.
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& I);

/// f * B + A as a generator list.
Ideal poly_times_ideal_plus(const Polynomial& f, const Ideal& B, const Ideal& A);

/// Exact division q = g / f (nullopt if f does not divide g).
std::optional<Polynomial> exact_divide(const Polynomial& g, const Polynomial& f);

}  // namespace srl
