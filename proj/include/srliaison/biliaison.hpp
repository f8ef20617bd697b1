#pragma once

#include "srliaison/liaison.hpp"

namespace srl {

/// Claimed elementary G-biliaison of J from I on N, with multiplier pair
/// (a, x): a in J, x a lift of the image of a under the module isomorphism.
struct BiliaisonWitness {
    Ideal I, J, N;
    Polynomial a, x;
};

struct BiliaisonVerdict {
    // preconditions, reported structurally rather than thrown
    ConditionResult a_in_j;
    ConditionResult a_nzd_on_n;
    ConditionResult heights;    // ht(I) == ht(J) == ht(N) + 1
    ConditionResult n_inside;   // N subseteq I and N subseteq J
    bool preconditions_ok = false;

    ConditionResult equality;   // xJ + N == aI + N (the isomorphism surrogate)
    int ell = 0;                // deg(x) - deg(a)
    std::optional<Ideal> L;     // aI + N
    bool l_monomial = false;

    std::optional<BDLVerdict> l_bdl_of_i_on_n;  // L = a*I + N as a BDL witness
    std::optional<BDLVerdict> l_bdl_of_j_on_n;  // L = x*J + N as a BDL witness

    // case (2): x = r*a exactly; then I = rJ + N is a direct BDL
    std::optional<Polynomial> r;
    std::optional<ConditionResult> direct_equation;   // I == rJ + N
    std::optional<BDLVerdict> direct_bdl;             // I = r*J + N on N
};

BiliaisonVerdict verify_biliaison(const BiliaisonWitness& w, Field homology_field);

}  // namespace srl
