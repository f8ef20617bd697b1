#pragma once

#include <json.hpp>

#include "srliaison/liaison.hpp"

namespace srl {

/// general-A: A is an arbitrary homogeneous ideal, refutations through forced
/// heights. squarefree-A: A (and B) squarefree monomial, refutations through
/// forced Cohen-Macaulayness; f restricted to sums of monic monomials.
enum class RefuteMode { GeneralA, SquarefreeA };

inline std::string mode_name(RefuteMode m) {
    return m == RefuteMode::GeneralA ? "general-A" : "squarefree-A";
}
RefuteMode mode_from_name(const std::string&);

struct RefutationOutcome {
    bool refuted = false;
    std::vector<std::string> survivors;  // unrefuted candidate descriptions
    nlohmann::json certificate;          // schema "srliaison-cert/1", replayable
};

/// Case analysis for degree-1 forms f (single variables via Lemma 3.7 or the
/// forced vertex witness; multi-variable supports via forced memberships).
/// C must be squarefree and generated in degree 3.
RefutationOutcome refute_deg1(const MonomialIdeal& C, Field field, RefuteMode mode, int jobs = 0);

/// Case analysis for degree-2 forms f = sum of degree-2 monic monomials.
RefutationOutcome refute_deg2(const MonomialIdeal& C, Field field, RefuteMode mode, int jobs = 0);

/// Replays a certificate: re-derives every height/CM verdict and the case
/// enumeration from the certificate's own input and compares. Deterministic
/// engines make replays byte-for-byte reproducible.
bool recheck_certificate(const nlohmann::json& cert, std::string* mismatch = nullptr,
                         int jobs = 0);

}  // namespace srl
