#pragma once

#include <optional>
#include <string>

#include "srliaison/groebner.hpp"
#include "srliaison/homology.hpp"

namespace srl {

enum class CheckStatus { Pass, Fail, NotChecked };

struct ConditionResult {
    CheckStatus status = CheckStatus::NotChecked;
    std::string detail;

    static ConditionResult pass(std::string d = "") { return {CheckStatus::Pass, std::move(d)}; }
    static ConditionResult fail(std::string d = "") { return {CheckStatus::Fail, std::move(d)}; }
    static ConditionResult not_checked(std::string d) {
        return {CheckStatus::NotChecked, std::move(d)};
    }
    bool ok() const { return status == CheckStatus::Pass; }
};

/// A claimed basic double G-link C = fB + A of degree d = deg(f).
struct BDLWitness {
    Ideal C;
    Polynomial f;
    Ideal B;
    Ideal A;
    int degree;

    BDLWitness(Ideal c, Polynomial ff, Ideal b, Ideal a)
        : C(std::move(c)), f(std::move(ff)), B(std::move(b)), A(std::move(a)),
          degree(f.degree()) {}
};

/// Per-condition verdict for Definition 2.2. Conditions that cannot be
/// certified for non-monomial input are NotChecked with the reason.
struct BDLVerdict {
    ConditionResult a_subset_b;
    ConditionResult height_step;   // ht(A) + 1 == ht(B)
    ConditionResult height_c;      // ht(C) == ht(B)
    ConditionResult a_unmixed;
    ConditionResult b_unmixed;
    ConditionResult a_cohen_macaulay;
    ConditionResult a_generically_gorenstein;
    ConditionResult colon;         // (A : f) == A
    ConditionResult equation;      // C == f*B + A
    ConditionResult c_unmixed_info;  // informational only, not part of the verdict

    enum class Overall { Valid, Refuted, Incomplete };
    Overall overall() const;
    std::string overall_name() const;

    std::vector<std::pair<std::string, const ConditionResult*>> items() const;
};

/// Evaluates every Definition 2.2 condition it can certify.
/// Throws on context mismatch, zero or non-homogeneous f.
BDLVerdict verify_bdl(const BDLWitness& w, Field homology_field);

/// d = max generator degree of C; any basic double G-link of C has
/// 1 <= deg(f) < d. Throws on a non-homogeneous generator.
int degree_window(const Ideal& C);

/// Lemma 2.4 / Lemma 4.4 vertex construction: B = I_{lk k}, A = I of the
/// cone over the deletion with apex k, f = x_k. Applicable iff the deletion
/// is Cohen-Macaulay of the same dimension (and the complex is pure).
struct VertexBDL {
    bool pure = false;
    bool deletion_cm = false;
    bool same_dimension = false;
    bool applicable = false;
    std::string reason;  // refutation reason when not applicable
    std::optional<MonomialIdeal> B, A;
    std::optional<BDLVerdict> verdict;
};
VertexBDL vertex_bdl(const SimplicialComplex& dl, int k, Field field);

/// Lemma 3.7: a BDL C = x_i B + A forces S/(C + (x_i)) Cohen-Macaulay;
/// returns that CM verdict (false refutes every f = x_i).
bool fisxi_necessary(const MonomialIdeal& C, int i, Field field);

}  // namespace srl
