#ifndef LEONARD_LBTD_HPP
#define LEONARD_LBTD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leonard/exactmat.hpp"
#include "leonard/params.hpp"
#include "leonard/qfield.hpp"

namespace leonard {

/// A lower-bidiagonal / irreducible-tridiagonal matrix pair, with the
/// construction parameters attached when it came from build().
struct LBTDPair {
    int d = 0;
    FieldMatrix A, Astar;
    std::optional<ClosedFormParams> provenance;
};

struct ConditionViolation {
    int family;  // 1: a vs a', 2: b vs b', 3: b c^-1 / b' c^-1 vs a, a'
    std::string detail;
};

/**
 * Exact evaluation of the three exclusion families gating the construction:
 *   a  not in { a' q^{2d-2k} : 1 <= k <= 2d-1 },
 *   b  not in { b' q^{2d-2k} : 1 <= k <= 2d-1 },
 *   b c^-1, b' c^-1 not in { a q^{d-1-2k} } u { a' q^{d-1-2k} },  0 <= k <= d-1.
 * Every failing membership is reported. Requires d >= 1 and c != 0.
 */
std::vector<ConditionViolation> check_conditions(const ClosedFormParams& cf);

/// Same checks for a recovered pair where only b + b' and b b' are known; the
/// b-dependent memberships are evaluated through their symmetric forms.
std::vector<ConditionViolation> check_conditions_symmetric(
    int d, const RationalFunction& a, const RationalFunction& a_prime,
    const RationalFunction& b_plus_bprime, const RationalFunction& b_times_bprime,
    const RationalFunction& c);

/// The LB-TD pair of the closed-form family; throws ConditionsViolatedError
/// (message lists the violations) unless check_conditions passes.
LBTDPair build(const ClosedFormParams& cf);

/// Construction without the inequality gate, for probing how invalid
/// parameter tuples fail downstream.
LBTDPair build_unchecked(const ClosedFormParams& cf);

struct Certification {
    bool certified = false;
    std::string failure;
    /// On success both the recorded ordering and its reverse are standard
    /// (reversal preserves tridiagonality).
    bool theta_ordering_standard = false;
    bool theta_star_ordering_standard = false;
};

/**
 * Certifies the two Leonard-pair axioms by exact conjugation: A* must be
 * irreducible tridiagonal in the eigenbasis of A (read off the diagonal of A),
 * and A must be irreducible tridiagonal in the eigenbasis of A* built from
 * theta_star via the three-term recurrence.
 *
 * Throws EigenvalueMismatchError when theta_star is not a list of distinct
 * eigenvalues of A*; axiom failures come back as data.
 */
Certification verify_leonard_pair(const LBTDPair& pair, const EigenvalueSeq& theta_star);

/// Parameter array of the constructed pair; conditions are checked first.
ParameterArray parameter_array_of(const ClosedFormParams& cf);
ParameterArray parameter_array_of_unchecked(const ClosedFormParams& cf);

/// A Leonard pair with these closed-form scalars admits LB-TD form iff at
/// least two of a a', b b', xi are nonzero.
bool has_lbtd_form(const RationalFunction& a, const RationalFunction& a_prime,
                   const RationalFunction& b, const RationalFunction& b_prime,
                   const RationalFunction& xi);

/**
 * Parameters recovered from a raw LB-TD pair.
 *
 * alpha, a, a_prime always report the closed-form fit of diag(A) with respect
 * to the field generator q. When q_inverted is set, the construction formulas
 * hold with q replaced by q^-1, which exchanges the roles of a and a_prime;
 * c, alpha_star and the b data are reported in that orientation.
 */
struct RecoveryResult {
    bool q_inverted = false;
    RationalFunction alpha, a, a_prime, c, alpha_star;
    RationalFunction b_plus_bprime, b_times_bprime;
    /// present when the b-quadratic splits over Q(q)
    std::optional<std::pair<RationalFunction, RationalFunction>> b_split;
    /// otherwise the roots live in a quadratic extension
    std::optional<std::pair<QuadExtElement, QuadExtElement>> b_split_ext;
};

/**
 * Inverts the construction: fits theta, orients q by the subdiagonal
 * geometry z_i = z_1 q^{2-2i}, reads c from z_1, solves x_0, x_1 for
 * (alpha*, b+b'), y_1 for b b', then verifies every remaining entry exactly.
 * Requires d >= 3. Throws DegenerateZError / NotInFamilyError.
 */
RecoveryResult recover_params(const LBTDPair& pair);

enum class CaseTag {
    Generic,         // a != a' q^{2d+2} and a' != a q^{2d+2}; z_1 = -c q^{d-1}
    AEqApQ2d2Sub1,   // a = a' q^{2d+2}, z_1 = -a^-1 b  q^{2d}
    AEqApQ2d2Sub2,   // a = a' q^{2d+2}, z_1 = -a^-1 b' q^{2d}
    AEqApQ2d2Sub3,   // a = a' q^{2d+2}, xi tied to z_1 = -c q^{d-1}
    ApEqAQ2d2Sub1,   // a' = a q^{2d+2}, z_1 = -a^-1 b  q^{-2}
    ApEqAQ2d2Sub2,   // a' = a q^{2d+2}, z_1 = -a^-1 b' q^{-2}
    ApEqAQ2d2Sub3,   // a' = a q^{2d+2}, xi tied to z_1 = -c q^{d-1}
};

struct EntrySeqs {
    FieldVector x;  // indices 0..d
    FieldVector y;  // entries y_1..y_d
    FieldVector z;  // entries z_1..z_d
};

/// Closed-form entry sequences of the named case lemma (alpha = alpha* = 0
/// throughout that analysis). The free data is c for Generic / *Sub3 and xi
/// for the other subcases. Throws CaseHypothesisViolatedError.
EntrySeqs case_entry_forms(const ClosedFormParams& cf, CaseTag tag);

}  // namespace leonard

#endif
