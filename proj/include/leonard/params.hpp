#ifndef LEONARD_PARAMS_HPP
#define LEONARD_PARAMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leonard/exactmat.hpp"
#include "leonard/qfield.hpp"

namespace leonard {

/// An ordering theta_0..theta_d of eigenvalues (d = values.size() - 1).
struct EigenvalueSeq {
    int d = -1;
    FieldVector values;

    EigenvalueSeq() = default;
    explicit EigenvalueSeq(FieldVector v)
        : d(static_cast<int>(v.size()) - 1), values(std::move(v)) {}

    const RationalFunction& operator[](int i) const { return values[static_cast<size_t>(i)]; }
    bool mutually_distinct() const;
    EigenvalueSeq reversed() const;
    EigenvalueSeq inverted_q() const;  // entrywise q -> q^-1
};

/**
 * The sequence (theta, theta*, varphi, phi); varphi and phi hold the entries
 * for i = 1..d at positions 0..d-1.
 */
struct ParameterArray {
    int d = 0;
    EigenvalueSeq theta, theta_star;
    FieldVector varphi, phi;
};

/// The seven-tuple of the closed-form construction, plus the optional xi / c.
struct ClosedFormParams {
    int d = 0;
    RationalFunction alpha, alpha_star, a, a_prime, b, b_prime;
    std::optional<RationalFunction> xi;
    std::optional<RationalFunction> c;

    const RationalFunction& require_xi() const;
    const RationalFunction& require_c() const;  // also insists c != 0
};

/// theta_i = alpha + a q^{2i-d} + a' q^{d-2i}; distinctness is not checked here.
EigenvalueSeq theta_closed_form(int d, const RationalFunction& alpha,
                                const RationalFunction& a, const RationalFunction& a_prime);

struct ThetaFit {
    RationalFunction alpha, a, a_prime;
};

/// Inverts theta_closed_form from the first three values, then verifies the
/// rest; nullopt (NoFit) when the sequence is not of the closed form for this
/// orientation of q. Requires d >= 2.
std::optional<ThetaFit> fit_theta_params(const EigenvalueSeq& theta);

/// beta with beta + 1 = (theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i),
/// verified constant over 2 <= i <= d-1. nullopt when the ratios differ
/// (NotRecurrent). Requires d >= 3.
std::optional<RationalFunction> fundamental_beta(const EigenvalueSeq& theta);

/// The constants gamma (over 1 <= i <= d-1) and rho (over 1 <= i <= d) of the
/// beta-recurrence; throws NotRecurrentError when either fails to be constant.
std::pair<RationalFunction, RationalFunction> gamma_rho(const EigenvalueSeq& theta,
                                                        const RationalFunction& beta);

/// theta_{-1} and theta_{d+1}, extended so the gamma recurrence holds at
/// i = 0 and i = d.
std::pair<RationalFunction, RationalFunction> theta_extensions(const EigenvalueSeq& theta,
                                                               const RationalFunction& beta,
                                                               const RationalFunction& gamma);

/**
 * All recurrent orderings of the given distinct values (d >= 3): seeds an
 * ordered triple, solves beta from the fourth element, extends by the
 * recurrence and checks membership. For d = 3 the recurrence imposes no
 * constraint, so every ordering qualifies; from d >= 4 a Leonard eigenvalue
 * set yields exactly the standard ordering and its reverse.
 */
std::vector<FieldVector> standard_orderings(const FieldVector& values);

/// First and second split sequences from the xi closed form; requires xi.
std::pair<FieldVector, FieldVector> vphi_phi_closed(const ClosedFormParams& cf);

/// The factored c-forms; equals vphi_phi_closed under xi = -a a' c - b b' c^{-1}.
std::pair<FieldVector, FieldVector> vphi_phi_c_form(const ClosedFormParams& cf);

struct ArrayViolation {
    int condition;  // 1..5, the numbered conditions of the parameter-array definition
    int index;      // offending index, -1 when not tied to one
    std::string detail;
};

/// Exact check of the five parameter-array conditions; empty result = valid.
std::vector<ArrayViolation> check_parameter_array(const ParameterArray& p);

/// xi = -a a' c - b b' c^{-1}; throws ZeroCError.
RationalFunction xi_from_c(const RationalFunction& a, const RationalFunction& a_prime,
                           const RationalFunction& b, const RationalFunction& b_prime,
                           const RationalFunction& c);

struct QuadraticRoots {
    FieldVector base_roots;  // roots inside Q(q), c = 0 excluded
    std::optional<std::pair<QuadExtElement, QuadExtElement>> ext_roots;
};

/// Nonzero solutions c of a a' c^2 + xi c + b b' = 0, in Q(q) when the
/// discriminant is a square and in a quadratic extension otherwise.
/// Throws UnderdeterminedError / NoNonzeroRootError.
QuadraticRoots c_from_xi(const RationalFunction& a, const RationalFunction& a_prime,
                         const RationalFunction& b, const RationalFunction& b_prime,
                         const RationalFunction& xi);

/**
 * The explicit split-basis matrix U: column r realizes the lower-bidiagonal /
 * upper-bidiagonal split shapes for the construction ordering. Requires c;
 * throws ConditionsViolatedError when U degenerates (a construction
 * inequality fails).
 */
FieldMatrix split_basis(const ClosedFormParams& cf);

/**
 * Split sequences of a Leonard pair computed independently of any closed-form
 * parameters: for each r the one-dimensional space
 *   span(A-eigenvectors for theta_r..theta_d) /\ span(A*-eigenvectors for
 *   theta*_0..theta*_r)
 * is intersected exactly, the u-chain u_{r+1} = (A - theta_r) u_r is checked
 * against it, and the conjugated matrices must take the exact split shapes.
 * varphi is read off the superdiagonal; phi comes from repeating with theta
 * reversed. Throws NotALeonardPairError on any failure.
 */
std::pair<FieldVector, FieldVector> split_sequences_of(const FieldMatrix& a,
                                                       const FieldMatrix& astar,
                                                       const EigenvalueSeq& theta,
                                                       const EigenvalueSeq& theta_star);

/// (A + alpha I, A* + alpha* I).
std::pair<FieldMatrix, FieldMatrix> translate(const FieldMatrix& a, const FieldMatrix& astar,
                                              const RationalFunction& alpha,
                                              const RationalFunction& alpha_star);

}  // namespace leonard

#endif
