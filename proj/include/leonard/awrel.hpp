#ifndef LEONARD_AWREL_HPP
#define LEONARD_AWREL_HPP

#include "leonard/exactmat.hpp"
#include "leonard/params.hpp"
#include "leonard/qfield.hpp"

namespace leonard {

/// The eight scalars entering the Askey-Wilson relations.
struct AWScalars {
    RationalFunction beta, gamma, gamma_star, rho, rho_star, omega, eta, eta_star;
};

/// Diagonal coefficients a_i (of A in an A*-eigenbasis) and a*_i (of A* in an
/// A-eigenbasis), computed from the parameter array with the boundary forms
/// at i = 0 and i = d.
std::pair<FieldVector, FieldVector> tridiag_coeffs(const ParameterArray& p);

/**
 * All eight scalars from the parameter array: beta / gamma / rho data via the
 * recurrences, omega / eta / eta* via the a_i route, each verified
 * independent of the row index it is read from (the boundary rows use the
 * theta_{-1}, theta_{d+1} conventions). Requires d >= 3; throws
 * InconsistentScalarsError when any i-independence check fails.
 */
AWScalars aw_scalars(const ParameterArray& p);

/// Exact evaluation of both Askey-Wilson matrix identities.
bool verify_aw(const FieldMatrix& a, const FieldMatrix& astar, const AWScalars& s);

/// Closed forms of the scalars for alpha = alpha* = 0.
AWScalars closed_scalars(const ClosedFormParams& cf, const RationalFunction& xi);

}  // namespace leonard

#endif
