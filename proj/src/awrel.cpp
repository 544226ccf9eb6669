#include "leonard/awrel.hpp"

namespace leonard {

namespace {
RationalFunction qp(long k) { return RationalFunction::q_pow(k); }
}

std::pair<FieldVector, FieldVector> tridiag_coeffs(const ParameterArray& p) {
    const int d = p.d;
    const EigenvalueSeq &th = p.theta, &ts = p.theta_star;
    auto vphi = [&](int i) { return p.varphi[i - 1]; };
    FieldVector a(d + 1), as(d + 1);
    a[0] = th[0] + vphi(1) / (ts[0] - ts[1]);
    a[d] = th[d] + vphi(d) / (ts[d] - ts[d - 1]);
    as[0] = ts[0] + vphi(1) / (th[0] - th[1]);
    as[d] = ts[d] + vphi(d) / (th[d] - th[d - 1]);
    for (int i = 1; i <= d - 1; ++i) {
        a[i] = th[i] + vphi(i) / (ts[i] - ts[i - 1]) + vphi(i + 1) / (ts[i] - ts[i + 1]);
        as[i] = ts[i] + vphi(i) / (th[i] - th[i - 1]) + vphi(i + 1) / (th[i] - th[i + 1]);
    }
    return {a, as};
}

AWScalars aw_scalars(const ParameterArray& p) {
    const int d = p.d;
    if (d < 3) throw Error("aw_scalars requires d >= 3");
    auto beta = fundamental_beta(p.theta);
    if (!beta) throw InconsistentScalarsError("theta is not recurrent");
    auto beta_star = fundamental_beta(p.theta_star);
    if (!beta_star || *beta_star != *beta)
        throw InconsistentScalarsError("theta and theta* have different fundamental parameters");

    AWScalars s;
    s.beta = *beta;
    try {
        std::tie(s.gamma, s.rho) = gamma_rho(p.theta, s.beta);
        std::tie(s.gamma_star, s.rho_star) = gamma_rho(p.theta_star, s.beta);
    } catch (const NotRecurrentError&) {
        throw InconsistentScalarsError("recurrence constants are not constant");
    }

    auto [a, as] = tridiag_coeffs(p);
    auto [th_m1, th_p1] = theta_extensions(p.theta, s.beta, s.gamma);
    auto [ts_m1, ts_p1] = theta_extensions(p.theta_star, s.beta, s.gamma_star);
    auto th = [&](int i) {
        if (i < 0) return th_m1;
        if (i > d) return th_p1;
        return p.theta[i];
    };
    auto ts = [&](int i) {
        if (i < 0) return ts_m1;
        if (i > d) return ts_p1;
        return p.theta_star[i];
    };

    for (int i = 1; i <= d; ++i) {
        RationalFunction w = as[i] * (th(i) - th(i + 1)) + as[i - 1] * (th(i - 1) - th(i - 2)) -
                             s.gamma_star * (th(i - 1) + th(i));
        if (i == 1)
            s.omega = w;
        else if (w != s.omega)
            throw InconsistentScalarsError("omega depends on the row index");
    }
    for (int i = 0; i <= d; ++i) {
        RationalFunction e = as[i] * (th(i) - th(i - 1)) * (th(i) - th(i + 1)) -
                             s.gamma_star * th(i) * th(i) - s.omega * th(i);
        if (i == 0)
            s.eta = e;
        else if (e != s.eta)
            throw InconsistentScalarsError("eta depends on the row index");
    }
    for (int i = 0; i <= d; ++i) {
        RationalFunction e = a[i] * (ts(i) - ts(i - 1)) * (ts(i) - ts(i + 1)) -
                             s.gamma * ts(i) * ts(i) - s.omega * ts(i);
        if (i == 0)
            s.eta_star = e;
        else if (e != s.eta_star)
            throw InconsistentScalarsError("eta* depends on the row index");
    }
    return s;
}

bool verify_aw(const FieldMatrix& a, const FieldMatrix& astar, const AWScalars& s) {
    if (!a.is_square() || !astar.is_square()) throw NotSquareError();
    if (a.rows() != astar.rows()) throw SizeMismatchError();
    const FieldMatrix id = FieldMatrix::identity(a.rows());
    const FieldMatrix a2 = a * a, as2 = astar * astar;
    const FieldMatrix aas = a * astar, asa = astar * a;

    FieldMatrix lhs1 = a2 * astar - (a * astar * a) * s.beta + astar * a2 -
                       (aas + asa) * s.gamma - astar * s.rho;
    FieldMatrix rhs1 = a2 * s.gamma_star + a * s.omega + id * s.eta;
    if (lhs1 != rhs1) return false;

    FieldMatrix lhs2 = as2 * a - (astar * a * astar) * s.beta + a * as2 -
                       (asa + aas) * s.gamma_star - a * s.rho_star;
    FieldMatrix rhs2 = as2 * s.gamma + astar * s.omega + id * s.eta_star;
    return lhs2 == rhs2;
}

AWScalars closed_scalars(const ClosedFormParams& cf, const RationalFunction& xi) {
    if (!cf.alpha.is_zero() || !cf.alpha_star.is_zero()) throw NonzeroAlphaError();
    const int d = cf.d;
    AWScalars s;
    s.beta = qp(2) + qp(-2);
    s.gamma = RationalFunction();
    s.gamma_star = RationalFunction();
    RationalFunction sq = qp(2) - qp(-2);
    s.rho = -(cf.a * cf.a_prime) * sq * sq;
    s.rho_star = -(cf.b * cf.b_prime) * sq * sq;
    RationalFunction u = RationalFunction::q() - qp(-1);
    RationalFunction qd = qp(d + 1) + qp(-d - 1);
    s.omega = u * u * (qd * xi - (cf.a + cf.a_prime) * (cf.b + cf.b_prime));
    s.eta = -u * sq * ((cf.a + cf.a_prime) * xi - cf.a * cf.a_prime * (cf.b + cf.b_prime) * qd);
    s.eta_star = -u * sq * ((cf.b + cf.b_prime) * xi - cf.b * cf.b_prime * (cf.a + cf.a_prime) * qd);
    return s;
}

}  // namespace leonard
