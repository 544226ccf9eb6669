#include "leonard/lbtd.hpp"

#include <sstream>

namespace leonard {

namespace {
RationalFunction qp(long k) { return RationalFunction::q_pow(k); }

std::string describe(const std::vector<ConditionViolation>& v) {
    std::ostringstream os;
    os << "construction inequalities violated:";
    for (const auto& c : v) os << " [" << c.family << "] " << c.detail;
    return os.str();
}
}  // namespace

std::vector<ConditionViolation> check_conditions(const ClosedFormParams& cf) {
    const int d = cf.d;
    if (d < 1) throw Error("check_conditions requires d >= 1");
    const RationalFunction& c = cf.require_c();
    std::vector<ConditionViolation> out;
    for (int k = 1; k <= 2 * d - 1; ++k) {
        long m = 2 * d - 2 * k;
        if (cf.a == cf.a_prime * qp(m))
            out.push_back({1, "a = a' q^" + std::to_string(m)});
        if (cf.b == cf.b_prime * qp(m))
            out.push_back({2, "b = b' q^" + std::to_string(m)});
    }
    const RationalFunction bc = cf.b / c, bpc = cf.b_prime / c;
    for (int k = 0; k <= d - 1; ++k) {
        long m = d - 1 - 2 * k;
        for (const auto& [lhs, name] : {std::pair{bc, "b c^-1"}, std::pair{bpc, "b' c^-1"}}) {
            if (lhs == cf.a * qp(m))
                out.push_back({3, std::string(name) + " = a q^" + std::to_string(m)});
            if (lhs == cf.a_prime * qp(m))
                out.push_back({3, std::string(name) + " = a' q^" + std::to_string(m)});
        }
    }
    return out;
}

std::vector<ConditionViolation> check_conditions_symmetric(
    int d, const RationalFunction& a, const RationalFunction& a_prime,
    const RationalFunction& s, const RationalFunction& p, const RationalFunction& c) {
    if (d < 1) throw Error("check_conditions_symmetric requires d >= 1");
    if (c.is_zero()) throw ZeroCError();
    std::vector<ConditionViolation> out;
    for (int k = 1; k <= 2 * d - 1; ++k) {
        long m = 2 * d - 2 * k;
        if (a == a_prime * qp(m))
            out.push_back({1, "a = a' q^" + std::to_string(m)});
    }
    // b = b' q^{2m} or b' = b q^{2m}  <=>  p (1 + q^{4m}) - (s^2 - 2p) q^{2m} = 0
    for (int m = 0; m <= d - 1; ++m) {
        RationalFunction f = p * (RationalFunction(1) + qp(4 * m)) - (s * s - RationalFunction(2) * p) * qp(2 * m);
        if (f.is_zero())
            out.push_back({2, "b = b' q^(+/-" + std::to_string(2 * m) + ")"});
    }
    // b = sigma c or b' = sigma c  <=>  p - s sigma c + sigma^2 c^2 = 0
    for (int k = 0; k <= d - 1; ++k) {
        long m = d - 1 - 2 * k;
        for (const auto& [base, name] : {std::pair{a, "a"}, std::pair{a_prime, "a'"}}) {
            RationalFunction sigma = base * qp(m) * c;
            if ((p - s * sigma + sigma * sigma).is_zero())
                out.push_back({3, "b or b' = " + std::string(name) + " c q^" + std::to_string(m)});
        }
    }
    return out;
}

namespace {

LBTDPair assemble(const ClosedFormParams& cf) {
    const int d = cf.d;
    const RationalFunction& c = cf.require_c();
    FieldMatrix a(d + 1, d + 1), astar(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) {
        a(i, i) = cf.alpha + cf.a * qp(2 * i - d) + cf.a_prime * qp(d - 2 * i);
        if (i >= 1) a(i, i - 1) = RationalFunction(1);
        astar(i, i) = cf.alpha_star + (cf.b + cf.b_prime) * qp(d - 2 * i) +
                      cf.a_prime * c * qp(d - 2 * i) *
                          (qp(d + 1) + qp(-d - 1) - qp(d - 2 * i - 1) - qp(d - 2 * i + 1));
        if (i >= 1) {
            astar(i, i - 1) = -c * qp(d - 2 * i + 1);
            astar(i - 1, i) = (qp(i) - qp(-i)) * (qp(d - i + 1) - qp(i - d - 1)) *
                              (cf.b - cf.a_prime * c * qp(d - 2 * i + 1)) *
                              (cf.b_prime - cf.a_prime * c * qp(d - 2 * i + 1)) / c;
        }
    }
    return LBTDPair{d, std::move(a), std::move(astar), cf};
}

}  // namespace

LBTDPair build(const ClosedFormParams& cf) {
    auto bad = check_conditions(cf);
    if (!bad.empty()) throw ConditionsViolatedError(describe(bad));
    return assemble(cf);
}

LBTDPair build_unchecked(const ClosedFormParams& cf) { return assemble(cf); }

Certification verify_leonard_pair(const LBTDPair& pair, const EigenvalueSeq& theta_star) {
    Certification cert;
    if (!theta_star.mutually_distinct())
        throw EigenvalueMismatchError("theta_star values are not mutually distinct");
    if (!is_lbtd_pair(pair.A, pair.Astar)) {
        cert.failure = "pair is not LB-TD (shape or zero sub/superdiagonal entry)";
        return cert;
    }
    EigenvalueSeq theta(pair.A.diagonal_entries());
    if (!theta.mutually_distinct()) {
        cert.failure = "eigenvalues of A are not mutually distinct";
        return cert;
    }

    // axiom (ii): A* irreducible tridiagonal in an eigenbasis of A
    FieldMatrix pa = eigenbasis_for(pair.A, theta.values);
    if (!is_irreducible_tridiagonal(conjugate(pair.Astar, pa))) {
        cert.failure = "A* is not irreducible tridiagonal in the A eigenbasis";
        return cert;
    }
    cert.theta_ordering_standard = true;  // and its reverse

    // axiom (i): A irreducible tridiagonal in an eigenbasis of A*
    FieldMatrix pas;
    try {
        pas = eigenbasis_for(pair.Astar, theta_star.values);
    } catch (const NotAnEigenvalueError&) {
        throw EigenvalueMismatchError("theta_star entries are not eigenvalues of A*");
    }
    if (!is_irreducible_tridiagonal(conjugate(pair.A, pas))) {
        cert.failure = "A is not irreducible tridiagonal in the A* eigenbasis";
        return cert;
    }
    cert.theta_star_ordering_standard = true;
    cert.certified = true;
    return cert;
}

namespace {
ParameterArray array_of(const ClosedFormParams& cf) {
    ParameterArray p;
    p.d = cf.d;
    p.theta = theta_closed_form(cf.d, cf.alpha, cf.a, cf.a_prime);
    p.theta_star = theta_closed_form(cf.d, cf.alpha_star, cf.b, cf.b_prime);
    std::tie(p.varphi, p.phi) = vphi_phi_c_form(cf);
    return p;
}
}  // namespace

ParameterArray parameter_array_of(const ClosedFormParams& cf) {
    auto bad = check_conditions(cf);
    if (!bad.empty()) throw ConditionsViolatedError(describe(bad));
    return array_of(cf);
}

ParameterArray parameter_array_of_unchecked(const ClosedFormParams& cf) { return array_of(cf); }

bool has_lbtd_form(const RationalFunction& a, const RationalFunction& a_prime,
                   const RationalFunction& b, const RationalFunction& b_prime,
                   const RationalFunction& xi) {
    int nonzero = 0;
    if (!(a * a_prime).is_zero()) ++nonzero;
    if (!(b * b_prime).is_zero()) ++nonzero;
    if (!xi.is_zero()) ++nonzero;
    return nonzero >= 2;
}

RecoveryResult recover_params(const LBTDPair& pair) {
    const int d = pair.d;
    if (d < 3) throw Error("recover_params requires d >= 3");
    if (static_cast<int>(pair.A.rows()) != d + 1)
        throw SizeMismatchError("pair dimension disagrees with d");
    if (!is_lbtd_pair(pair.A, pair.Astar))
        throw NotInFamilyError("not an LB-TD pair (shape or zero sub/superdiagonal entry)");

    // (1) theta fit with respect to the field generator
    EigenvalueSeq theta(pair.A.diagonal_entries());
    auto fit = fit_theta_params(theta);
    if (!fit) throw NotInFamilyError("diagonal of A is not of the closed eigenvalue form");

    // (2) orient q by the subdiagonal ratio
    FieldVector z(d + 1);  // z[i] for 1 <= i <= d
    for (int i = 1; i <= d; ++i) z[i] = pair.Astar(i, i - 1);
    RationalFunction ratio = z[2] / z[1];
    bool inverted;
    if (ratio == qp(-2)) {
        inverted = false;
    } else if (ratio == qp(2)) {
        inverted = true;
    } else {
        throw DegenerateZError();
    }
    auto hat = [&](long k) { return inverted ? qp(-k) : qp(k); };
    const RationalFunction a_w = inverted ? fit->a : fit->a_prime;  // plays a' in the formulas
    for (int i = 1; i <= d; ++i)
        if (z[i] != z[1] * hat(2 - 2 * i))
            throw NotInFamilyError("subdiagonal of A* is not geometric in q^2");

    // (3) c from z_1
    RationalFunction c = -z[1] * hat(1 - d);

    // (4) alpha* and s = b + b' from x_0, x_1
    auto correction = [&](int i) {
        return a_w * c * hat(d - 2 * i) *
               (hat(d + 1) + hat(-d - 1) - hat(d - 2 * i - 1) - hat(d - 2 * i + 1));
    };
    RationalFunction x0 = pair.Astar(0, 0) - correction(0);
    RationalFunction x1 = pair.Astar(1, 1) - correction(1);
    RationalFunction s = (x0 - x1) / (hat(d) - hat(d - 2));
    RationalFunction alpha_star = x0 - s * hat(d);

    // (5) p = b b' from y_1 via (b - t)(b' - t) = p - s t + t^2
    RationalFunction t = a_w * c * hat(d - 1);
    RationalFunction r = pair.Astar(0, 1) * c / ((hat(1) - hat(-1)) * (hat(d) - hat(-d)));
    RationalFunction p = r + s * t - t * t;

    // (6) verify every remaining entry
    for (int i = 0; i <= d; ++i)
        if (pair.Astar(i, i) != alpha_star + s * hat(d - 2 * i) + correction(i))
            throw NotInFamilyError("diagonal entry x_" + std::to_string(i) + " fails verification");
    for (int i = 1; i <= d; ++i) {
        RationalFunction u = a_w * c * hat(d - 2 * i + 1);
        RationalFunction want =
            (hat(i) - hat(-i)) * (hat(d - i + 1) - hat(i - d - 1)) * (p - s * u + u * u) / c;
        if (pair.Astar(i - 1, i) != want)
            throw NotInFamilyError("superdiagonal entry y_" + std::to_string(i) + " fails verification");
    }

    // (7) split b, b' when the discriminant is a square in Q(q)
    RecoveryResult out;
    out.q_inverted = inverted;
    out.alpha = fit->alpha;
    out.a = fit->a;
    out.a_prime = fit->a_prime;
    out.c = c;
    out.alpha_star = alpha_star;
    out.b_plus_bprime = s;
    out.b_times_bprime = p;
    RationalFunction disc = s * s - RationalFunction(4) * p;
    if (auto root = sqrt_exact(disc)) {
        RationalFunction half(Rational(1, 2));
        out.b_split = {(s + *root) * half, (s - *root) * half};
    } else {
        RationalFunction half(Rational(1, 2));
        out.b_split_ext = {QuadExtElement(s * half, half, disc),
                           QuadExtElement(s * half, -half, disc)};
    }
    return out;
}

EntrySeqs case_entry_forms(const ClosedFormParams& cf, CaseTag tag) {
    const int d = cf.d;
    if (d < 1) throw Error("case_entry_forms requires d >= 1");
    if (!cf.alpha.is_zero() || !cf.alpha_star.is_zero())
        throw CaseHypothesisViolatedError("the entry derivation assumes alpha = alpha* = 0");
    const RationalFunction &a = cf.a, &ap = cf.a_prime, &b = cf.b, &bp = cf.b_prime;

    const bool case2 = tag == CaseTag::AEqApQ2d2Sub1 || tag == CaseTag::AEqApQ2d2Sub2 ||
                       tag == CaseTag::AEqApQ2d2Sub3;
    const bool case3 = tag == CaseTag::ApEqAQ2d2Sub1 || tag == CaseTag::ApEqAQ2d2Sub2 ||
                       tag == CaseTag::ApEqAQ2d2Sub3;
    if (tag == CaseTag::Generic) {
        if (a == ap * qp(2 * d + 2) || ap == a * qp(2 * d + 2))
            throw CaseHypothesisViolatedError("generic case requires a != a' q^{2d+2} both ways");
    } else if (case2) {
        if (a != ap * qp(2 * d + 2) || a.is_zero())
            throw CaseHypothesisViolatedError("case requires a = a' q^{2d+2} with a != 0");
    } else if (case3) {
        if (ap != a * qp(2 * d + 2) || a.is_zero())
            throw CaseHypothesisViolatedError("case requires a' = a q^{2d+2} with a != 0");
    }

    EntrySeqs seqs;
    auto bracket = [&](int i) {
        return qp(d + 1) + qp(-d - 1) - qp(d - 2 * i - 1) - qp(d - 2 * i + 1);
    };

    switch (tag) {
    case CaseTag::Generic:
    case CaseTag::AEqApQ2d2Sub3:
    case CaseTag::ApEqAQ2d2Sub3: {
        const RationalFunction& c = cf.require_c();
        RationalFunction z1 = -c * qp(d - 1);
        // the z_1 coupling: a' z_1 q^{2-2i} written through the case hypothesis
        RationalFunction ap_eff = ap;
        for (int i = 0; i <= d; ++i)
            seqs.x.push_back((b + bp) * qp(d - 2 * i) - ap_eff * qp(1 - 2 * i) * bracket(i) * z1);
        for (int i = 1; i <= d; ++i) {
            RationalFunction g = ap_eff * z1 * qp(2 - 2 * i);
            seqs.y.push_back(qp(d - 1) * (qp(i) - qp(-i)) * (qp(i - d - 1) - qp(d - i + 1)) *
                             (b + g) * (bp + g) / z1);
            seqs.z.push_back(qp(2 - 2 * i) * z1);
        }
        break;
    }
    case CaseTag::AEqApQ2d2Sub1:
    case CaseTag::AEqApQ2d2Sub2: {
        const RationalFunction& xi = cf.require_xi();
        const RationalFunction& u = (tag == CaseTag::AEqApQ2d2Sub1) ? b : bp;
        for (int i = 0; i <= d; ++i)
            seqs.x.push_back(-qp(2 * d - 2 * i + 1) * xi / a + u * qp(-2 * i - 1) * bracket(i));
        for (int i = 1; i <= d; ++i) {
            RationalFunction inner = (tag == CaseTag::AEqApQ2d2Sub1)
                ? qp(d + 1) * xi + a * b * qp(-2 * i) + a * bp * qp(2 * i)
                : qp(d + 1) * xi + a * b * qp(2 * i) + a * bp * qp(-2 * i);
            seqs.y.push_back(qp(-d - 2 * i - 1) * (qp(i) - qp(-i)) * (qp(d - i + 1) - qp(i - d - 1)) * inner);
            seqs.z.push_back(-u * qp(2 * d - 2 * i + 2) / a);
        }
        break;
    }
    case CaseTag::ApEqAQ2d2Sub1:
    case CaseTag::ApEqAQ2d2Sub2: {
        const RationalFunction& xi = cf.require_xi();
        const RationalFunction& u = (tag == CaseTag::ApEqAQ2d2Sub1) ? b : bp;
        for (int i = 0; i <= d; ++i)
            seqs.x.push_back(-qp(-2 * i - 1) * xi / a + u * qp(2 * d - 2 * i + 1) * bracket(i));
        for (int i = 1; i <= d; ++i) {
            RationalFunction inner = (tag == CaseTag::ApEqAQ2d2Sub1)
                ? qp(-d - 1) * xi + a * b * qp(2 * d - 2 * i + 2) + a * bp * qp(2 * i - 2 * d - 2)
                : qp(-d - 1) * xi + a * b * qp(2 * i - 2 * d - 2) + a * bp * qp(2 * d - 2 * i + 2);
            seqs.y.push_back(qp(3 * d - 2 * i + 3) * (qp(i) - qp(-i)) * (qp(d - i + 1) - qp(i - d - 1)) * inner);
            seqs.z.push_back(-u * qp(-2 * i) / a);
        }
        break;
    }
    }
    return seqs;
}

}  // namespace leonard
