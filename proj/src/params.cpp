#include "leonard/params.hpp"

#include <algorithm>

namespace leonard {

namespace {
RationalFunction qp(long k) { return RationalFunction::q_pow(k); }
}

bool EigenvalueSeq::mutually_distinct() const {
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j]) return false;
    return true;
}

EigenvalueSeq EigenvalueSeq::reversed() const {
    FieldVector v(values.rbegin(), values.rend());
    return EigenvalueSeq(std::move(v));
}

EigenvalueSeq EigenvalueSeq::inverted_q() const {
    FieldVector v;
    v.reserve(values.size());
    for (const auto& x : values) v.push_back(x.invert_q());
    return EigenvalueSeq(std::move(v));
}

const RationalFunction& ClosedFormParams::require_xi() const {
    if (!xi) throw MissingXiError();
    return *xi;
}

const RationalFunction& ClosedFormParams::require_c() const {
    if (!c) throw MissingCError();
    if (c->is_zero()) throw ZeroCError();
    return *c;
}

EigenvalueSeq theta_closed_form(int d, const RationalFunction& alpha,
                                const RationalFunction& a, const RationalFunction& a_prime) {
    if (d < 1) throw Error("theta_closed_form requires d >= 1");
    FieldVector v;
    v.reserve(d + 1);
    for (int i = 0; i <= d; ++i)
        v.push_back(alpha + a * qp(2 * i - d) + a_prime * qp(d - 2 * i));
    return EigenvalueSeq(std::move(v));
}

std::optional<ThetaFit> fit_theta_params(const EigenvalueSeq& theta) {
    const int d = theta.d;
    if (d < 2) throw Error("fit_theta_params requires d >= 2");
    FieldMatrix m(3, 3);
    FieldVector rhs(3);
    for (int i = 0; i < 3; ++i) {
        m(i, 0) = RationalFunction(1);
        m(i, 1) = qp(2 * i - d);
        m(i, 2) = qp(d - 2 * i);
        rhs[i] = theta[i];
    }
    FieldVector sol = solve(m, rhs);  // always solvable: the powers are distinct
    ThetaFit fit{sol[0], sol[1], sol[2]};
    for (int i = 3; i <= d; ++i)
        if (theta[i] != fit.alpha + fit.a * qp(2 * i - d) + fit.a_prime * qp(d - 2 * i))
            return std::nullopt;
    return fit;
}

std::optional<RationalFunction> fundamental_beta(const EigenvalueSeq& theta) {
    const int d = theta.d;
    if (d < 3) throw Error("fundamental_beta requires d >= 3");
    for (int i = 2; i <= d - 1; ++i)
        if (theta[i - 1] == theta[i]) return std::nullopt;
    RationalFunction ratio = (theta[0] - theta[3]) / (theta[1] - theta[2]);
    for (int i = 3; i <= d - 1; ++i)
        if (theta[i - 2] - theta[i + 1] != ratio * (theta[i - 1] - theta[i]))
            return std::nullopt;
    return ratio - RationalFunction(1);
}

std::pair<RationalFunction, RationalFunction> gamma_rho(const EigenvalueSeq& theta,
                                                        const RationalFunction& beta) {
    const int d = theta.d;
    if (d < 2) throw Error("gamma_rho requires d >= 2");
    RationalFunction gamma = theta[0] - beta * theta[1] + theta[2];
    for (int i = 2; i <= d - 1; ++i)
        if (theta[i - 1] - beta * theta[i] + theta[i + 1] != gamma) throw NotRecurrentError();
    RationalFunction rho = theta[0] * theta[0] - beta * theta[0] * theta[1] +
                           theta[1] * theta[1] - gamma * (theta[0] + theta[1]);
    for (int i = 2; i <= d; ++i) {
        RationalFunction r = theta[i - 1] * theta[i - 1] - beta * theta[i - 1] * theta[i] +
                             theta[i] * theta[i] - gamma * (theta[i - 1] + theta[i]);
        if (r != rho) throw NotRecurrentError();
    }
    return {gamma, rho};
}

std::pair<RationalFunction, RationalFunction> theta_extensions(const EigenvalueSeq& theta,
                                                               const RationalFunction& beta,
                                                               const RationalFunction& gamma) {
    const int d = theta.d;
    RationalFunction before = gamma + beta * theta[0] - theta[1];
    RationalFunction after = gamma + beta * theta[d] - theta[d - 1];
    return {before, after};
}

std::vector<FieldVector> standard_orderings(const FieldVector& values) {
    const int n = static_cast<int>(values.size());
    const int d = n - 1;
    if (d < 3) throw Error("standard_orderings requires d >= 3");
    FieldVector sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i + 1 < n; ++i)
        if (sorted[i] == sorted[i + 1]) throw Error("standard_orderings requires distinct values");

    std::vector<FieldVector> out;
    std::vector<int> idx(n);
    for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2) {
                if (i1 == i0 || i2 == i0 || i2 == i1) continue;
                for (int i3 = 0; i3 < n; ++i3) {
                    if (i3 == i0 || i3 == i1 || i3 == i2) continue;
                    const RationalFunction ratio =
                        (sorted[i0] - sorted[i3]) / (sorted[i1] - sorted[i2]);
                    FieldVector seq{sorted[i0], sorted[i1], sorted[i2], sorted[i3]};
                    std::vector<bool> used(n, false);
                    used[i0] = used[i1] = used[i2] = used[i3] = true;
                    bool ok = true;
                    while (static_cast<int>(seq.size()) < n) {
                        size_t m = seq.size();
                        RationalFunction next =
                            seq[m - 3] - ratio * seq[m - 2] + ratio * seq[m - 1];
                        bool found = false;
                        for (int k = 0; k < n; ++k) {
                            if (used[k] || sorted[k] != next) continue;
                            used[k] = true;
                            seq.push_back(sorted[k]);
                            found = true;
                            break;
                        }
                        if (!found) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) out.push_back(std::move(seq));
                }
            }
    return out;
}

std::pair<FieldVector, FieldVector> vphi_phi_closed(const ClosedFormParams& cf) {
    const RationalFunction& xi = cf.require_xi();
    const int d = cf.d;
    FieldVector vphi, phi;
    for (int i = 1; i <= d; ++i) {
        RationalFunction outer = (qp(i) - qp(-i)) * (qp(i - d - 1) - qp(d - i + 1));
        vphi.push_back(outer * (xi + cf.a * cf.b * qp(2 * i - d - 1) +
                                cf.a_prime * cf.b_prime * qp(d - 2 * i + 1)));
        phi.push_back(outer * (xi + cf.a_prime * cf.b * qp(2 * i - d - 1) +
                               cf.a * cf.b_prime * qp(d - 2 * i + 1)));
    }
    return {vphi, phi};
}

std::pair<FieldVector, FieldVector> vphi_phi_c_form(const ClosedFormParams& cf) {
    const RationalFunction& c = cf.require_c();
    const int d = cf.d;
    FieldVector vphi, phi;
    for (int i = 1; i <= d; ++i) {
        RationalFunction outer = (qp(i) - qp(-i)) * (qp(d - i + 1) - qp(i - d - 1));
        vphi.push_back(outer * (cf.b - cf.a_prime * c * qp(d - 2 * i + 1)) *
                       (cf.b_prime - cf.a * c * qp(2 * i - d - 1)) / c);
        phi.push_back(outer * (cf.b - cf.a * c * qp(d - 2 * i + 1)) *
                      (cf.b_prime - cf.a_prime * c * qp(2 * i - d - 1)) / c);
    }
    return {vphi, phi};
}

std::vector<ArrayViolation> check_parameter_array(const ParameterArray& p) {
    const int d = p.d;
    if (p.theta.d != d || p.theta_star.d != d ||
        static_cast<int>(p.varphi.size()) != d || static_cast<int>(p.phi.size()) != d)
        throw SizeMismatchError("parameter array sequence lengths inconsistent with d");
    std::vector<ArrayViolation> bad;

    // (i) eigenvalues mutually distinct
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            if (p.theta[i] == p.theta[j])
                bad.push_back({1, j, "theta_" + std::to_string(i) + " = theta_" + std::to_string(j)});
            if (p.theta_star[i] == p.theta_star[j])
                bad.push_back({1, j, "theta*_" + std::to_string(i) + " = theta*_" + std::to_string(j)});
        }

    // (ii) split entries nonzero
    for (int i = 1; i <= d; ++i) {
        if (p.varphi[i - 1].is_zero())
            bad.push_back({2, i, "varphi_" + std::to_string(i) + " = 0"});
        if (p.phi[i - 1].is_zero())
            bad.push_back({2, i, "phi_" + std::to_string(i) + " = 0"});
    }

    // (iii), (iv): need theta_0 != theta_d to form the sums
    if (p.theta[0] != p.theta[d]) {
        RationalFunction denom = p.theta[0] - p.theta[d];
        RationalFunction sum;
        for (int i = 1; i <= d; ++i) {
            sum += (p.theta[i - 1] - p.theta[d - i + 1]) / denom;
            RationalFunction want3 =
                p.phi[0] * sum + (p.theta_star[i] - p.theta_star[0]) * (p.theta[i - 1] - p.theta[d]);
            if (p.varphi[i - 1] != want3)
                bad.push_back({3, i, "varphi_" + std::to_string(i) + " fails condition (iii)"});
            RationalFunction want4 =
                p.varphi[0] * sum + (p.theta_star[i] - p.theta_star[0]) * (p.theta[d - i + 1] - p.theta[0]);
            if (p.phi[i - 1] != want4)
                bad.push_back({4, i, "phi_" + std::to_string(i) + " fails condition (iv)"});
        }
    }

    // (v) the two expressions agree and are constant; cross-multiplied form
    for (int i = 2; i <= d - 1; ++i) {
        RationalFunction lhs = (p.theta[i - 2] - p.theta[i + 1]) * (p.theta_star[i - 1] - p.theta_star[i]);
        RationalFunction rhs = (p.theta_star[i - 2] - p.theta_star[i + 1]) * (p.theta[i - 1] - p.theta[i]);
        if (lhs != rhs) bad.push_back({5, i, "theta / theta* ratios differ at i = " + std::to_string(i)});
        if (i > 2) {
            RationalFunction c1 = (p.theta[i - 3] - p.theta[i]) * (p.theta[i - 1] - p.theta[i]);
            RationalFunction c2 = (p.theta[i - 2] - p.theta[i + 1]) * (p.theta[i - 2] - p.theta[i - 1]);
            if (c1 != c2)
                bad.push_back({5, i, "theta ratio not constant at i = " + std::to_string(i)});
        }
    }
    return bad;
}

RationalFunction xi_from_c(const RationalFunction& a, const RationalFunction& a_prime,
                           const RationalFunction& b, const RationalFunction& b_prime,
                           const RationalFunction& c) {
    if (c.is_zero()) throw ZeroCError();
    return -(a * a_prime * c) - b * b_prime / c;
}

QuadraticRoots c_from_xi(const RationalFunction& a, const RationalFunction& a_prime,
                         const RationalFunction& b, const RationalFunction& b_prime,
                         const RationalFunction& xi) {
    RationalFunction lead = a * a_prime;         // coefficient of c^2
    RationalFunction constant = b * b_prime;     // constant term
    QuadraticRoots out;
    if (lead.is_zero()) {
        if (xi.is_zero()) {
            if (constant.is_zero()) throw UnderdeterminedError();
            throw NoNonzeroRootError();
        }
        RationalFunction root = -constant / xi;
        if (root.is_zero()) throw NoNonzeroRootError();
        out.base_roots.push_back(root);
        return out;
    }
    RationalFunction disc = xi * xi - RationalFunction(4) * lead * constant;
    auto s = sqrt_exact(disc);
    if (!s) {
        RationalFunction half = RationalFunction(1) / (RationalFunction(2) * lead);
        out.ext_roots = {QuadExtElement(-xi * half, half, disc),
                         QuadExtElement(-xi * half, -half, disc)};
        return out;
    }
    RationalFunction two_lead = RationalFunction(2) * lead;
    for (const RationalFunction& root :
         {(-xi + *s) / two_lead, (-xi - *s) / two_lead}) {
        if (root.is_zero()) continue;
        if (std::find(out.base_roots.begin(), out.base_roots.end(), root) == out.base_roots.end())
            out.base_roots.push_back(root);
    }
    if (out.base_roots.empty()) throw NoNonzeroRootError();
    return out;
}

FieldMatrix split_basis(const ClosedFormParams& cf) {
    const RationalFunction& c = cf.require_c();
    const int d = cf.d;
    FieldMatrix u(d + 1, d + 1);
    for (int r = 0; r <= d; ++r)
        for (int i = 0; i <= d; ++i) {
            RationalFunction t = ((r + i) % 2 ? RationalFunction(-1) : RationalFunction(1)) *
                                 c.pow(i - r) * qp(static_cast<long>(d + r - i) * (d - r + i - 1) / 2);
            for (int h = 0; h <= d + r - i - 1; ++h) t *= qp(d - h) - qp(h - d);
            for (int h = 0; h <= r - 1; ++h) t *= cf.b_prime - cf.a * c * qp(2 * h - d + 1);
            for (int h = 0; h <= d - i - 1; ++h) t *= cf.b_prime - cf.a_prime * c * qp(2 * h - d + 1);
            u(i, r) = t;
        }
    for (int r = 0; r <= d; ++r)
        if (u(r, r).is_zero())
            throw ConditionsViolatedError("split basis is singular: a construction inequality fails");
    return u;
}

namespace {

FieldVector normalized_first_one(FieldVector v) {
    for (auto& x : v) {
        if (x.is_zero()) continue;
        RationalFunction inv = x.inverse();
        for (auto& y : v) y = y * inv;
        break;
    }
    return v;
}

bool all_zero(const FieldVector& v) {
    return std::all_of(v.begin(), v.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

// One-dimensional intersection
//   X_r = span(pa columns r..d)  /\  span(pb columns 0..r),
// computed through the transition matrix t = pa^-1 pb: a vector pb * y with
// y supported on 0..r lies in the first span iff the leading r coordinates of
// t * y vanish, so X_r corresponds to the kernel of the r x (r+1) leading
// submatrix of t. Throws when the dimension is not 1.
FieldVector intersect_spans(const FieldMatrix& pb, const FieldMatrix& t, int r) {
    const int n = static_cast<int>(pb.rows());
    FieldMatrix s(r, r + 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j <= r; ++j) s(i, j) = t(i, j);
    auto kernel = nullspace(s);
    if (kernel.size() != 1)
        throw NotALeonardPairError("split space has dimension " + std::to_string(kernel.size()));
    FieldVector v(n);
    for (int i = 0; i < n; ++i) {
        RationalFunction acc;
        for (int j = 0; j <= r; ++j) acc += pb(i, j) * kernel[0][static_cast<size_t>(j)];
        v[i] = acc;
    }
    if (all_zero(v)) throw NotALeonardPairError("split space intersection is trivial");
    return normalized_first_one(std::move(v));
}

// pa^-1 pb, exploiting the triangularity of an eigenbasis of a
// lower-bidiagonal matrix when available.
FieldMatrix transition_matrix(const FieldMatrix& pa, const FieldMatrix& pb) {
    const size_t n = pa.rows();
    bool lower = true;
    for (size_t i = 0; i < n && lower; ++i) {
        if (pa(i, i).is_zero()) lower = false;
        for (size_t j = i + 1; j < n && lower; ++j)
            if (!pa(i, j).is_zero()) lower = false;
    }
    if (lower) {
        FieldMatrix x(n, n);
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) {
                RationalFunction acc = pb(i, j);
                for (size_t k = 0; k < i; ++k) acc -= pa(i, k) * x(k, j);
                x(i, j) = acc / pa(i, i);
            }
        return x;
    }
    return inverse(pa) * pb;
}

// First split sequence for the ordering (theta, theta*); certifies the split
// shapes along the way.
FieldVector first_split_sequence(const FieldMatrix& a, const FieldMatrix& astar,
                                 const EigenvalueSeq& theta, const EigenvalueSeq& theta_star) {
    const int d = theta.d;
    const size_t n = a.rows();
    FieldMatrix pa, pas;
    try {
        pa = eigenbasis_for(a, theta.values);
        pas = eigenbasis_for(astar, theta_star.values);
    } catch (const Error& e) {
        throw NotALeonardPairError(std::string("eigenbasis construction failed: ") + e.what());
    }

    FieldMatrix t = transition_matrix(pa, pas);
    std::vector<FieldVector> x(d + 1);
    for (int r = 0; r <= d; ++r) x[r] = intersect_spans(pas, t, r);

    // u-chain: u_0 spans X_0, u_{r+1} = (A - theta_r) u_r must span X_{r+1}.
    std::vector<FieldVector> u(d + 1);
    u[0] = x[0];
    for (int r = 1; r <= d; ++r) {
        FieldVector prev = u[r - 1];
        FieldVector next = a * prev;
        for (size_t i = 0; i < n; ++i) next[i] -= theta[r - 1] * prev[i];
        if (all_zero(next)) throw NotALeonardPairError("split chain terminated early");
        if (normalized_first_one(next) != x[r])
            throw NotALeonardPairError("split chain leaves the intersection space");
        u[r] = next;
    }
    {   // chain must terminate: (A - theta_d) u_d = 0
        FieldVector tail = a * u[d];
        for (size_t i = 0; i < n; ++i) tail[i] -= theta[d] * u[d][i];
        if (!all_zero(tail)) throw NotALeonardPairError("split chain does not terminate");
    }

    FieldMatrix basis(n, n);
    for (int r = 0; r <= d; ++r)
        for (size_t i = 0; i < n; ++i) basis(i, r) = u[r][i];

    FieldMatrix ca, cas;
    try {
        ca = conjugate(a, basis);
        cas = conjugate(astar, basis);
    } catch (const SingularMatrixError&) {
        throw NotALeonardPairError("split vectors are linearly dependent");
    }
    // exact shape verification
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            const RationalFunction& va = ca(i, j);
            if (i == j ? va != theta[i]
                       : (i == j + 1 ? !va.is_one() : !va.is_zero()))
                throw NotALeonardPairError("conjugated A is not in split form");
            const RationalFunction& vs = cas(i, j);
            if (i == j) {
                if (vs != theta_star[i]) throw NotALeonardPairError("conjugated A* diagonal mismatch");
            } else if (j != i + 1 && !vs.is_zero()) {
                throw NotALeonardPairError("conjugated A* is not upper bidiagonal");
            }
        }
    FieldVector vphi;
    for (int i = 1; i <= d; ++i) {
        if (cas(i - 1, i).is_zero())
            throw NotALeonardPairError("split sequence has a zero entry");
        vphi.push_back(cas(i - 1, i));
    }
    return vphi;
}

}  // namespace

std::pair<FieldVector, FieldVector> split_sequences_of(const FieldMatrix& a,
                                                       const FieldMatrix& astar,
                                                       const EigenvalueSeq& theta,
                                                       const EigenvalueSeq& theta_star) {
    if (!a.is_square() || !astar.is_square()) throw NotSquareError();
    if (a.rows() != astar.rows() || a.rows() != theta.values.size() ||
        theta.values.size() != theta_star.values.size())
        throw SizeMismatchError("split_sequences_of dimension mismatch");
    FieldVector vphi = first_split_sequence(a, astar, theta, theta_star);
    FieldVector phi = first_split_sequence(a, astar, theta.reversed(), theta_star);
    return {vphi, phi};
}

std::pair<FieldMatrix, FieldMatrix> translate(const FieldMatrix& a, const FieldMatrix& astar,
                                              const RationalFunction& alpha,
                                              const RationalFunction& alpha_star) {
    if (!a.is_square() || !astar.is_square()) throw NotSquareError();
    FieldMatrix ta = a + FieldMatrix::identity(a.rows()) * alpha;
    FieldMatrix tas = astar + FieldMatrix::identity(astar.rows()) * alpha_star;
    return {ta, tas};
}

}  // namespace leonard
