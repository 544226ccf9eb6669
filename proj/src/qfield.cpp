#include "leonard/qfield.hpp"

#include <atomic>
#include <algorithm>
#include <sstream>

namespace leonard {

namespace {
std::atomic<long> g_max_degree{4096};

void check_degree(long deg) {
    long cap = g_max_degree.load(std::memory_order_relaxed);
    if (deg > cap) throw DegreeCapError(deg, cap);
}
}  // namespace

long max_poly_degree() { return g_max_degree.load(std::memory_order_relaxed); }
void set_max_poly_degree(long cap) { g_max_degree.store(cap, std::memory_order_relaxed); }

Rational rational_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw Error("malformed rational: '" + s + "'");
    if (r.get_den() == 0) throw ZeroDenominatorError();
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly::Poly(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(long constant) {
    if (constant != 0) coeffs_.emplace_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::q() { return monomial(1); }

Poly Poly::monomial(unsigned k, const Rational& coeff) {
    Poly p;
    if (coeff == 0) return p;
    p.coeffs_.assign(k + 1, Rational(0));
    p.coeffs_[k] = coeff;
    return p;
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& Poly::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Rational Poly::coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    check_degree(degree() + o.degree());
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZeroError();
    Poly quo, rem = num;
    int dd = den.degree();
    if (rem.degree() >= dd) quo.coeffs_.assign(rem.degree() - dd + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Rational f = rem.leading() / den.leading();
        quo.coeffs_[k] = f;
        for (int i = 0; i <= dd; ++i) rem.coeffs_[k + i] -= f * den.coeffs_[i];
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

Poly Poly::divide_exact(const Poly& den) const {
    auto [quo, rem] = divrem(*this, den);
    if (!rem.is_zero()) throw Error("inexact polynomial division");
    return quo;
}

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending, trailing nonzero

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zmake_primitive(ZPoly& p) {
    mpz_class g = zcontent(p);
    if (g == 0 || g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly clear_denominators(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        mpz_class t = c.get_num() * (l / c.get_den());
        z.push_back(t);
    }
    return z;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    long e = static_cast<long>(a.size()) - b.size() + 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        mpz_class la = a.back();
        size_t k = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        ztrim(a);
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero() || b.is_zero()) {
        const Poly& p = a.is_zero() ? b : a;
        Poly m = p;
        Rational lc = p.leading();
        for (auto& c : m.coeffs_) c /= lc;
        return m;
    }
    // Primitive pseudo-remainder sequence over Z; keeps coefficients small
    // without fractions.
    ZPoly A = clear_denominators(a), B = clear_denominators(b);
    zmake_primitive(A);
    zmake_primitive(B);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        ZPoly R = zprem(A, B);
        zmake_primitive(R);
        A = std::move(B);
        B = std::move(R);
    }
    Poly g;
    g.coeffs_.reserve(A.size());
    for (const auto& c : A) g.coeffs_.emplace_back(c);
    Rational lc = g.leading();
    for (auto& c : g.coeffs_) c /= lc;  // monic
    return g;
}

Poly Poly::derivative() const {
    Poly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = coeffs_[i] * static_cast<long>(i);
    r.trim();
    return r;
}

Poly Poly::pow(unsigned long e) const {
    Poly r(1);
    Poly base = *this;
    while (e) {
        if (e & 1UL) r = r * base;
        e >>= 1UL;
        if (e) base = base * base;
    }
    return r;
}

Poly Poly::reversed() const {
    Poly r = *this;
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    r.trim();
    return r;
}

Rational Poly::evaluate(const Rational& q0) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * q0 + *it;
    return v;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.coeffs_.size(); i-- > 0;) {
        int c = cmp(a.coeffs_[i], b.coeffs_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ab == 1);
        if (i == 0) {
            os << ab.get_str();
        } else {
            if (!unit) os << ab.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunction
// ---------------------------------------------------------------------------

RationalFunction RationalFunction::normalized(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ZeroDenominatorError();
    if (num.is_zero()) return RationalFunction();
    Poly g = Poly::gcd(num, den);
    Poly n = num.divide_exact(g);
    Poly d = den.divide_exact(g);
    Rational lc = d.leading();
    if (lc != 1) {
        std::vector<Rational> nc = n.coeffs(), dc = d.coeffs();
        for (auto& c : nc) c /= lc;
        for (auto& c : dc) c /= lc;
        n = Poly(std::move(nc));
        d = Poly(std::move(dc));
    }
    return RationalFunction(std::move(n), std::move(d), 0);
}

RationalFunction RationalFunction::q_pow(long k) {
    if (k >= 0) return RationalFunction(Poly::monomial(static_cast<unsigned>(k)));
    return RationalFunction(Poly(1), Poly::monomial(static_cast<unsigned>(-k)), 0);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, 0);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return normalized(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    // Cross-cancel before multiplying to keep the gcds small.
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    Poly n = num_.divide_exact(g1) * o.num_.divide_exact(g2);
    Poly d = den_.divide_exact(g2) * o.den_.divide_exact(g1);
    return normalized(n, d);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.inverse();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    return normalized(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction r(1);
    RationalFunction base = *this;
    unsigned long u = static_cast<unsigned long>(e);
    while (u) {
        if (u & 1UL) r = r * base;
        u >>= 1UL;
        if (u) base = base * base;
    }
    return r;
}

int RationalFunction::compare(const RationalFunction& a, const RationalFunction& b) {
    int c = Poly::compare(a.num_, b.num_);
    if (c != 0) return c;
    return Poly::compare(a.den_, b.den_);
}

RationalFunction RationalFunction::invert_q() const {
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    int shift = den_.degree() - num_.degree();
    if (shift >= 0) {
        n = n * Poly::monomial(static_cast<unsigned>(shift));
    } else {
        d = d * Poly::monomial(static_cast<unsigned>(-shift));
    }
    return normalized(n, d);
}

Rational RationalFunction::eval_at(const Rational& q0) const {
    if (q0 == 0) throw PoleAtPointError("evaluation requires q0 != 0");
    Rational d = den_.evaluate(q0);
    if (d == 0) throw PoleAtPointError();
    return num_.evaluate(q0) / d;
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    std::string d = den_.to_string();
    if (num_.degree() > 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// square roots
// ---------------------------------------------------------------------------

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    const mpz_class num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

// Square root of a monic polynomial of even degree, by matching coefficients
// from the top; verifies the candidate before returning it.
std::optional<Poly> monic_sqrt(const Poly& p) {
    int deg = p.degree();
    if (deg % 2 != 0) return std::nullopt;
    int m = deg / 2;
    std::vector<Rational> s(m + 1, Rational(0));
    s[m] = 1;
    for (int j = 1; j <= m; ++j) {
        // coefficient of q^{2m-j} in s^2 must equal p[2m-j]
        Rational acc(0);
        for (int u = m - j + 1; u <= m; ++u) {
            int v = 2 * m - j - u;
            if (v > m || v < 0 || v <= m - j) continue;
            acc += s[u] * s[v];
        }
        s[m - j] = (p.coeff(2 * m - j) - acc) / 2;
    }
    Poly cand{std::vector<Rational>(s)};
    if (cand * cand == p) return cand;
    return std::nullopt;
}

}  // namespace

std::optional<RationalFunction> sqrt_exact(const RationalFunction& f) {
    if (f.is_zero()) return RationalFunction();
    Rational lc = f.num().leading();
    auto slc = rational_sqrt(lc);
    if (!slc) return std::nullopt;
    std::vector<Rational> nc = f.num().coeffs();
    for (auto& c : nc) c /= lc;
    auto sn = monic_sqrt(Poly(std::move(nc)));
    if (!sn) return std::nullopt;
    auto sd = monic_sqrt(f.den());
    if (!sd) return std::nullopt;
    Poly num = *sn;
    {
        std::vector<Rational> cs = num.coeffs();
        for (auto& c : cs) c *= *slc;
        num = Poly(std::move(cs));
    }
    // num and den are coprime, so their roots are too: already canonical.
    return RationalFunction::normalized(num, *sd);
}

// ---------------------------------------------------------------------------
// QuadExtElement
// ---------------------------------------------------------------------------

QuadExtElement::QuadExtElement(RationalFunction base, RationalFunction rad, RationalFunction disc)
    : base_(std::move(base)), rad_(std::move(rad)), disc_(std::move(disc)) {
    if (sqrt_exact(disc_)) throw SquareDiscriminantError();
}

QuadExtElement QuadExtElement::operator-() const { return {-base_, -rad_, disc_}; }

namespace {
void require_same_disc(const QuadExtElement& a, const QuadExtElement& b) {
    if (a.disc() != b.disc())
        throw Error("quadratic extension elements have different discriminants");
}
}  // namespace

QuadExtElement QuadExtElement::operator+(const QuadExtElement& o) const {
    require_same_disc(*this, o);
    return {base_ + o.base_, rad_ + o.rad_, disc_};
}

QuadExtElement QuadExtElement::operator-(const QuadExtElement& o) const {
    require_same_disc(*this, o);
    return {base_ - o.base_, rad_ - o.rad_, disc_};
}

QuadExtElement QuadExtElement::operator*(const QuadExtElement& o) const {
    require_same_disc(*this, o);
    return {base_ * o.base_ + rad_ * o.rad_ * disc_, base_ * o.rad_ + rad_ * o.base_, disc_};
}

QuadExtElement QuadExtElement::operator/(const QuadExtElement& o) const {
    require_same_disc(*this, o);
    RationalFunction n = o.norm();
    if (n.is_zero()) throw DivisionByZeroError();
    QuadExtElement t = *this * o.conjugate();
    return {t.base_ / n, t.rad_ / n, disc_};
}

QuadExtElement QuadExtElement::conjugate() const { return {base_, -rad_, disc_}; }

RationalFunction QuadExtElement::norm() const { return base_ * base_ - rad_ * rad_ * disc_; }

bool QuadExtElement::operator==(const QuadExtElement& o) const {
    return disc_ == o.disc_ && base_ == o.base_ && rad_ == o.rad_;
}

std::string QuadExtElement::to_string() const {
    return base_.to_string() + " + (" + rad_.to_string() + ")*sqrt(" + disc_.to_string() + ")";
}

}  // namespace leonard
