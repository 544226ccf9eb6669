#ifndef LEONARD_QFIELD_HPP
#define LEONARD_QFIELD_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leonard/errors.hpp"

namespace leonard {

/// Exact rational scalar (arbitrary precision).
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);

/// Degree cap for intermediate polynomials; multiplication beyond the cap
/// throws DegreeCapError. Settable via the LEONARD_MAX_DEGREE env var in the CLI.
long max_poly_degree();
void set_max_poly_degree(long cap);

/**
 * Univariate polynomial in q with exact rational coefficients, stored in
 * ascending powers. Canonical form: trailing coefficient nonzero; the zero
 * polynomial is the empty coefficient vector.
 */
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Poly(long constant);             // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);

    static Poly q();                               // the generator
    static Poly monomial(unsigned k, const Rational& coeff = 1);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(size_t k) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division over Q[q]; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);
    /// Exact division; throws if the remainder is nonzero.
    Poly divide_exact(const Poly& den) const;

    /// Monic gcd via a primitive (fraction-free) pseudo-remainder sequence
    /// over the integers. gcd(0, 0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    Poly derivative() const;
    Poly pow(unsigned long e) const;
    /// Coefficients reversed: p_rev(q) = q^deg(p) * p(1/q). Zero maps to zero.
    Poly reversed() const;
    Rational evaluate(const Rational& q0) const;

    /// Total order for containers and deterministic output; compares degree
    /// first, then coefficients from the top.
    static int compare(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/**
 * Element of Q(q): a canonical fraction num/den of Poly with
 * gcd(num, den) = 1, den monic, zero represented as 0/1.
 *
 * Immutable after construction; all operations are pure, so values can be
 * shared freely across threads.
 */
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Rational& r) : num_(r), den_(1) {}  // NOLINT
    RationalFunction(long n) : num_(n), den_(1) {}             // NOLINT
    RationalFunction(const Poly& p) : num_(p), den_(1) {}      // NOLINT

    /// Canonicalizing constructor; throws ZeroDenominatorError if den = 0.
    static RationalFunction normalized(const Poly& num, const Poly& den);

    static RationalFunction q() { return RationalFunction(Poly::q()); }
    /// q^k for any integer k (negative exponents allowed).
    static RationalFunction q_pow(long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;  // throws DivisionByZeroError
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const;
    RationalFunction pow(long e) const;

    /// Equality is structural; canonical form makes it decide field equality.
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }
    static int compare(const RationalFunction& a, const RationalFunction& b);
    bool operator<(const RationalFunction& o) const { return compare(*this, o) < 0; }

    /// The q -> q^-1 automorphism; an involution.
    RationalFunction invert_q() const;

    /// Exact value at a rational point; q0 = 0 is outside the domain.
    Rational eval_at(const Rational& q0) const;

    std::string to_string() const;

private:
    RationalFunction(Poly num, Poly den, int /*canonical_tag*/)
        : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_, den_;
};

/// Square root in Q(q) if one exists; sign convention: the numerator of the
/// root has positive leading coefficient. NotASquare is the nullopt outcome.
std::optional<RationalFunction> sqrt_exact(const RationalFunction& f);

inline RationalFunction invert_q(const RationalFunction& f) { return f.invert_q(); }

/**
 * Element base + rad * sqrt(disc) of a quadratic extension of Q(q).
 * The adjoined discriminant must not be a square in Q(q); arithmetic is
 * closed via (sqrt disc)^2 = disc and requires matching discriminants.
 */
class QuadExtElement {
public:
    QuadExtElement(RationalFunction base, RationalFunction rad, RationalFunction disc);

    const RationalFunction& base() const { return base_; }
    const RationalFunction& rad() const { return rad_; }
    const RationalFunction& disc() const { return disc_; }

    bool in_base_field() const { return rad_.is_zero(); }

    QuadExtElement operator-() const;
    QuadExtElement operator+(const QuadExtElement& o) const;
    QuadExtElement operator-(const QuadExtElement& o) const;
    QuadExtElement operator*(const QuadExtElement& o) const;
    QuadExtElement operator/(const QuadExtElement& o) const;
    QuadExtElement conjugate() const;
    /// base^2 - rad^2 * disc, the product with the conjugate.
    RationalFunction norm() const;
    bool operator==(const QuadExtElement& o) const;

    std::string to_string() const;

private:
    RationalFunction base_, rad_, disc_;
};

}  // namespace leonard

#endif
