#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hofa {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(const BigInt& n) : q_(n) {}
    template <class U>
    Rat(const __gmp_expr<mpz_t, U>& e) : q_(BigInt(e)) {}
    Rat(const BigInt& num, const BigInt& den) : q_(num, den) { q_.canonicalize(); }
    Rat(long num, long den) : q_(num, den) { q_.canonicalize(); }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q" or "p".
    static Rat parse(const std::string& s);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    double to_double() const { return q_.get_d(); }

    /// Canonical "p/q" form ("p" when the value is an integer).
    std::string str() const;

  private:
    mpq_class q_;
};

Rat pow(const Rat& x, unsigned long e);

/// Throws if the value does not fit a long.
long to_long(const BigInt& n);

/// Nearest integer to x, with x - int_part(x) in (-1/2, 1/2].
BigInt int_part(const Rat& x);
/// floor(x).
BigInt floor_int(const Rat& x);

/// Residue mod 1 reduced into the signed window (-1/2, 1/2].
class Mod1 {
  public:
    Mod1() = default;
    /// Reduces an arbitrary rational into the window.
    explicit Mod1(const Rat& x);

    const Rat& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    Mod1 operator+(const Mod1& o) const { return Mod1(v_ + o.v_); }
    Mod1 operator-(const Mod1& o) const { return Mod1(v_ - o.v_); }
    Mod1 operator-() const { return Mod1(-v_); }
    friend bool operator==(const Mod1& a, const Mod1& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Mod1& a, const Mod1& b) { return a.v_ != b.v_; }

    /// exp(2*pi*i * value).
    std::complex<double> unit() const;

  private:
    Rat v_;  // invariant: -1/2 < v_ <= 1/2
};

/// Signed fractional part: x - int_part(x), in (-1/2, 1/2].
Rat frac(const Rat& x);
/// Unsigned variant in [0, 1). Kept for completeness; internal code uses the
/// signed window throughout.
Rat frac_unsigned(const Rat& x);
/// Circle distance ||x||_{R/Z} = |frac(x)| in [0, 1/2].
Rat dist_circle(const Rat& x);

/// Polynomial with exact rational coefficients in the monomial basis;
/// coefficient i multiplies n^i. Trailing zero coefficients are trimmed.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, int degree);

    const std::vector<Rat>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int i) const;
    bool is_zero() const { return c_.empty(); }

    Rat eval(const BigInt& n) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& c) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// p(n + h).
    Poly shifted(const BigInt& h) const;
    /// p(c * n).
    Poly dilated(const Rat& c) const;

  private:
    std::vector<Rat> c_;
};

/// Smoothness norm sup_{i>=1} N^i ||c_i||_{R/Z}; the constant term is
/// ignored and constant polynomials give 0.
Rat c_infty_norm(const Poly& p, const BigInt& N);

/// binomial(n, k) as a polynomial in n with rational coefficients.
Poly binomial_poly(int k);
/// Coefficients over the binomial basis sum_k b_k * C(n, k)  ->  monomial form.
Poly binomial_to_monomial(const std::vector<Rat>& b);
/// Monomial form -> coefficients over the binomial basis.
std::vector<Rat> monomial_to_binomial(const Poly& p);

}  // namespace hofa
