#include "hofa/rational.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hofa {

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    }
}

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat pow(const Rat& x, unsigned long e) {
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), e);
    return Rat(n, d);
}

long to_long(const BigInt& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("BigInt does not fit long");
    return n.get_si();
}

BigInt floor_int(const Rat& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

BigInt int_part(const Rat& x) {
    // k = ceil(x - 1/2): the unique integer with x - k in (-1/2, 1/2].
    BigInt num = 2 * x.num() - x.den();
    BigInt den = 2 * x.den();
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

Rat frac(const Rat& x) { return x - Rat(int_part(x)); }

Rat frac_unsigned(const Rat& x) { return x - Rat(floor_int(x)); }

Rat dist_circle(const Rat& x) { return frac(x).abs(); }

Mod1::Mod1(const Rat& x) : v_(frac(x)) {}

std::complex<double> Mod1::unit() const {
    double t = 2.0 * std::numbers::pi * v_.to_double();
    return {std::cos(t), std::sin(t)};
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rat();
    return c_[i];
}

Rat Poly::eval(const BigInt& n) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * Rat(n) + *it;
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::scaled(const Rat& c) const {
    std::vector<Rat> v(c_);
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

Poly Poly::shifted(const BigInt& h) const {
    // Horner in (n + h).
    Poly acc;
    Poly lin(std::vector<Rat>{Rat(h), Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * lin + Poly::constant(*it);
    return acc;
}

Poly Poly::dilated(const Rat& c) const {
    std::vector<Rat> v(c_);
    Rat p(1);
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] *= p;
        p *= c;
    }
    return Poly(std::move(v));
}

Rat c_infty_norm(const Poly& p, const BigInt& N) {
    if (N < 1) throw std::invalid_argument("c_infty_norm: N must be >= 1");
    Rat best;
    Rat npow(1);
    for (int i = 1; i <= p.degree(); ++i) {
        npow *= Rat(N);
        Rat v = npow * dist_circle(p.coeff(i));
        if (v > best) best = v;
    }
    return best;
}

Poly binomial_poly(int k) {
    Poly acc = Poly::constant(Rat(1));
    BigInt kfact(1);
    for (int j = 0; j < k; ++j) {
        acc = acc * Poly(std::vector<Rat>{Rat(-j), Rat(1)});
        kfact *= (j + 1);
    }
    return acc.scaled(Rat(BigInt(1), kfact));
}

Poly binomial_to_monomial(const std::vector<Rat>& b) {
    Poly acc;
    for (size_t k = 0; k < b.size(); ++k)
        acc = acc + binomial_poly(static_cast<int>(k)).scaled(b[k]);
    return acc;
}

std::vector<Rat> monomial_to_binomial(const Poly& p) {
    // Peel off leading binomial coefficients: C(n,k) has leading term n^k/k!.
    std::vector<Rat> out(p.degree() + 1);
    Poly rem = p;
    for (int k = p.degree(); k >= 0; --k) {
        BigInt kfact(1);
        for (int j = 2; j <= k; ++j) kfact *= j;
        Rat bk = rem.coeff(k) * Rat(kfact);
        out[k] = bk;
        rem = rem - binomial_poly(k).scaled(bk);
    }
    return out;
}

}  // namespace hofa
