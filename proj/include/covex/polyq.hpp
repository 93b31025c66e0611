#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace covex {

using Int = mpz_class;

// Polynomial in q with arbitrary-precision integer coefficients.
// coeffs()[i] is the coefficient of q^i; trailing zeros are never stored,
// so the zero polynomial has no coefficients.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Int> coeffs);
    QPoly(std::initializer_list<long> coeffs);

    static QPoly constant(long c);
    static QPoly monomial(const Int& c, int k);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int i) const;

    QPoly shifted(int k) const;  // multiply by q^k, k >= 0
    Int eval(long x) const;
    bool nonnegative() const;

    QPoly& operator+=(const QPoly& r);
    QPoly& operator-=(const QPoly& r);
    QPoly& operator*=(const QPoly& r);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    // Canonical rendering, e.g. "q^3 + 2*q^2 + 2*q + 1".
    std::string str() const;
    // Inverse of str(). Throws ValidationError on malformed text.
    static QPoly parse(std::string_view text);

private:
    void trim();
    std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

QPoly add(const QPoly& p, const QPoly& r);
QPoly mul(const QPoly& p, const QPoly& r);

// Gaussian binomial [alpha beta]_q. Zero when beta < 0 or alpha < beta.
QPoly q_binomial(int alpha, int beta);

}  // namespace covex
