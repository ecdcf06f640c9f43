#ifndef ORBIJET_CYCLO_HPP
#define ORBIJET_CYCLO_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace orbijet
{

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail
{

// Immutable per-order data of Q(zeta_m); one instance per order, never freed.
struct CycField {
    int order;
    int degree;
    std::vector<Integer> phi; // Phi_m, low to high, monic
};

const CycField &cyc_field(int order);

} // namespace detail

// Euler totient.
int euler_phi(int m);

// The m-th cyclotomic polynomial, coefficients from the constant term up.
// Obtained by dividing z^m - 1 by Phi_d for every proper divisor d of m.
std::vector<Integer> cyclotomic_poly(int m);

// An element of Q(zeta_m), zeta_m = exp(2 pi i / m), stored in the power basis
// 1, zeta, ..., zeta^(phi(m)-1). The representation is canonical, so equality is
// coefficientwise. Values never change after construction except through the
// compound assignment operators.
class CycScalar
{
public:
    explicit CycScalar(int order = 1);
    CycScalar(int order, const Rational &q);
    CycScalar(int order, long q) : CycScalar(order, Rational(q)) {}
    // Arbitrary-length coefficient vector in powers of zeta; reduced mod Phi_m.
    CycScalar(int order, std::vector<Rational> power_coeffs);

    int order() const
    {
        return field_->order;
    }
    const std::vector<Rational> &coeffs() const
    {
        return coeffs_;
    }

    bool is_zero() const;
    bool is_one() const;
    // True if the value lies in Q.
    bool is_rational() const;
    // Only meaningful when is_rational().
    const Rational &rational_part() const
    {
        return coeffs_[0];
    }

    CycScalar inverse() const;

    CycScalar &operator+=(const CycScalar &other);
    CycScalar &operator-=(const CycScalar &other);
    CycScalar &operator*=(const CycScalar &other);
    CycScalar &operator*=(const Rational &q);
    CycScalar &operator/=(const CycScalar &other);

    friend CycScalar operator+(CycScalar a, const CycScalar &b)
    {
        return a += b;
    }
    friend CycScalar operator-(CycScalar a, const CycScalar &b)
    {
        return a -= b;
    }
    friend CycScalar operator*(CycScalar a, const CycScalar &b)
    {
        return a *= b;
    }
    friend CycScalar operator*(CycScalar a, const Rational &q)
    {
        return a *= q;
    }
    friend CycScalar operator/(CycScalar a, const CycScalar &b)
    {
        return a /= b;
    }
    CycScalar operator-() const;

    friend bool operator==(const CycScalar &a, const CycScalar &b);

    // e.g. "1/2 + 3*zeta - zeta^2"
    std::string str() const;

private:
    void check_compatible(const CycScalar &other) const;

    const detail::CycField *field_;
    std::vector<Rational> coeffs_;
};

std::ostream &operator<<(std::ostream &os, const CycScalar &c);

// zeta_m^k with k reduced mod m.
CycScalar zeta_pow(int m, long k);

enum class CycOp { add, sub, mul, div };

CycScalar cyc_arith(const CycScalar &a, const CycScalar &b, CycOp op);

} // namespace orbijet

#endif
