#include <orbijet/cyclo.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include <orbijet/errors.hpp>

namespace orbijet
{

namespace
{

using QPoly = std::vector<Rational>;

void trim(QPoly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// Long division of integer polynomials by a monic divisor; the remainder must vanish.
std::vector<Integer> exact_monic_div(std::vector<Integer> num, const std::vector<Integer> &den)
{
    const auto dd = den.size() - 1;
    std::vector<Integer> quot(num.size() - dd);
    for (auto i = num.size(); i-- > dd;) {
        const Integer t = num[i];
        quot[i - dd] = t;
        if (t == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] -= t * den[j];
        }
    }
    return quot;
}

// Quotient and remainder in Q[z]; den nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly &den)
{
    trim(num);
    if (num.size() < den.size()) {
        return {QPoly{}, num};
    }
    const auto dd = den.size() - 1;
    QPoly quot(num.size() - dd);
    for (auto i = num.size(); i-- > dd;) {
        if (num[i] == 0) {
            continue;
        }
        Rational t = num[i] / den[dd];
        quot[i - dd] = t;
        for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] -= t * den[j];
        }
    }
    num.resize(dd);
    trim(num);
    trim(quot);
    return {quot, num};
}

QPoly mul(const QPoly &a, const QPoly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

QPoly sub(QPoly a, const QPoly &b)
{
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

// In-place reduction modulo the monic Phi_m, leaving exactly `degree` coefficients.
void reduce(std::vector<Rational> &c, const detail::CycField &f)
{
    const auto d = static_cast<std::size_t>(f.degree);
    for (auto i = c.size(); i-- > d;) {
        if (c[i] == 0) {
            continue;
        }
        const Rational t = c[i];
        for (std::size_t j = 0; j < d; ++j) {
            if (f.phi[j] != 0) {
                c[i - d + j] -= t * f.phi[j];
            }
        }
        c[i] = 0;
    }
    c.resize(d);
}

} // namespace

int euler_phi(int m)
{
    if (m < 1) {
        throw PreconditionError("euler_phi: order must be positive");
    }
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

std::vector<Integer> cyclotomic_poly(int m)
{
    if (m < 1) {
        throw PreconditionError("cyclotomic_poly: order must be positive");
    }
    std::vector<Integer> p(static_cast<std::size_t>(m) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d == 0) {
            p = exact_monic_div(std::move(p), cyclotomic_poly(d));
        }
    }
    return p;
}

namespace detail
{

const CycField &cyc_field(int order)
{
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<CycField>> cache;
    if (order < 1) {
        throw PreconditionError("cyclotomic order must be positive, got " + std::to_string(order));
    }
    std::lock_guard<std::mutex> lock(mtx);
    auto &slot = cache[order];
    if (!slot) {
        auto phi = cyclotomic_poly(order);
        const int deg = static_cast<int>(phi.size()) - 1;
        slot = std::make_unique<CycField>(CycField{order, deg, std::move(phi)});
    }
    return *slot;
}

} // namespace detail

CycScalar::CycScalar(int order) : field_(&detail::cyc_field(order)), coeffs_(static_cast<std::size_t>(field_->degree))
{
}

CycScalar::CycScalar(int order, const Rational &q) : CycScalar(order)
{
    coeffs_[0] = q;
}

CycScalar::CycScalar(int order, std::vector<Rational> power_coeffs)
    : field_(&detail::cyc_field(order)), coeffs_(std::move(power_coeffs))
{
    for (auto &c : coeffs_) {
        c.canonicalize();
    }
    reduce(coeffs_, *field_);
}

bool CycScalar::is_zero() const
{
    for (const auto &c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool CycScalar::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

bool CycScalar::is_one() const
{
    return is_rational() && coeffs_[0] == 1;
}

void CycScalar::check_compatible(const CycScalar &other) const
{
    if (field_ != other.field_) {
        throw IncompatibleField("cyclotomic orders differ: " + std::to_string(order()) + " vs "
                                + std::to_string(other.order()));
    }
}

CycScalar &CycScalar::operator+=(const CycScalar &other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

CycScalar &CycScalar::operator-=(const CycScalar &other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

CycScalar &CycScalar::operator*=(const Rational &q)
{
    for (auto &c : coeffs_) {
        c *= q;
    }
    return *this;
}

CycScalar &CycScalar::operator*=(const CycScalar &other)
{
    check_compatible(other);
    if (other.is_rational()) {
        return *this *= other.coeffs_[0];
    }
    if (is_rational()) {
        const Rational q = coeffs_[0];
        coeffs_ = other.coeffs_;
        return *this *= q;
    }
    auto prod = mul(coeffs_, other.coeffs_);
    reduce(prod, *field_);
    coeffs_ = std::move(prod);
    return *this;
}

CycScalar CycScalar::inverse() const
{
    if (is_zero()) {
        throw ArithmeticError("division by zero in Q(zeta_" + std::to_string(order()) + ")");
    }
    if (is_rational()) {
        return CycScalar(order(), 1 / coeffs_[0]);
    }
    // Extended Euclid against Phi_m, which is irreducible, so gcd is a nonzero constant.
    QPoly r0(field_->phi.begin(), field_->phi.end());
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0;
    QPoly s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const Rational lead = r1.at(0);
    for (auto &c : s1) {
        c /= lead;
    }
    return CycScalar(order(), std::move(s1));
}

CycScalar &CycScalar::operator/=(const CycScalar &other)
{
    check_compatible(other);
    return *this *= other.inverse();
}

CycScalar CycScalar::operator-() const
{
    CycScalar r(*this);
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

bool operator==(const CycScalar &a, const CycScalar &b)
{
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string CycScalar::str() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational &c = coeffs_[k];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << "zeta";
        if (k > 1) {
            os << "^" << k;
        }
    }
    return first ? std::string("0") : os.str();
}

std::ostream &operator<<(std::ostream &os, const CycScalar &c)
{
    return os << c.str();
}

CycScalar zeta_pow(int m, long k)
{
    if (m < 1) {
        throw PreconditionError("zeta_pow: order must be positive");
    }
    long r = k % m;
    if (r < 0) {
        r += m;
    }
    std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
    c[static_cast<std::size_t>(r)] = 1;
    return CycScalar(m, std::move(c));
}

CycScalar cyc_arith(const CycScalar &a, const CycScalar &b, CycOp op)
{
    switch (op) {
    case CycOp::add:
        return a + b;
    case CycOp::sub:
        return a - b;
    case CycOp::mul:
        return a * b;
    case CycOp::div:
        return a / b;
    }
    throw PreconditionError("cyc_arith: unknown operation");
}

} // namespace orbijet
