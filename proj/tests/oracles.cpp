#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <numbers>

namespace oracle
{

namespace
{

using Poly = std::vector<Integer>;

Poly mul(const Poly &a, const Poly &b)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Exact division by a polynomial with leading coefficient +-1.
Poly divide(Poly num, const Poly &den)
{
    Poly q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        const Integer c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[i + j] -= c * den[j];
        }
    }
    for (const auto &r : num) {
        if (r != 0) {
            throw std::logic_error("inexact division in oracle");
        }
    }
    return q;
}

int mobius(int n)
{
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    return n > 1 ? -mu : mu;
}

void add_into(Dense &s, long e, const JetPoly &c)
{
    auto it = s.find(e);
    if (it == s.end()) {
        s.emplace(e, c);
    } else {
        it->second += c;
    }
}

Dense convolve(const Dense &a, const Dense &b, long cut)
{
    Dense out;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            if (ea + eb <= cut) {
                add_into(out, ea + eb, ca * cb);
            }
        }
    }
    return out;
}

// sum of x[i,-e/m] t^{e/m} over e >= 0 with -e = alpha (mod m), e <= max.
Dense generator_series(int var, int alpha, int m, long max)
{
    Dense s;
    for (long e = 0; e <= max; ++e) {
        if (((-e - alpha) % m + m) % m == 0) {
            s.emplace(e, JetPoly::variable(m, JetVar{Alphabet::zero, var, -e}));
        }
    }
    return s;
}

JetPoly coefficient(const Dense &s, long e, int m)
{
    auto it = s.find(e);
    return it == s.end() ? JetPoly(m) : it->second;
}

Rational binom(const Rational &top, long k)
{
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (top - i);
        r /= (i + 1);
    }
    return r;
}

JetPoly partial(const JetPoly &p, const JetVar &v)
{
    JetPoly out(p.order());
    for (const auto &[mono, c] : p.terms()) {
        const int e = mono.exponent(v);
        if (e > 0) {
            out.add_term(mono.divided_by(v), c * CycScalar(p.order(), static_cast<long>(e)));
        }
    }
    return out;
}

} // namespace

std::vector<Integer> mobius_cyclotomic(int m)
{
    Poly num{1};
    Poly den{1};
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) {
            continue;
        }
        Poly f(static_cast<std::size_t>(d) + 1, 0);
        f[0] = -1;
        f[static_cast<std::size_t>(d)] = 1;
        const int mu = mobius(m / d);
        if (mu == 1) {
            num = mul(num, f);
        } else if (mu == -1) {
            den = mul(den, f);
        }
    }
    return divide(num, den);
}

std::complex<double> embed(const CycScalar &c)
{
    const int m = c.order();
    std::complex<double> z = 0;
    const auto &cs = c.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const double angle = 2 * std::numbers::pi * static_cast<double>(k) / m;
        z += cs[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
}

Dense naive_substitute(const JetPoly &p, std::vector<int> alpha, int m, long max_ticks)
{
    Dense total;
    for (const auto &[mono, c] : p.terms()) {
        Dense acc{{0, JetPoly::constant(m, c)}};
        for (const auto &[v, e] : mono.factors()) {
            const auto g = generator_series(v.var, alpha[static_cast<std::size_t>(v.var) - 1], m, max_ticks);
            for (int t = 0; t < e; ++t) {
                acc = convolve(acc, g, max_ticks);
            }
        }
        for (const auto &[e, q] : acc) {
            add_into(total, e, q);
        }
    }
    for (auto it = total.begin(); it != total.end();) {
        it = it->second.is_zero() ? total.erase(it) : std::next(it);
    }
    return total;
}

Dense naive_twisted_field(const JetPoly &a, std::vector<int> alpha, int m, long max_ticks)
{
    Dense total;
    for (const auto &[mono, c] : a.terms()) {
        long slack = 0;
        for (const auto &[v, e] : mono.factors()) {
            slack += e * (-v.level);
        }
        const long cut = max_ticks + slack;
        Dense acc{{0, JetPoly::constant(m, c)}};
        for (const auto &[v, e] : mono.factors()) {
            const long k = -v.level / m;
            const auto g = generator_series(v.var, alpha[static_cast<std::size_t>(v.var) - 1], m, cut + k * m + 1);
            // d_z^k / k! termwise
            Dense f;
            for (const auto &[ex, coef] : g) {
                Rational factor = binom(Rational(ex, m), k);
                factor.canonicalize();
                if (factor != 0) {
                    f.emplace(ex - k * m, coef * factor);
                }
            }
            for (int t = 0; t < e; ++t) {
                acc = convolve(acc, f, cut);
            }
        }
        for (const auto &[e, q] : acc) {
            if (e <= max_ticks) {
                add_into(total, e, q);
            }
        }
    }
    for (auto it = total.begin(); it != total.end();) {
        it = it->second.is_zero() ? total.erase(it) : std::next(it);
    }
    return total;
}

std::size_t dense_rank(const std::vector<JetPoly> &rows, int m)
{
    std::vector<Monomial> cols;
    for (const auto &r : rows) {
        for (const auto &[mono, c] : r.terms()) {
            if (std::find(cols.begin(), cols.end(), mono) == cols.end()) {
                cols.push_back(mono);
            }
        }
    }
    std::vector<std::vector<CycScalar>> mat;
    for (const auto &r : rows) {
        std::vector<CycScalar> row(cols.size(), CycScalar(m));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            auto it = r.terms().find(cols[j]);
            if (it != r.terms().end()) {
                row[j] = it->second;
            }
        }
        mat.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols.size() && rank < mat.size(); ++col) {
        std::size_t piv = rank;
        while (piv < mat.size() && mat[piv][col].is_zero()) {
            ++piv;
        }
        if (piv == mat.size()) {
            continue;
        }
        std::swap(mat[piv], mat[rank]);
        const CycScalar inv = mat[rank][col].inverse();
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (r == rank || mat[r][col].is_zero()) {
                continue;
            }
            const CycScalar f = mat[r][col] * inv;
            for (std::size_t j = col; j < cols.size(); ++j) {
                mat[r][j] -= f * mat[rank][j];
            }
        }
        ++rank;
    }
    return rank;
}

bool brute_borcherds(const JetPoly &a, const JetPoly &b, long m_idx, long n_idx, long k_idx, int cutoff)
{
    const int ord = a.order();
    const std::vector<int> zeros(8, 0);
    const long window = std::abs(m_idx) + std::abs(n_idx) + std::abs(k_idx) + cutoff + 2;
    std::map<JetPoly, Dense> fields;
    auto mode = [&](const JetPoly &x, long n) {
        if (-n - 1 < 0) {
            return JetPoly(ord);
        }
        auto it = fields.find(x);
        if (it == fields.end()) {
            it = fields.emplace(x, naive_twisted_field(x, zeros, ord, window * ord)).first;
        }
        return coefficient(it->second, (-n - 1) * ord, ord);
    };
    JetPoly lhs(ord);
    JetPoly rhs(ord);
    for (long j = 0; j <= cutoff; ++j) {
        lhs += mode(mode(a, n_idx + j) * b, m_idx + k_idx - j) * binom(Rational(m_idx), j);
        const Rational c = binom(Rational(n_idx), j) * ((j % 2 == 0) ? 1 : -1);
        const Rational sign = (n_idx % 2 == 0) ? 1 : -1;
        rhs += (mode(a, m_idx + n_idx - j) * mode(b, k_idx + j)
                - mode(b, n_idx + k_idx - j) * mode(a, m_idx + j) * sign)
               * c;
    }
    return lhs == rhs;
}

bool brute_twisted_borcherds(const JetPoly &a, const JetPoly &b, std::vector<int> alpha, int m, long l, long m_ticks,
                             long n_ticks, int cutoff)
{
    const std::vector<int> zeros(alpha.size(), 0);
    const long window = std::abs(l) * m + std::abs(m_ticks) + std::abs(n_ticks) + static_cast<long>(cutoff + 2) * m;
    std::map<JetPoly, Dense> untwisted;
    std::map<JetPoly, Dense> twisted;
    auto umode = [&](const JetPoly &x, long n) {
        if (-n - 1 < 0) {
            return JetPoly(m);
        }
        auto it = untwisted.find(x);
        if (it == untwisted.end()) {
            it = untwisted.emplace(x, naive_twisted_field(x, zeros, m, window)).first;
        }
        return coefficient(it->second, (-n - 1) * m, m);
    };
    auto tmode = [&](const JetPoly &x, long nt) {
        auto it = twisted.find(x);
        if (it == twisted.end()) {
            it = twisted.emplace(x, naive_twisted_field(x, alpha, m, window)).first;
        }
        return coefficient(it->second, -nt - m, m);
    };
    Rational m_val(m_ticks, m);
    m_val.canonicalize();
    const Rational sign_l = (l % 2 == 0) ? -1 : 1;
    JetPoly lhs(m);
    JetPoly rhs(m);
    for (long i = 0; i <= cutoff; ++i) {
        lhs += tmode(umode(a, l + i) * b, m_ticks + n_ticks - i * m) * binom(m_val, i);
        const Rational c = binom(Rational(l), i) * ((i % 2 == 0) ? 1 : -1);
        rhs += (tmode(a, l * m + m_ticks - i * m) * tmode(b, n_ticks + i * m)
                + tmode(b, l * m + n_ticks - i * m) * tmode(a, m_ticks + i * m) * sign_l)
               * c;
    }
    return lhs == rhs;
}

JetPoly literal_L(long a, const JetPoly &p)
{
    const int m = p.order();
    JetPoly out(m);
    for (const auto &v : p.variables()) {
        const long n = v.level + a * m;
        if (n < 0) {
            Rational c(-n, m);
            c.canonicalize();
            out += JetPoly::variable(m, JetVar{v.alphabet, v.var, n}) * partial(p, v) * c;
        }
    }
    return out;
}

JetPoly literal_Ltilde(long r, const JetPoly &p, int m)
{
    JetPoly out(m);
    for (const auto &v : p.variables()) {
        const long n = v.level + r * m;
        if (n < 0) {
            out += JetPoly::variable(m, JetVar{v.alphabet, v.var, n}) * partial(p, v) * Rational(-n);
        }
    }
    return out;
}

JetPoly random_poly(std::mt19937_64 &rng, int m, int k, int max_terms, int max_degree, int max_level)
{
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<int> var(1, k);
    std::uniform_int_distribution<int> level(0, max_level);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    JetPoly p(m);
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<Monomial::Factor> f;
        const int d = degree(rng);
        for (int j = 0; j < d; ++j) {
            f.emplace_back(JetVar{Alphabet::zero, var(rng), -static_cast<long>(level(rng)) * m}, 1);
        }
        int a = num(rng);
        if (a == 0) {
            a = 1;
        }
        Rational c(a, den(rng));
        c.canonicalize();
        p.add_term(Monomial(std::move(f)), CycScalar(m, c));
    }
    return p;
}

} // namespace oracle
