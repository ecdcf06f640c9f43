#include <orbijet/va.hpp>

#include <algorithm>

#include <orbijet/errors.hpp>

namespace orbijet
{

namespace
{

std::string pair_inputs(const JetPoly &a, const JetPoly &b)
{
    return "a=" + a.str() + ", b=" + b.str();
}

CheckResult compare(std::string name, std::string inputs, const JetPoly &lhs, const JetPoly &rhs)
{
    CheckResult r{std::move(name), std::move(inputs), lhs == rhs, std::nullopt};
    if (!r.pass) {
        r.witness = "lhs - rhs = " + (lhs - rhs).str();
    }
    return r;
}

CheckResult compare_series(std::string name, std::string inputs, const PuiseuxSeries &lhs, const PuiseuxSeries &rhs)
{
    CheckResult r{std::move(name), std::move(inputs), lhs.agrees_with(rhs), std::nullopt};
    if (!r.pass) {
        const long t = std::min(lhs.trunc_ticks(), rhs.trunc_ticks());
        r.witness = "lhs - rhs = " + (lhs.truncated(t) - rhs.truncated(t)).str();
    }
    return r;
}

} // namespace

PuiseuxSeries vertex_op(const JetPoly &a, int max_exponent)
{
    if (max_exponent < 0) {
        throw PreconditionError("vertex_op: window must be nonnegative");
    }
    const int m = a.order();
    PuiseuxSeries s(m, static_cast<long>(max_exponent) * m);
    JetPoly cur = a;
    for (int n = 0; n <= max_exponent; ++n) {
        if (n > 0) {
            cur = derivation_T(cur) * Rational(1, n);
        }
        s.add_term(static_cast<long>(n) * m, cur);
    }
    return s;
}

JetPoly mode(const JetPoly &a, long n, int window)
{
    if (n >= 0) {
        return JetPoly(a.order());
    }
    const long power = -n - 1;
    if (power > window) {
        throw WindowExceeded("mode a_(" + std::to_string(n) + ") needs z^" + std::to_string(power)
                             + " beyond window " + std::to_string(window));
    }
    return divided_T_power(a, static_cast<int>(power));
}

JetPoly ModeCache::mode(const JetPoly &a, long n)
{
    if (n >= 0) {
        return JetPoly(a.order());
    }
    const long power = -n - 1;
    if (power > window_) {
        throw WindowExceeded("mode a_(" + std::to_string(n) + ") needs z^" + std::to_string(power)
                             + " beyond window " + std::to_string(window_));
    }
    auto &seq = powers_[a];
    if (seq.empty()) {
        seq.push_back(a);
    }
    while (static_cast<long>(seq.size()) <= power) {
        const auto j = static_cast<long>(seq.size());
        seq.push_back(derivation_T(seq.back()) * Rational(1, j));
    }
    return seq[static_cast<std::size_t>(power)];
}

CheckResult check_borcherds(ModeCache &cache, const JetPoly &a, const JetPoly &b, long m_idx, long n_idx, long k_idx)
{
    const int ord = a.order();
    // a_(n+j) b vanishes once n + j >= 0; binom(m, j) vanishes for j > m >= 0.
    JetPoly lhs(ord);
    long lhs_last = -n_idx - 1;
    if (m_idx >= 0) {
        lhs_last = std::min(lhs_last, m_idx);
    }
    for (long j = 0; j <= lhs_last; ++j) {
        const JetPoly inner = cache.mode(a, n_idx + j) * b;
        if (inner.is_zero()) {
            continue;
        }
        lhs +=cache.mode(inner, m_idx + k_idx - j) * binomial(Rational(m_idx), j);
    }

    // For n < 0 the first product needs k + j <= -1 and the second m + j <= -1.
    JetPoly rhs(ord);
    const long rhs_last = n_idx >= 0 ? n_idx : std::max(-k_idx - 1, -m_idx - 1);
    const Rational sign_n = (n_idx % 2 == 0) ? 1 : -1;
    for (long j = 0; j <= rhs_last; ++j) {
        Rational c = binomial(Rational(n_idx), j);
        if (j % 2 != 0) {
            c = -c;
        }
        if (c == 0) {
            continue;
        }
        JetPoly term(ord);
        if (k_idx + j < 0 && m_idx + n_idx - j < 0) {
            term += cache.mode(a, m_idx + n_idx - j) * cache.mode(b, k_idx + j);
        }
        if (m_idx + j < 0 && n_idx + k_idx - j < 0) {
            term -= cache.mode(b, n_idx + k_idx - j) * cache.mode(a, m_idx + j) * sign_n;
        }
        rhs += term * c;
    }
    return compare("borcherds",
                   pair_inputs(a, b) + ", (m,n,k)=(" + std::to_string(m_idx) + "," + std::to_string(n_idx) + ","
                       + std::to_string(k_idx) + ")",
                   lhs, rhs);
}

CheckResult check_borcherds(const JetPoly &a, const JetPoly &b, long m_idx, long n_idx, long k_idx, int window)
{
    ModeCache cache(window);
    return check_borcherds(cache, a, b, m_idx, n_idx, k_idx);
}

CheckReport check_borcherds_range(const JetPoly &a, const JetPoly &b, long bound, int window)
{
    ModeCache cache(window);
    CheckReport report;
    for (long m = -bound; m <= bound; ++m) {
        for (long n = -bound; n <= bound; ++n) {
            for (long k = -bound; k <= bound; ++k) {
                report.add(check_borcherds(cache, a, b, m, n, k));
            }
        }
    }
    return report;
}

CheckResult check_multiplicativity(const JetPoly &a, const JetPoly &b, int window)
{
    return compare_series("multiplicativity", pair_inputs(a, b), vertex_op(a * b, window),
                          vertex_op(a, window) * vertex_op(b, window));
}

CheckReport check_va_axioms(const JetPoly &a, const DiagAutomorphism &g, std::span<const JetPoly> sample, int window)
{
    if (window < 1) {
        throw PreconditionError("check_va_axioms: window must be at least 1");
    }
    const int ord = a.order();
    const std::string in = "a=" + a.str();
    CheckReport report;

    const auto ya = vertex_op(a, window);
    report.add(compare_series("translation", in, vertex_op(derivation_T(a), window - 1), ya.derivative()));

    const auto one = JetPoly::one(ord);
    report.add(compare_series("vacuum", in, vertex_op(one, window), PuiseuxSeries::constant(one)));

    CheckResult creation{"creation", in, true, std::nullopt};
    if (!ya.coeffs().empty() && ya.coeffs().begin()->first < 0) {
        creation.pass = false;
        creation.witness = "negative power in Y(a,z)1: " + ya.str();
    } else if (ya.coefficient_ticks(0) != a || mode(a, -1, window) != a) {
        creation.pass = false;
        creation.witness = "a_(-1)1 = " + mode(a, -1, window).str();
    }
    report.add(creation);

    const auto ga = apply_automorphism(g.exponents(), a);
    ModeCache cache(window);
    for (const auto &b : sample) {
        const auto gb = apply_automorphism(g.exponents(), b);
        for (long n = -window - 1; n <= 1; ++n) {
            report.add(compare("automorphism", pair_inputs(a, b) + ", n=" + std::to_string(n),
                               cache.mode(ga, n) * gb, apply_automorphism(g.exponents(), cache.mode(a, n) * b)));
        }
        report.add(check_multiplicativity(a, b, window));
    }
    return report;
}

} // namespace orbijet
