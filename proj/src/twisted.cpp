#include <orbijet/twisted.hpp>

#include <algorithm>
#include <tuple>

#include <orbijet/errors.hpp>
#include <orbijet/linalg.hpp>
#include <orbijet/va.hpp>

namespace orbijet
{

namespace
{

long residue_of(const DiagAutomorphism &g, int var)
{
    return g.exponents()[static_cast<std::size_t>(var) - 1] % g.order();
}

// Lower bound on exponents of d_z^k Y_g(x[i,0]) / k!.
long factor_bound(const DiagAutomorphism &g, int var, long k)
{
    const long r = residue_of(g, var);
    return r == 0 ? 0 : (g.order() - r) - k * g.order();
}

void check_untwisted_input(const JetPoly &a, const DiagAutomorphism &g)
{
    if (a.order() != g.order()) {
        throw IncompatibleField("twisted field: polynomial order " + std::to_string(a.order())
                                + " differs from automorphism order " + std::to_string(g.order()));
    }
    for (const auto &v : a.variables()) {
        if (v.alphabet != Alphabet::zero || v.level % g.order() != 0 || v.var < 1 || v.var > g.num_vars()) {
            throw PreconditionError("twisted field argument must be an untwisted jet polynomial; got variable "
                                    + v.str(g.order()));
        }
    }
}

long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

int require_eigenindex(const JetPoly &a, const DiagAutomorphism &g)
{
    auto r = eigen_index(g.exponents(), a);
    if (!r) {
        throw PreconditionError("element is not eigen-homogeneous; decompose it first: " + a.str());
    }
    return *r;
}

std::string ticks_str(long t, int m)
{
    return format_ticks(t, m);
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

PuiseuxSeries twisted_vertex_op_ticks(const JetPoly &a, const DiagAutomorphism &g, long trunc_ticks,
                                      Alphabet alphabet)
{
    check_untwisted_input(a, g);
    const int m = g.order();
    const auto levels = JetLevels::twisted(m, g.exponents(), alphabet);
    std::map<std::tuple<int, long, long>, PuiseuxSeries> expansions;

    PuiseuxSeries result(m, trunc_ticks);
    for (const auto &[mono, c] : a.terms()) {
        // One entry per factor copy: (variable, number of derivatives).
        std::vector<std::pair<int, long>> copies;
        long total_bound = 0;
        for (const auto &[v, e] : mono.factors()) {
            const long k = -v.level / m;
            for (int j = 0; j < e; ++j) {
                copies.emplace_back(v.var, k);
                total_bound += factor_bound(g, v.var, k);
            }
        }
        PuiseuxSeries term = PuiseuxSeries::constant(JetPoly::constant(m, c));
        for (const auto &[var, k] : copies) {
            // Enough terms in this factor that its unknown tail cannot reach z^{W_s}.
            const long need = std::max(trunc_ticks - (total_bound - factor_bound(g, var, k)), factor_bound(g, var, k));
            const long base = need + k * m;
            auto it = expansions.find({var, k, base});
            if (it == expansions.end()) {
                PuiseuxSeries f = jet_expansion(var, levels, base);
                Rational fact = 1;
                for (long j = 1; j <= k; ++j) {
                    f = f.derivative();
                    fact *= j;
                }
                f *= 1 / fact;
                it = expansions.emplace(std::make_tuple(var, k, base), std::move(f)).first;
            }
            term = term * it->second;
        }
        result += term;
    }
    if (result.trunc_ticks() < trunc_ticks) {
        throw Error("internal: twisted field lost precision below the requested window");
    }
    return result.truncated(trunc_ticks);
}

PuiseuxSeries twisted_vertex_op(const JetPoly &a, const DiagAutomorphism &g, const Rational &max_exponent,
                                Alphabet alphabet)
{
    return twisted_vertex_op_ticks(a, g, floor_ticks(max_exponent, g.order()), alphabet);
}

long twisted_valuation_bound(const JetPoly &a, const DiagAutomorphism &g)
{
    check_untwisted_input(a, g);
    long best = PuiseuxSeries::kExact;
    for (const auto &[mono, c] : a.terms()) {
        long b = 0;
        for (const auto &[v, e] : mono.factors()) {
            b += e * factor_bound(g, v.var, -v.level / g.order());
        }
        best = std::min(best, b);
    }
    return best;
}

TwistedField make_twisted_field(const JetPoly &a, const DiagAutomorphism &g, const Rational &max_exponent)
{
    return TwistedField{twisted_vertex_op(a, g, max_exponent), a, eigen_index(g.exponents(), a)};
}

JetPoly twisted_mode(const JetPoly &a, const DiagAutomorphism &g, const Rational &n, const Rational &max_exponent)
{
    const int m = g.order();
    const long exponent = -rational_to_ticks(n, m) - m;
    const long window = floor_ticks(max_exponent, m);
    if (exponent > window) {
        throw WindowExceeded("twisted mode a_(" + n.get_str() + ") needs z^" + ticks_str(exponent, m)
                             + " beyond window " + max_exponent.get_str());
    }
    return twisted_vertex_op_ticks(a, g, window).coefficient_ticks(exponent);
}

const PuiseuxSeries &TwistedFieldCache::field(const JetPoly &a)
{
    auto it = fields_.find(a);
    if (it == fields_.end()) {
        it = fields_.emplace(a, twisted_vertex_op_ticks(a, g_, window_)).first;
    }
    return it->second;
}

bool TwistedFieldCache::mode_vanishes(const JetPoly &a, long n_ticks)
{
    auto it = bounds_.find(a);
    if (it == bounds_.end()) {
        it = bounds_.emplace(a, twisted_valuation_bound(a, g_)).first;
    }
    return -n_ticks - g_.order() < it->second;
}

JetPoly TwistedFieldCache::mode_ticks(const JetPoly &a, long n_ticks)
{
    const int m = g_.order();
    if (mode_vanishes(a, n_ticks)) {
        return JetPoly(m);
    }
    const long exponent = -n_ticks - m;
    if (exponent > window_) {
        throw WindowExceeded("twisted mode a_(" + ticks_str(n_ticks, m) + ") of " + a.str() + " needs z^"
                             + ticks_str(exponent, m) + " beyond window " + ticks_str(window_, m));
    }
    return field(a).coefficient_ticks(exponent);
}

CheckReport check_twisted_axioms(const JetPoly &a, const JetPoly &b, const DiagAutomorphism &g,
                                 const Rational &max_exponent)
{
    const int m = g.order();
    const long window = floor_ticks(max_exponent, m);
    if (window < m) {
        throw PreconditionError("check_twisted_axioms: window must be at least 1");
    }
    const int ra = require_eigenindex(a, g);
    const int rb = require_eigenindex(b, g);
    const std::string in = "a=" + a.str() + ", b=" + b.str();
    CheckReport report;

    const auto ya = twisted_vertex_op_ticks(a, g, window);
    const auto yb = twisted_vertex_op_ticks(b, g, window);

    auto support = [&](const PuiseuxSeries &y, int r, const std::string &which) {
        CheckResult res{"support_coset", which + ", r=" + std::to_string(r), true, std::nullopt};
        for (const auto &[e, c] : y.coeffs()) {
            // exponent -n-1 for a mode index n in r/m + Z
            if (((e + r) % m + m) % m != 0) {
                res.pass = false;
                res.witness = "exponent " + ticks_str(e, m) + " carries mode index outside " + std::to_string(r) + "/"
                              + std::to_string(m) + " + Z";
                break;
            }
        }
        return res;
    };
    report.add(support(ya, ra, "a=" + a.str()));
    report.add(support(yb, rb, "b=" + b.str()));

    // Y_g(a) v is bounded below for module elements v.
    const auto levels = JetLevels::twisted(m, g.exponents());
    std::vector<JetPoly> vs{JetPoly::one(m)};
    for (int i = 1; i <= g.num_vars(); ++i) {
        vs.push_back(JetPoly::variable(m, JetVar{Alphabet::zero, i, -levels.min_weight_ticks(i)}));
    }
    const long bound = twisted_valuation_bound(a, g);
    CheckResult lower{"lower_truncation", in, true, std::nullopt};
    for (const auto &v : vs) {
        const auto prod = ya * PuiseuxSeries::constant(v);
        if (!prod.coeffs().empty() && prod.coeffs().begin()->first < bound) {
            lower.pass = false;
            lower.witness = "Y_g(a) * " + v.str() + " has exponent " + ticks_str(prod.coeffs().begin()->first, m)
                            + " below bound " + ticks_str(bound, m);
        }
    }
    report.add(lower);

    const auto one = JetPoly::one(m);
    report.add(compare_series("vacuum", in, twisted_vertex_op_ticks(one, g, window), PuiseuxSeries::constant(one)));

    report.add(compare_series("derivative", "a=" + a.str(), twisted_vertex_op_ticks(derivation_T(a), g, window - m),
                              ya.derivative()));
    report.add(compare_series("derivative", "b=" + b.str(), twisted_vertex_op_ticks(derivation_T(b), g, window - m),
                              yb.derivative()));
    report.add(compare_series("multiplicativity", in, twisted_vertex_op_ticks(a * b, g, window), ya * yb));
    return report;
}

CheckResult check_twisted_borcherds(TwistedFieldCache &cache, const JetPoly &a, const JetPoly &b, long l,
                                    long m_ticks, long n_ticks)
{
    const auto &g = cache.automorphism();
    const int m = g.order();
    const int r = require_eigenindex(a, g);
    const int s = require_eigenindex(b, g);
    if (((m_ticks - r) % m + m) % m != 0 || ((n_ticks - s) % m + m) % m != 0) {
        throw PreconditionError("twisted Borcherds indices (" + ticks_str(m_ticks, m) + ", " + ticks_str(n_ticks, m)
                                + ") not in cosets " + std::to_string(r) + "/" + std::to_string(m) + " + Z, "
                                + std::to_string(s) + "/" + std::to_string(m) + " + Z");
    }
    const Rational m_val = ticks_to_rational(m_ticks, m);
    ModeCache untwisted(static_cast<int>(cache.window_ticks() / m));

    // a_(l+i) b vanishes once l + i >= 0.
    JetPoly lhs(m);
    for (long i = 0; i <= -l - 1; ++i) {
        const JetPoly inner = untwisted.mode(a, l + i) * b;
        if (inner.is_zero()) {
            continue;
        }
        const long idx = m_ticks + n_ticks - i * m;
        if (cache.mode_vanishes(inner, idx)) {
            continue;
        }
        lhs += cache.mode_ticks(inner, idx) * binomial(m_val, i);
    }

    // For l < 0 the sum ends where b_(n+i) and a_(m+i) fall below their valuation bounds.
    JetPoly rhs(m);
    long last = l;
    if (l < 0) {
        const long va = twisted_valuation_bound(a, g);
        const long vb = twisted_valuation_bound(b, g);
        last = -1;
        if (vb < PuiseuxSeries::kExact) {
            last = std::max(last, floor_div(-n_ticks - m - vb, m));
        }
        if (va < PuiseuxSeries::kExact) {
            last = std::max(last, floor_div(-m_ticks - m - va, m));
        }
    }
    const Rational sign_l = (l % 2 == 0) ? -1 : 1; // (-1)^{l+1}
    for (long i = 0; i <= last; ++i) {
        Rational c = binomial(Rational(l), i);
        if (i % 2 != 0) {
            c = -c;
        }
        if (c == 0) {
            continue;
        }
        JetPoly term(m);
        const long a1 = l * m + m_ticks - i * m;
        const long b1 = n_ticks + i * m;
        if (!cache.mode_vanishes(a, a1) && !cache.mode_vanishes(b, b1)) {
            term += cache.mode_ticks(a, a1) * cache.mode_ticks(b, b1);
        }
        const long b2 = l * m + n_ticks - i * m;
        const long a2 = m_ticks + i * m;
        if (!cache.mode_vanishes(b, b2) && !cache.mode_vanishes(a, a2)) {
            term += cache.mode_ticks(b, b2) * cache.mode_ticks(a, a2) * sign_l;
        }
        rhs += term * c;
    }

    CheckResult res{"twisted_borcherds",
                    "a=" + a.str() + ", b=" + b.str() + ", (l,m,n)=(" + std::to_string(l) + "," + ticks_str(m_ticks, m)
                        + "," + ticks_str(n_ticks, m) + ")",
                    lhs == rhs, std::nullopt};
    if (!res.pass) {
        res.witness = "lhs - rhs = " + (lhs - rhs).str();
    }
    return res;
}

CheckResult check_twisted_borcherds(const JetPoly &a, const JetPoly &b, const DiagAutomorphism &g, long l,
                                    const Rational &m_idx, const Rational &n_idx, const Rational &max_exponent)
{
    TwistedFieldCache cache(g, floor_ticks(max_exponent, g.order()));
    return check_twisted_borcherds(cache, a, b, l, rational_to_ticks(m_idx, g.order()),
                                   rational_to_ticks(n_idx, g.order()));
}

CheckReport check_twisted_borcherds_range(const JetPoly &a, const JetPoly &b, const DiagAutomorphism &g, long l_bound,
                                          const Rational &index_bound, const Rational &max_exponent)
{
    const int m = g.order();
    const int r = require_eigenindex(a, g);
    const int s = require_eigenindex(b, g);
    const long ib = floor_ticks(index_bound, m);
    TwistedFieldCache cache(g, floor_ticks(max_exponent, m));
    CheckReport report;
    for (long l = -l_bound; l <= l_bound; ++l) {
        for (long mt = -ib; mt <= ib; ++mt) {
            if (((mt - r) % m + m) % m != 0) {
                continue;
            }
            for (long nt = -ib; nt <= ib; ++nt) {
                if (((nt - s) % m + m) % m != 0) {
                    continue;
                }
                report.add(check_twisted_borcherds(cache, a, b, l, mt, nt));
            }
        }
    }
    return report;
}

CheckReport check_descent(const SchemeSpec &spec, const DiagAutomorphism &g, int relation, int n,
                          const Rational &max_exponent)
{
    if (relation < 1 || static_cast<std::size_t>(relation) > spec.relations.size()) {
        throw PreconditionError("check_descent: relation index " + std::to_string(relation) + " out of range");
    }
    if (n < 0 || Rational(n) > max_exponent) {
        throw PreconditionError("check_descent: need 0 <= n <= W_s");
    }
    const int m = g.order();
    const long window = floor_ticks(max_exponent, m);
    const auto &p = spec.relations[static_cast<std::size_t>(relation) - 1];
    const auto levels = JetLevels::twisted(m, g.exponents());

    const JetPoly p_n = divided_T_power(p, n);
    const auto field = twisted_vertex_op_ticks(p_n, g, window);
    const auto substituted = substitute_jets_ticks(p, levels, window);
    std::vector<JetPoly> twisted_gens;
    for (const auto &[w, c] : substituted.coeffs()) {
        twisted_gens.push_back(c);
    }

    const std::string in = "relation " + std::to_string(relation) + ", n=" + std::to_string(n);
    CheckReport report;
    CheckResult coeffs{"descent_coefficients", in, true, std::nullopt};
    CheckResult ideal{"descent_in_twisted_ideal", in, true, std::nullopt};
    for (long w = -static_cast<long>(n) * m; w <= window - static_cast<long>(n) * m; ++w) {
        const JetPoly lhs = field.coefficient_ticks(w);
        const long shifted = w + static_cast<long>(n) * m;
        const JetPoly rhs = substituted.coefficient_ticks(shifted) * binomial(ticks_to_rational(shifted, m), n);
        if (coeffs.pass && lhs != rhs) {
            coeffs.pass = false;
            coeffs.witness = "z^" + ticks_str(w, m) + ": lhs - rhs = " + (lhs - rhs).str();
        }
        if (ideal.pass && !lhs.is_zero() && !in_linear_span(lhs, twisted_gens, m)) {
            ideal.pass = false;
            ideal.witness = "z^" + ticks_str(w, m) + " coefficient " + lhs.str() + " outside the twisted generators";
        }
    }
    report.add(coeffs);
    report.add(ideal);
    return report;
}

} // namespace orbijet
