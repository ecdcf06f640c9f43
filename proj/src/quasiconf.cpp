#include <orbijet/quasiconf.hpp>

#include <orbijet/errors.hpp>
#include <orbijet/series.hpp>

namespace orbijet
{

namespace
{

using Op = std::function<JetPoly(long, const JetPoly &)>;

// One result per (a, b): the bracket against c(a,b) times the operator at a+b.
void bracket_checks(CheckReport &report, const std::string &name, const Op &op, const std::vector<JetVar> &vars,
                    int order, int max_index, const std::function<Rational(long, long)> &constant)
{
    for (long a = 0; a <= max_index; ++a) {
        for (long b = 0; b <= max_index; ++b) {
            CheckResult r{name, "a=" + std::to_string(a) + ", b=" + std::to_string(b), true, std::nullopt};
            const Rational c = constant(a, b);
            for (const auto &v : vars) {
                const JetPoly x = JetPoly::variable(order, v);
                const JetPoly lhs = op(a, op(b, x)) - op(b, op(a, x));
                const JetPoly rhs = op(a + b, x) * c;
                if (lhs != rhs) {
                    r.pass = false;
                    r.witness = "on " + v.str(order) + ": bracket = " + lhs.str() + ", expected " + rhs.str();
                    break;
                }
            }
            report.add(std::move(r));
        }
    }
}

} // namespace

JetPoly apply_derivation(const JetPoly &p, const std::function<JetPoly(const JetVar &)> &f)
{
    JetPoly out(p.order());
    for (const auto &[mono, c] : p.terms()) {
        for (const auto &[v, e] : mono.factors()) {
            const JetPoly image = f(v);
            if (image.is_zero()) {
                continue;
            }
            out += JetPoly::monomial(p.order(), mono.divided_by(v), c * CycScalar(p.order(), static_cast<long>(e)))
                   * image;
        }
    }
    return out;
}

JetPoly L_op(long a, const JetPoly &p, int max_weight)
{
    if (a < 0) {
        throw PreconditionError("L_op: only nonnegative indices act");
    }
    const int m = p.order();
    return apply_derivation(p, [&](const JetVar &v) {
        if (v.level % m != 0) {
            throw PreconditionError("L_op: variable " + v.str(m) + " is not an untwisted jet variable");
        }
        if (v.weight_ticks() > static_cast<long>(max_weight) * m) {
            throw WindowExceeded("L_op: variable " + v.str(m) + " beyond weight window " + std::to_string(max_weight));
        }
        const long q = v.level / m + a;
        if (q >= 0) {
            return JetPoly(m);
        }
        return JetPoly::variable(m, JetVar{v.alphabet, v.var, q * m}) * Rational(-q);
    });
}

JetPoly Ltilde_op(long r, const JetPoly &p, const DiagAutomorphism &g, const Rational &max_weight)
{
    if (r < 0) {
        throw PreconditionError("Ltilde_op: only nonnegative indices act");
    }
    const int m = g.order();
    if (p.order() != m) {
        throw IncompatibleField("Ltilde_op: polynomial order differs from automorphism order");
    }
    const auto levels = JetLevels::twisted(m, g.exponents(), Alphabet::zero);
    const long window = floor_ticks(max_weight, m);
    return apply_derivation(p, [&](const JetVar &v) {
        JetVar probe = v;
        probe.alphabet = Alphabet::zero;
        if (!levels.admits(probe)) {
            throw PreconditionError("Ltilde_op: variable " + v.str(m) + " is not admissible for the automorphism");
        }
        if (v.weight_ticks() > window) {
            throw WindowExceeded("Ltilde_op: variable " + v.str(m) + " beyond weight window " + max_weight.get_str());
        }
        const long q = v.level + r * m;
        if (q >= 0) {
            return JetPoly(m);
        }
        return JetPoly::variable(m, JetVar{v.alphabet, v.var, q}) * Rational(-q);
    });
}

CheckReport check_commutators(const DiagAutomorphism &g, int max_index, const Rational &max_weight)
{
    if (max_index < 1) {
        throw PreconditionError("check_commutators: max_index must be at least 1");
    }
    const int m = g.order();
    const long window = floor_ticks(max_weight, m);
    const int int_window = static_cast<int>(window / m);

    const auto untwisted = JetLevels::untwisted(g.num_vars(), m).variables_up_to(window);
    const auto twisted = JetLevels::twisted(m, g.exponents()).variables_up_to(window);

    const Op l_op = [&](long a, const JetPoly &p) { return L_op(a, p, int_window); };
    const Op lt_op = [&](long r, const JetPoly &p) { return Ltilde_op(r, p, g, max_weight); };
    const Rational mq = m;

    CheckReport report;
    bracket_checks(report, "virasoro_bracket", l_op, untwisted, m, max_index,
                   [](long a, long b) { return Rational(b - a); });
    bracket_checks(report, "twisted_bracket", lt_op, twisted, m, max_index,
                   [&](long a, long b) { return mq * (b - a); });
    bracket_checks(report, "virasoro_bracket_realized", l_op, untwisted, m, max_index,
                   [](long a, long b) { return Rational(a - b); });
    bracket_checks(report, "twisted_bracket_realized", lt_op, twisted, m, max_index,
                   [&](long a, long b) { return mq * (a - b); });

    CheckResult l0{"l0_weight", "untwisted variables", true, std::nullopt};
    for (const auto &v : untwisted) {
        const JetPoly x = JetPoly::variable(m, v);
        if (l_op(0, x) != x * ticks_to_rational(v.weight_ticks(), m)) {
            l0.pass = false;
            l0.witness = "L_0 " + v.str(m) + " = " + l_op(0, x).str();
            break;
        }
    }
    report.add(l0);

    CheckResult lt0{"ltilde0_scaling", "twisted variables", true, std::nullopt};
    for (const auto &v : twisted) {
        const JetPoly x = JetPoly::variable(m, v);
        if (lt_op(0, x) != x * (mq * ticks_to_rational(v.weight_ticks(), m))) {
            lt0.pass = false;
            lt0.witness = "Ltilde_0 " + v.str(m) + " = " + lt_op(0, x).str();
            break;
        }
    }
    report.add(lt0);
    return report;
}

} // namespace orbijet
