#ifndef ORBIJET_TWISTED_HPP
#define ORBIJET_TWISTED_HPP

#include <map>
#include <optional>
#include <span>

#include <orbijet/check.hpp>
#include <orbijet/jetpoly.hpp>
#include <orbijet/jetscheme.hpp>
#include <orbijet/series.hpp>

namespace orbijet
{

// The g-twisted module structure of the jet ring on the twisted jet ring.
//
// On generators Y_g(x[i,0], z^{1/m}) = sum x[i,n] z^{-n}, n in alpha_i/m + Z,
// n <= 0. On a monomial prod x[i_j, n_j] the field is
// prod d_z^{-n_j} Y_g(x[i_j,0]) / (-n_j)!. The factorials follow from
// Y_g(Ta) = d_z Y_g(a) together with T^j x[i,0] = j! x[i,-j].
//
// Mode convention: a_(n) multiplies by the coefficient of z^{-n-1}. For a in
// the zeta^r eigenspace the mode indices lie in r/m + Z.

// Y_g(a, z^{1/m}) exact through z^{W_s}. The argument must be an untwisted
// polynomial (integer levels); the output uses the given alphabet.
PuiseuxSeries twisted_vertex_op(const JetPoly &a, const DiagAutomorphism &g, const Rational &max_exponent,
                                Alphabet alphabet = Alphabet::zero);
PuiseuxSeries twisted_vertex_op_ticks(const JetPoly &a, const DiagAutomorphism &g, long trunc_ticks,
                                      Alphabet alphabet = Alphabet::zero);

// Lower bound (ticks) on every exponent occurring in Y_g(a); kExact for a = 0.
long twisted_valuation_bound(const JetPoly &a, const DiagAutomorphism &g);

struct TwistedField {
    PuiseuxSeries series;
    JetPoly source;
    std::optional<int> eigenindex;
};

TwistedField make_twisted_field(const JetPoly &a, const DiagAutomorphism &g, const Rational &max_exponent);

// The multiplication element a_(n) of the twisted module.
// Throws WindowExceeded when -n-1 > W_s.
JetPoly twisted_mode(const JetPoly &a, const DiagAutomorphism &g, const Rational &n, const Rational &max_exponent);

// Memoized twisted fields for batches of mode evaluations.
class TwistedFieldCache
{
public:
    TwistedFieldCache(DiagAutomorphism g, long window_ticks) : g_(std::move(g)), window_(window_ticks) {}

    const PuiseuxSeries &field(const JetPoly &a);
    // Zero without touching the window when the exponent lies below the valuation bound.
    JetPoly mode_ticks(const JetPoly &a, long n_ticks);
    // True when the mode is zero for structural reasons.
    bool mode_vanishes(const JetPoly &a, long n_ticks);
    const DiagAutomorphism &automorphism() const
    {
        return g_;
    }
    long window_ticks() const
    {
        return window_;
    }

private:
    DiagAutomorphism g_;
    long window_;
    std::map<JetPoly, PuiseuxSeries> fields_;
    std::map<JetPoly, long> bounds_;
};

// Support cosets, lower truncation, vacuum, derivative rule and
// multiplicativity for eigen-homogeneous a and b.
CheckReport check_twisted_axioms(const JetPoly &a, const JetPoly &b, const DiagAutomorphism &g,
                                 const Rational &max_exponent);

// Twisted Borcherds identity
//   sum_i binom(m,i) (a_(l+i) b)_(m+n-i)
//     = sum_i binom(l,i) (-1)^i (a_(l+m-i) b_(n+i) + (-1)^{l+1} b_(l+n-i) a_(m+i))
// evaluated on the vacuum, with l an integer, m in r/m + Z, n in s/m + Z.
CheckResult check_twisted_borcherds(const JetPoly &a, const JetPoly &b, const DiagAutomorphism &g, long l,
                                    const Rational &m_idx, const Rational &n_idx, const Rational &max_exponent);
CheckResult check_twisted_borcherds(TwistedFieldCache &cache, const JetPoly &a, const JetPoly &b, long l,
                                    long m_ticks, long n_ticks);

// All admissible triples with |l| <= l_bound and |m|, |n| <= index_bound.
CheckReport check_twisted_borcherds_range(const JetPoly &a, const JetPoly &b, const DiagAutomorphism &g, long l_bound,
                                          const Rational &index_bound, const Rational &max_exponent);

// Coefficientwise Y_g(P_{i,n}) = binom(w+n, n) P^g_{i,w+n} z^w for every
// admissible w <= W_s - n, plus membership of each coefficient in the span of
// the twisted generators. relation is 1-based.
CheckReport check_descent(const SchemeSpec &spec, const DiagAutomorphism &g, int relation, int n,
                          const Rational &max_exponent);

} // namespace orbijet

#endif
