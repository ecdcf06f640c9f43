#ifndef ORBIJET_SERIES_HPP
#define ORBIJET_SERIES_HPP

#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <orbijet/jetpoly.hpp>

namespace orbijet
{

// Truncated series sum_w c_w z^w, w in (1/m)Z, with JetPoly coefficients.
//
// Coefficients are known exactly for exponents up to the truncation order and
// unknown beyond it. Exponents are ticks (numerators over m). A series with
// truncation kExact is a finite expression known to all orders.
class PuiseuxSeries
{
public:
    static constexpr long kExact = std::numeric_limits<long>::max() / 4;

    explicit PuiseuxSeries(int order = 1, long trunc_ticks = kExact) : order_(order), trunc_(trunc_ticks) {}

    static PuiseuxSeries constant(const JetPoly &c);

    int order() const
    {
        return order_;
    }
    long trunc_ticks() const
    {
        return trunc_;
    }
    bool is_exact() const
    {
        return trunc_ >= kExact;
    }
    // Only meaningful when !is_exact().
    Rational trunc_order() const
    {
        return ticks_to_rational(trunc_, order_);
    }
    const std::map<long, JetPoly> &coeffs() const
    {
        return coeffs_;
    }

    // Adds c z^{ticks/m}; terms beyond the truncation are dropped.
    void add_term(long ticks, const JetPoly &c);

    // Smallest stored exponent; trunc + 1 when nothing is stored (kExact for exact zero).
    long valuation_ticks() const;

    // Coefficient of z^w. Throws TruncationError past the window.
    JetPoly coefficient(const Rational &w) const;
    JetPoly coefficient_ticks(long ticks) const;

    // Lowers the truncation order (never raises it).
    PuiseuxSeries truncated(long trunc_ticks) const;

    PuiseuxSeries derivative() const;
    PuiseuxSeries &operator+=(const PuiseuxSeries &other);
    PuiseuxSeries &operator-=(const PuiseuxSeries &other);
    PuiseuxSeries &operator*=(const Rational &q);
    friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries &b)
    {
        return a += b;
    }
    friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries &b)
    {
        return a -= b;
    }
    friend PuiseuxSeries operator*(const PuiseuxSeries &a, const PuiseuxSeries &b);
    friend PuiseuxSeries operator*(PuiseuxSeries a, const Rational &q)
    {
        return a *= q;
    }

    // Same coefficients up to the smaller of the two truncation orders.
    bool agrees_with(const PuiseuxSeries &other) const;

    std::string str() const;

private:
    int order_;
    long trunc_;
    std::map<long, JetPoly> coeffs_;
};

// Series coefficient of z^w; throws TruncationError beyond the window.
JetPoly series_coefficient(const PuiseuxSeries &s, const Rational &w);

// Admissible levels of each variable x_i: numerators n*m congruent to
// residues[i-1] mod m with n <= 0. Untwisted jets use residue 0 everywhere.
struct JetLevels {
    int order = 1;
    std::vector<int> residues;
    Alphabet alphabet = Alphabet::zero;

    static JetLevels untwisted(int num_vars, int order, Alphabet alphabet = Alphabet::zero);
    // Levels in alpha_i/m + Z.
    static JetLevels twisted(int order, std::span<const int> alpha, Alphabet alphabet = Alphabet::zero);

    int num_vars() const
    {
        return static_cast<int>(residues.size());
    }
    bool admits(const JetVar &v) const;
    // Smallest weight (in ticks) of an admissible variable x[i, *].
    long min_weight_ticks(int var) const;
    // All admissible x[i,n] with -n <= max_weight, ordered by variable then weight.
    std::vector<JetVar> variables_up_to(long max_weight_ticks) const;
};

// sum over admissible n of x[i,n] t^{-n}, truncated at the given order.
PuiseuxSeries jet_expansion(int var, const JetLevels &levels, long trunc_ticks);

// P(x_1(t), ..., x_k(t)) exactly up to t^{W_s}, for P in level-0 variables.
PuiseuxSeries substitute_jets(const JetPoly &p, const JetLevels &levels, const Rational &max_exponent);
PuiseuxSeries substitute_jets_ticks(const JetPoly &p, const JetLevels &levels, long trunc_ticks);

// Generalized binomial coefficient with rational top argument.
Rational binomial(const Rational &top, long k);

} // namespace orbijet

#endif
