#ifndef ORBIJET_JETPOLY_HPP
#define ORBIJET_JETPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <orbijet/cyclo.hpp>

namespace orbijet
{

// Rational gradings (levels, weights, series exponents, mode indices) all have
// denominators dividing the session order m. They are stored as integer
// numerators over m, called ticks.
Rational ticks_to_rational(long ticks, int order);
// Throws PreconditionError unless order * q is an integer.
long rational_to_ticks(const Rational &q, int order);
// floor(order * q), for truncation windows.
long floor_ticks(const Rational &q, int order);
std::string format_ticks(long ticks, int order);

// Two disjoint copies of the jet alphabet: the insertion at 0 and the one at infinity.
enum class Alphabet : std::uint8_t { zero = 0, infinity = 1 };

// The jet variable x[var, level]; level = ticks / m <= 0 and weight = -level.
struct JetVar {
    Alphabet alphabet = Alphabet::zero;
    int var = 1;
    long level = 0;

    long weight_ticks() const
    {
        return -level;
    }

    friend bool operator==(const JetVar &, const JetVar &) = default;
    friend bool operator<(const JetVar &a, const JetVar &b)
    {
        if (a.alphabet != b.alphabet) {
            return a.alphabet < b.alphabet;
        }
        if (a.var != b.var) {
            return a.var < b.var;
        }
        return a.level > b.level;
    }

    // x1[-3/2], or xinf1[-3/2] in the infinity alphabet.
    std::string str(int order) const;
};

// A product of jet variables with positive exponents, kept sorted.
class Monomial
{
public:
    using Factor = std::pair<JetVar, int>;

    Monomial() = default;
    explicit Monomial(JetVar v, int exponent = 1);
    // Factors in any order; repeated variables are merged.
    explicit Monomial(std::vector<Factor> factors);

    const std::vector<Factor> &factors() const
    {
        return factors_;
    }
    bool is_one() const
    {
        return factors_.empty();
    }
    int degree() const;
    long weight_ticks() const;
    int exponent(const JetVar &v) const;
    // Requires exponent(v) >= 1.
    Monomial divided_by(const JetVar &v) const;

    friend Monomial operator*(const Monomial &a, const Monomial &b);
    friend bool operator==(const Monomial &, const Monomial &) = default;
    friend bool operator<(const Monomial &a, const Monomial &b)
    {
        return a.factors_ < b.factors_;
    }

    std::string str(int order) const;

private:
    std::vector<Factor> factors_;
};

// Sparse polynomial in jet variables with coefficients in Q(zeta_m).
class JetPoly
{
public:
    using Terms = std::map<Monomial, CycScalar>;

    explicit JetPoly(int order = 1) : order_(order) {}

    static JetPoly constant(int order, const CycScalar &c);
    static JetPoly constant(int order, const Rational &c);
    static JetPoly one(int order)
    {
        return constant(order, Rational(1));
    }
    static JetPoly variable(int order, const JetVar &v);
    static JetPoly monomial(int order, const Monomial &mono, const CycScalar &c);

    int order() const
    {
        return order_;
    }
    const Terms &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    std::size_t size() const
    {
        return terms_.size();
    }

    // Accumulates c * mono; zero coefficients are removed.
    void add_term(const Monomial &mono, const CycScalar &c);

    JetPoly &operator+=(const JetPoly &other);
    JetPoly &operator-=(const JetPoly &other);
    JetPoly &operator*=(const CycScalar &c);
    JetPoly &operator*=(const Rational &q);

    friend JetPoly operator+(JetPoly a, const JetPoly &b)
    {
        return a += b;
    }
    friend JetPoly operator-(JetPoly a, const JetPoly &b)
    {
        return a -= b;
    }
    friend JetPoly operator*(const JetPoly &a, const JetPoly &b);
    friend JetPoly operator*(JetPoly a, const CycScalar &c)
    {
        return a *= c;
    }
    friend JetPoly operator*(JetPoly a, const Rational &q)
    {
        return a *= q;
    }
    JetPoly operator-() const;

    JetPoly pow(unsigned e) const;

    friend bool operator==(const JetPoly &a, const JetPoly &b);
    friend bool operator<(const JetPoly &a, const JetPoly &b);

    // Weight of the unique weight-homogeneous component, or nullopt if mixed (zero counts as homogeneous of weight 0).
    std::optional<long> homogeneous_weight_ticks() const;
    long max_weight_ticks() const;
    int max_degree() const;
    std::set<JetVar> variables() const;

    std::string str() const;

private:
    void check_compatible(const JetPoly &other) const;

    int order_;
    Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const JetPoly &p);

// T x[i,n] = -(n-1) x[i,n-1], extended as a derivation.
JetPoly derivation_T(const JetPoly &p);
// T^n p / n!
JetPoly divided_T_power(const JetPoly &p, int n);

// Total zeta-character of a monomial: sum of alpha_i * exponent, reduced mod m.
int monomial_character(std::span<const int> alpha, const Monomial &mono, int order);

// The algebra automorphism x[i,n] -> zeta_m^{alpha_i} x[i,n].
JetPoly apply_automorphism(std::span<const int> alpha, const JetPoly &p);

// Components p_0..p_{m-1}, p_r in the zeta^r eigenspace, summing to p.
std::vector<JetPoly> eigen_decompose(std::span<const int> alpha, const JetPoly &p);

// Eigen-index r if p lies in a single eigenspace (zero lies in V^0).
std::optional<int> eigen_index(std::span<const int> alpha, const JetPoly &p);

// Moves every variable into the given alphabet.
JetPoly relabel(const JetPoly &p, Alphabet alphabet);

} // namespace orbijet

#endif
