#ifndef ORBIJET_JETSCHEME_HPP
#define ORBIJET_JETSCHEME_HPP

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <orbijet/jetpoly.hpp>
#include <orbijet/series.hpp>

namespace orbijet
{

// Z = Spec C[x_1..x_k]/(P_1..P_r), relations in level-0 variables.
struct SchemeSpec {
    int order = 1;
    int num_vars = 0;
    // Coordinates the scheme lives on (1-based). All of 1..k unless some were eliminated.
    std::vector<int> active_vars;
    std::vector<JetPoly> relations;

    // Validates that relations use only level-0 variables x_1..x_k.
    static SchemeSpec make(int order, int num_vars, std::vector<JetPoly> relations);

    friend bool operator==(const SchemeSpec &, const SchemeSpec &) = default;
};

// g(x_i) = zeta_m^{alpha_i} x_i.
class DiagAutomorphism
{
public:
    DiagAutomorphism(int order, std::vector<int> exponents);
    static DiagAutomorphism identity(int order, int num_vars);

    int order() const
    {
        return order_;
    }
    std::span<const int> exponents() const
    {
        return exponents_;
    }
    int num_vars() const
    {
        return static_cast<int>(exponents_.size());
    }
    bool is_identity() const;
    DiagAutomorphism inverse() const;

    friend bool operator==(const DiagAutomorphism &, const DiagAutomorphism &) = default;

private:
    int order_;
    std::vector<int> exponents_;
};

// g maps every relation into the linear span of the relations.
bool preserves_relations(const SchemeSpec &spec, const DiagAutomorphism &g);
// Throws IdealNotPreserved otherwise.
void require_preserves(const SchemeSpec &spec, const DiagAutomorphism &g);

enum class JetMethod { T_recursion, substitution };

struct JetGenerator {
    int relation;      // 1-based relation index
    long weight_ticks; // the generator is weight-homogeneous of this weight
    JetPoly poly;

    friend bool operator==(const JetGenerator &, const JetGenerator &) = default;
};

// Truncated generators-and-relations description of A_inf or A^g_inf.
struct JetPresentation {
    int order = 1;
    bool twisted = false;
    std::optional<DiagAutomorphism> automorphism;
    long max_weight_ticks = 0;
    JetLevels levels;
    std::vector<JetVar> variables;
    std::vector<JetGenerator> generators;

    std::vector<JetPoly> generator_polys() const;
};

// Generators P_{i,n}, 0 <= n <= W, of the jet ideal (zero generators omitted).
JetPresentation jet_generators(const SchemeSpec &spec, int max_weight, JetMethod method);

// Generators P^g_{i,w} for admissible 0 <= w <= W, in the given alphabet.
JetPresentation twisted_jet_generators(const SchemeSpec &spec, const DiagAutomorphism &g, const Rational &max_weight,
                                       Alphabet alphabet = Alphabet::zero);

// Presentation of C[Z^G], G = <g>: drop coordinates moved by g and set them to zero.
SchemeSpec fixed_point_ring(const SchemeSpec &spec, const DiagAutomorphism &g);

// (weight ticks, degree) -> dimension.
using DimTable = std::map<std::pair<long, int>, std::size_t>;

// All monomials in the ambient variables with weight <= max_weight and degree <= max_degree.
std::vector<Monomial> enumerate_monomials(std::span<const JetVar> ambient, long max_weight_ticks, int max_degree);

// Dimensions of the bigraded pieces of C[ambient]/(ideal_gens), truncated at
// weight W and degree D. Generators must be weight-homogeneous. Products q*gen
// are kept when their degree is at most D + extra_degree; the degree grading is
// the associated graded of the degree filtration when generators mix degrees.
// Values are upper bounds on the true quotient dimensions.
DimTable graded_quotient_dims(std::span<const JetVar> ambient, const std::vector<JetPoly> &ideal_gens,
                              long max_weight_ticks, int max_degree, int order, int extra_degree = 0);

// Degree-graded dimensions of C[Z] placed at weight 0.
DimTable coordinate_ring_dims(const SchemeSpec &spec, int max_degree);

} // namespace orbijet

#endif
