#ifndef ORBIJET_COINV_HPP
#define ORBIJET_COINV_HPP

#include <vector>

#include <orbijet/check.hpp>
#include <orbijet/jetpoly.hpp>
#include <orbijet/jetscheme.hpp>

namespace orbijet
{

// Coinvariants of the jet vertex algebra on [P^1 / (Z/m)] with insertions at
// 0 and infinity. The rotation u -> zeta u fixes both points; the stabilizer
// at 0 is generated by g and the one at infinity by g^{-1}. The module at 0 is
// the twisted jet ring of g in the zero alphabet, the one at infinity the
// twisted jet ring of g^{-1} in the infinity alphabet.

struct OrbiSetup {
    SchemeSpec spec;
    DiagAutomorphism g;
    Rational max_weight;
    int max_degree = 0;
    // Widens the default u-exponent window on both sides.
    int window_extra = 0;
    // Extra degree allowed for multipliers of ideal generators.
    int extra_degree = 0;
};

// The invariant section p u^j du of the sheaf on P^1 minus {0, infinity}.
struct OutSection {
    Monomial p; // product of level-0 variables
    long j = 0;

    friend bool operator==(const OutSection &, const OutSection &) = default;
};

// Sections with deg p <= max_degree and j_min <= j <= j_max satisfying
// j + 1 = sum alpha_i deg_i (mod m).
std::vector<OutSection> enumerate_sections(const OrbiSetup &setup, int max_degree, long j_min, long j_max);

// [-(m W + 1) - extra, m W + extra].
std::pair<long, long> default_section_window(const OrbiSetup &setup);

// Residue at 0 minus residue at infinity, the latter in the infinity alphabet.
// Throws WindowExceeded when |j + 1| exceeds the widened window.
JetPoly residue_relation(const OutSection &s, const OrbiSetup &setup);

// Throws Error unless every variable lies in its module's level coset.
void require_coset_sound(const JetPoly &relation, const DiagAutomorphism &g);

struct CoinvariantData {
    std::vector<JetVar> ambient;
    std::vector<JetPoly> twisted_generators; // both insertions
    std::vector<JetPoly> residue_relations;
};

CoinvariantData coinvariant_ideal(const OrbiSetup &setup);

DimTable coinvariant_dims(const OrbiSetup &setup);

// Coinvariant dimensions against C[Z^G] placed at weight 0.
CheckReport verify_fixed_ring(const OrbiSetup &setup);

} // namespace orbijet

#endif
