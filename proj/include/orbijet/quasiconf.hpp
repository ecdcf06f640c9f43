#ifndef ORBIJET_QUASICONF_HPP
#define ORBIJET_QUASICONF_HPP

#include <functional>

#include <orbijet/check.hpp>
#include <orbijet/jetpoly.hpp>
#include <orbijet/jetscheme.hpp>

namespace orbijet
{

// Infinitesimal coordinate changes acting on jet rings as derivations.
//
//   L_a        x[i,q] -> -(q+a) x[i,q+a]          if q+a < 0, else 0
//   Ltilde_r   x[i,q] -> -m(q+r) x[i,q+r]         if q+r < 0, else 0
//
// Both lower the weight of a variable by the index.

// Extends f from variables to p by the Leibniz rule.
JetPoly apply_derivation(const JetPoly &p, const std::function<JetPoly(const JetVar &)> &f);

// Requires untwisted variables of weight <= max_weight; throws WindowExceeded otherwise.
JetPoly L_op(long a, const JetPoly &p, int max_weight);

// Requires variables admissible for g with weight <= max_weight.
JetPoly Ltilde_op(long r, const JetPoly &p, const DiagAutomorphism &g, const Rational &max_weight);

// Brackets [L_a, L_b] and [Ltilde_a, Ltilde_b] for 0 <= a, b <= max_index on
// every variable of weight <= W, compared against (b-a) L_{a+b} and
// m (b-a) Ltilde_{a+b}. Also records the constants the operators actually
// realize and the L_0 / Ltilde_0 eigenvalues.
CheckReport check_commutators(const DiagAutomorphism &g, int max_index, const Rational &max_weight);

} // namespace orbijet

#endif
