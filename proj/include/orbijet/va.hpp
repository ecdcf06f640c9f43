#ifndef ORBIJET_VA_HPP
#define ORBIJET_VA_HPP

#include <map>
#include <span>
#include <vector>

#include <orbijet/check.hpp>
#include <orbijet/jetpoly.hpp>
#include <orbijet/jetscheme.hpp>
#include <orbijet/series.hpp>

namespace orbijet
{

// The commutative vertex algebra on the jet ring: Y(a,z) = e^{zT} a.
//
// Every mode a_(n) is multiplication by an element, so identities between
// operators are checked on the vacuum, i.e. between polynomials. Checks run in
// the free jet polynomial ring; the jet ideal is T-stable, so they descend.

// sum_{n=0}^{W} T^n(a)/n! z^n, exact through z^W.
PuiseuxSeries vertex_op(const JetPoly &a, int max_exponent);

// The element a_(n): T^{-n-1}(a)/(-n-1)! for n <= -1, zero for n >= 0.
// Throws WindowExceeded when -n-1 > window.
JetPoly mode(const JetPoly &a, long n, int window);

// Memoizes divided T-powers so that batches of mode evaluations stay cheap.
class ModeCache
{
public:
    explicit ModeCache(int window) : window_(window) {}

    JetPoly mode(const JetPoly &a, long n);
    int window() const
    {
        return window_;
    }

private:
    int window_;
    std::map<JetPoly, std::vector<JetPoly>> powers_;
};

// Borcherds identity for (a, b) and mode indices (m, n, k), evaluated on the vacuum.
CheckResult check_borcherds(const JetPoly &a, const JetPoly &b, long m_idx, long n_idx, long k_idx, int window);
CheckResult check_borcherds(ModeCache &cache, const JetPoly &a, const JetPoly &b, long m_idx, long n_idx,
                            long k_idx);

// Borcherds identity for every (m, n, k) with |m|, |n|, |k| <= bound.
CheckReport check_borcherds_range(const JetPoly &a, const JetPoly &b, long bound, int window);

// Y(a b) = Y(a) Y(b) through z^window.
CheckResult check_multiplicativity(const JetPoly &a, const JetPoly &b, int window);

// Translation, vacuum, creation and automorphism axioms for a; the
// automorphism law and multiplicativity are checked against every b in sample.
CheckReport check_va_axioms(const JetPoly &a, const DiagAutomorphism &g, std::span<const JetPoly> sample,
                            int window);

} // namespace orbijet

#endif
