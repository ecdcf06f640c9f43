#ifndef ORBIJET_LINALG_HPP
#define ORBIJET_LINALG_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <orbijet/cyclo.hpp>
#include <orbijet/jetpoly.hpp>

namespace orbijet
{

// Sparse row: (column, nonzero value) sorted by increasing column.
using SparseRow = std::vector<std::pair<std::size_t, CycScalar>>;

// Incremental row-echelon basis over Q(zeta_m).
//
// The pivot of a row is its largest column. Pivots are distinct, so for any
// column c the span intersected with the coordinate subspace of columns <= c
// has dimension count_pivots_up_to(c).
class EchelonBasis
{
public:
    explicit EchelonBasis(int order) : order_(order) {}

    // Remainder of row after eliminating existing pivots.
    SparseRow reduce(SparseRow row) const;
    // Adds row to the span; returns true if it was independent.
    bool insert(SparseRow row);

    std::size_t rank() const
    {
        return pivots_.size();
    }
    std::size_t count_pivots_up_to(std::size_t col) const;
    const std::map<std::size_t, SparseRow> &pivots() const
    {
        return pivots_;
    }

private:
    int order_;
    std::map<std::size_t, SparseRow> pivots_; // pivot column -> row with pivot entry 1
};

// Assigns dense column indices to monomials in a caller-chosen order.
class MonomialIndex
{
public:
    // Columns are numbered in the order the monomials are supplied.
    explicit MonomialIndex(std::vector<Monomial> monomials);
    MonomialIndex() = default;

    // Returns a new column for an unseen monomial (appended after existing ones).
    std::size_t column(const Monomial &m);
    bool contains(const Monomial &m) const
    {
        return index_.count(m) != 0;
    }
    std::size_t at(const Monomial &m) const
    {
        return index_.at(m);
    }
    std::size_t size() const
    {
        return monomials_.size();
    }
    const Monomial &monomial(std::size_t col) const
    {
        return monomials_[col];
    }

private:
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

SparseRow to_row(const JetPoly &p, MonomialIndex &index);
JetPoly from_row(const SparseRow &row, const MonomialIndex &index, int order);

// Rank of the span of the given polynomials.
std::size_t poly_rank(const std::vector<JetPoly> &polys, int order);

// True if p lies in the linear span of basis.
bool in_linear_span(const JetPoly &p, const std::vector<JetPoly> &basis, int order);

} // namespace orbijet

#endif
