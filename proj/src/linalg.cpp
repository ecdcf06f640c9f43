#include <orbijet/linalg.hpp>

#include <algorithm>

namespace orbijet
{

namespace
{

// a - f * b, both sorted by column.
SparseRow axpy(const SparseRow &a, const CycScalar &f, const SparseRow &b)
{
    SparseRow r;
    r.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            r.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            r.emplace_back(j->first, -(f * j->second));
            ++j;
        } else {
            CycScalar v = i->second - f * j->second;
            if (!v.is_zero()) {
                r.emplace_back(i->first, std::move(v));
            }
            ++i;
            ++j;
        }
    }
    return r;
}

} // namespace

SparseRow EchelonBasis::reduce(SparseRow row) const
{
    while (!row.empty()) {
        auto it = pivots_.find(row.back().first);
        if (it == pivots_.end()) {
            break;
        }
        const CycScalar f = row.back().second;
        row = axpy(row, f, it->second);
    }
    return row;
}

bool EchelonBasis::insert(SparseRow row)
{
    row = reduce(std::move(row));
    if (row.empty()) {
        return false;
    }
    const CycScalar inv = row.back().second.inverse();
    if (!inv.is_one()) {
        for (auto &[c, v] : row) {
            v *= inv;
        }
    }
    const std::size_t col = row.back().first;
    pivots_.emplace(col, std::move(row));
    return true;
}

std::size_t EchelonBasis::count_pivots_up_to(std::size_t col) const
{
    return static_cast<std::size_t>(std::distance(pivots_.begin(), pivots_.upper_bound(col)));
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials)
{
    for (auto &m : monomials) {
        column(m);
    }
}

std::size_t MonomialIndex::column(const Monomial &m)
{
    auto [it, inserted] = index_.try_emplace(m, monomials_.size());
    if (inserted) {
        monomials_.push_back(m);
    }
    return it->second;
}

SparseRow to_row(const JetPoly &p, MonomialIndex &index)
{
    SparseRow row;
    row.reserve(p.size());
    for (const auto &[mono, c] : p.terms()) {
        row.emplace_back(index.column(mono), c);
    }
    std::sort(row.begin(), row.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return row;
}

JetPoly from_row(const SparseRow &row, const MonomialIndex &index, int order)
{
    JetPoly p(order);
    for (const auto &[c, v] : row) {
        p.add_term(index.monomial(c), v);
    }
    return p;
}

std::size_t poly_rank(const std::vector<JetPoly> &polys, int order)
{
    MonomialIndex index;
    EchelonBasis basis(order);
    for (const auto &p : polys) {
        basis.insert(to_row(p, index));
    }
    return basis.rank();
}

bool in_linear_span(const JetPoly &p, const std::vector<JetPoly> &basis_polys, int order)
{
    MonomialIndex index;
    EchelonBasis basis(order);
    for (const auto &b : basis_polys) {
        basis.insert(to_row(b, index));
    }
    return basis.reduce(to_row(p, index)).empty();
}

} // namespace orbijet
