#include <orbijet/jetscheme.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

#include <orbijet/errors.hpp>
#include <orbijet/linalg.hpp>

namespace orbijet
{

SchemeSpec SchemeSpec::make(int order, int num_vars, std::vector<JetPoly> relations)
{
    if (num_vars < 0) {
        throw PreconditionError("negative number of variables");
    }
    SchemeSpec s;
    s.order = order;
    s.num_vars = num_vars;
    s.active_vars.resize(static_cast<std::size_t>(num_vars));
    std::iota(s.active_vars.begin(), s.active_vars.end(), 1);
    for (const auto &p : relations) {
        if (p.order() != order) {
            throw IncompatibleField("relation over cyclotomic order " + std::to_string(p.order()));
        }
        for (const auto &v : p.variables()) {
            if (v.level != 0 || v.alphabet != Alphabet::zero) {
                throw PreconditionError("relation uses non-level-0 variable " + v.str(order));
            }
            if (v.var < 1 || v.var > num_vars) {
                throw PreconditionError("relation uses undeclared variable index " + std::to_string(v.var));
            }
        }
    }
    s.relations = std::move(relations);
    return s;
}

DiagAutomorphism::DiagAutomorphism(int order, std::vector<int> exponents) : order_(order), exponents_(std::move(exponents))
{
    if (order < 1) {
        throw PreconditionError("automorphism order must be positive");
    }
    for (int a : exponents_) {
        if (a < 0 || a >= order) {
            throw PreconditionError("automorphism exponent " + std::to_string(a) + " outside 0.."
                                    + std::to_string(order - 1));
        }
    }
}

DiagAutomorphism DiagAutomorphism::identity(int order, int num_vars)
{
    return DiagAutomorphism(order, std::vector<int>(static_cast<std::size_t>(num_vars), 0));
}

bool DiagAutomorphism::is_identity() const
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](int a) { return a == 0; });
}

DiagAutomorphism DiagAutomorphism::inverse() const
{
    std::vector<int> inv;
    inv.reserve(exponents_.size());
    for (int a : exponents_) {
        inv.push_back((order_ - a) % order_);
    }
    return DiagAutomorphism(order_, std::move(inv));
}

namespace
{

void check_automorphism_fits(const SchemeSpec &spec, const DiagAutomorphism &g)
{
    if (g.order() != spec.order) {
        throw IncompatibleField("automorphism order " + std::to_string(g.order()) + " differs from session order "
                                + std::to_string(spec.order));
    }
    if (g.num_vars() != spec.num_vars) {
        throw PreconditionError("automorphism has " + std::to_string(g.num_vars()) + " exponents for "
                                + std::to_string(spec.num_vars) + " variables");
    }
}

} // namespace

bool preserves_relations(const SchemeSpec &spec, const DiagAutomorphism &g)
{
    check_automorphism_fits(spec, g);
    MonomialIndex index;
    EchelonBasis basis(spec.order);
    for (const auto &p : spec.relations) {
        basis.insert(to_row(p, index));
    }
    for (const auto &p : spec.relations) {
        if (!basis.reduce(to_row(apply_automorphism(g.exponents(), p), index)).empty()) {
            return false;
        }
    }
    return true;
}

void require_preserves(const SchemeSpec &spec, const DiagAutomorphism &g)
{
    if (!preserves_relations(spec, g)) {
        throw IdealNotPreserved("the automorphism does not preserve the span of the relations");
    }
}

std::vector<JetPoly> JetPresentation::generator_polys() const
{
    std::vector<JetPoly> out;
    out.reserve(generators.size());
    for (const auto &g : generators) {
        out.push_back(g.poly);
    }
    return out;
}

JetPresentation jet_generators(const SchemeSpec &spec, int max_weight, JetMethod method)
{
    if (max_weight < 0) {
        throw PreconditionError("jet_generators: max weight must be nonnegative");
    }
    const int m = spec.order;
    JetPresentation pres;
    pres.order = m;
    pres.max_weight_ticks = static_cast<long>(max_weight) * m;
    pres.levels = JetLevels::untwisted(spec.num_vars, m);
    for (int i : spec.active_vars) {
        for (int n = 0; n <= max_weight; ++n) {
            pres.variables.push_back(JetVar{Alphabet::zero, i, -static_cast<long>(n) * m});
        }
    }
    for (std::size_t r = 0; r < spec.relations.size(); ++r) {
        const auto &p = spec.relations[r];
        const int label = static_cast<int>(r) + 1;
        if (method == JetMethod::T_recursion) {
            JetPoly cur = p;
            for (int n = 0; n <= max_weight; ++n) {
                if (n > 0) {
                    cur = derivation_T(cur) * Rational(1, n);
                }
                if (!cur.is_zero()) {
                    pres.generators.push_back({label, static_cast<long>(n) * m, cur});
                }
            }
        } else {
            const auto s = substitute_jets_ticks(p, pres.levels, pres.max_weight_ticks);
            for (int n = 0; n <= max_weight; ++n) {
                auto c = s.coefficient_ticks(static_cast<long>(n) * m);
                if (!c.is_zero()) {
                    pres.generators.push_back({label, static_cast<long>(n) * m, std::move(c)});
                }
            }
        }
    }
    return pres;
}

JetPresentation twisted_jet_generators(const SchemeSpec &spec, const DiagAutomorphism &g, const Rational &max_weight,
                                       Alphabet alphabet)
{
    if (max_weight < 0) {
        throw PreconditionError("twisted_jet_generators: max weight must be nonnegative");
    }
    require_preserves(spec, g);
    const int m = spec.order;
    JetPresentation pres;
    pres.order = m;
    pres.twisted = true;
    pres.automorphism = g;
    pres.max_weight_ticks = floor_ticks(max_weight, m);
    pres.levels = JetLevels::twisted(m, g.exponents(), alphabet);
    for (const auto &v : pres.levels.variables_up_to(pres.max_weight_ticks)) {
        if (std::find(spec.active_vars.begin(), spec.active_vars.end(), v.var) != spec.active_vars.end()) {
            pres.variables.push_back(v);
        }
    }
    for (std::size_t r = 0; r < spec.relations.size(); ++r) {
        const auto s = substitute_jets_ticks(spec.relations[r], pres.levels, pres.max_weight_ticks);
        for (const auto &[w, c] : s.coeffs()) {
            if (w < 0 || w > pres.max_weight_ticks) {
                continue;
            }
            if (c.homogeneous_weight_ticks() != w) {
                throw Error("internal: twisted generator is not weight-homogeneous");
            }
            pres.generators.push_back({static_cast<int>(r) + 1, w, c});
        }
    }
    return pres;
}

SchemeSpec fixed_point_ring(const SchemeSpec &spec, const DiagAutomorphism &g)
{
    require_preserves(spec, g);
    SchemeSpec out;
    out.order = spec.order;
    out.num_vars = spec.num_vars;
    for (int i : spec.active_vars) {
        if (g.exponents()[static_cast<std::size_t>(i) - 1] % g.order() == 0) {
            out.active_vars.push_back(i);
        }
    }
    auto is_fixed = [&](int var) { return g.exponents()[static_cast<std::size_t>(var) - 1] % g.order() == 0; };
    for (const auto &p : spec.relations) {
        JetPoly q(spec.order);
        for (const auto &[mono, c] : p.terms()) {
            const bool survives = std::all_of(mono.factors().begin(), mono.factors().end(),
                                              [&](const auto &f) { return is_fixed(f.first.var); });
            if (survives) {
                q.add_term(mono, c);
            }
        }
        if (!q.is_zero()) {
            out.relations.push_back(std::move(q));
        }
    }
    return out;
}

std::vector<Monomial> enumerate_monomials(std::span<const JetVar> ambient, long max_weight_ticks, int max_degree)
{
    std::vector<JetVar> vars(ambient.begin(), ambient.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> current;
    std::function<void(std::size_t, long, int)> rec = [&](std::size_t idx, long weight_left, int degree_left) {
        if (idx == vars.size()) {
            out.emplace_back(current);
            return;
        }
        rec(idx + 1, weight_left, degree_left);
        const long w = vars[idx].weight_ticks();
        for (int e = 1; e <= degree_left && w * e <= weight_left; ++e) {
            current.emplace_back(vars[idx], e);
            rec(idx + 1, weight_left - w * e, degree_left - e);
            current.pop_back();
        }
    };
    rec(0, max_weight_ticks, max_degree);
    return out;
}

DimTable graded_quotient_dims(std::span<const JetVar> ambient, const std::vector<JetPoly> &ideal_gens,
                              long max_weight_ticks, int max_degree, int order, int extra_degree)
{
    const int row_degree_cap = max_degree + extra_degree;
    const std::set<JetVar> ambient_set(ambient.begin(), ambient.end());

    std::map<long, std::vector<Monomial>> by_weight;
    for (auto &mono : enumerate_monomials(ambient, max_weight_ticks, row_degree_cap)) {
        by_weight[mono.weight_ticks()].push_back(std::move(mono));
    }

    struct Gen {
        long weight;
        int degree;
        const JetPoly *poly;
    };
    std::vector<Gen> gens;
    for (const auto &g : ideal_gens) {
        if (g.is_zero()) {
            continue;
        }
        if (g.order() != order) {
            throw IncompatibleField("ideal generator over a different cyclotomic order");
        }
        const auto w = g.homogeneous_weight_ticks();
        if (!w) {
            throw PreconditionError("ideal generator is not weight-homogeneous: " + g.str());
        }
        for (const auto &v : g.variables()) {
            if (ambient_set.count(v) == 0) {
                throw PreconditionError("ideal generator uses variable " + v.str(order) + " outside the ambient set");
            }
        }
        gens.push_back({*w, g.max_degree(), &g});
    }

    DimTable table;
    for (long w = 0; w <= max_weight_ticks; ++w) {
        auto it = by_weight.find(w);
        if (it == by_weight.end()) {
            for (int d = 0; d <= max_degree; ++d) {
                table[{w, d}] = 0;
            }
            continue;
        }
        // Degree-compatible column order: a prefix of columns is a degree window.
        std::vector<Monomial> cols = it->second;
        std::stable_sort(cols.begin(), cols.end(), [](const Monomial &a, const Monomial &b) {
            if (a.degree() != b.degree()) {
                return a.degree() < b.degree();
            }
            return a < b;
        });
        std::vector<std::size_t> prefix_end(static_cast<std::size_t>(row_degree_cap) + 1, 0);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (int d = cols[c].degree(); d <= row_degree_cap; ++d) {
                prefix_end[static_cast<std::size_t>(d)] = c + 1;
            }
        }
        MonomialIndex index(std::move(cols));
        const std::size_t ncols = index.size();

        EchelonBasis basis(order);
        for (const auto &g : gens) {
            if (g.weight > w || g.degree > row_degree_cap) {
                continue;
            }
            auto mit = by_weight.find(w - g.weight);
            if (mit == by_weight.end()) {
                continue;
            }
            for (const auto &q : mit->second) {
                if (q.degree() + g.degree > row_degree_cap) {
                    continue;
                }
                JetPoly prod(order);
                for (const auto &[mono, c] : g.poly->terms()) {
                    prod.add_term(q * mono, c);
                }
                basis.insert(to_row(prod, index));
            }
        }
        if (index.size() != ncols) {
            throw Error("internal: multiplier produced a monomial outside the enumerated window");
        }

        std::size_t prev = 0;
        for (int d = 0; d <= max_degree; ++d) {
            const std::size_t end = prefix_end[static_cast<std::size_t>(d)];
            const std::size_t pivots = end == 0 ? 0 : basis.count_pivots_up_to(end - 1);
            const std::size_t filtered = end - pivots;
            table[{w, d}] = filtered - prev;
            prev = filtered;
        }
    }
    return table;
}

DimTable coordinate_ring_dims(const SchemeSpec &spec, int max_degree)
{
    std::vector<JetVar> ambient;
    for (int i : spec.active_vars) {
        ambient.push_back(JetVar{Alphabet::zero, i, 0});
    }
    return graded_quotient_dims(ambient, spec.relations, 0, max_degree, spec.order);
}

} // namespace orbijet
