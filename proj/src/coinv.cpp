#include <orbijet/coinv.hpp>

#include <orbijet/errors.hpp>
#include <orbijet/series.hpp>
#include <orbijet/twisted.hpp>

namespace orbijet
{

namespace
{

std::vector<JetVar> level_zero_vars(const SchemeSpec &spec)
{
    std::vector<JetVar> out;
    for (int i : spec.active_vars) {
        out.push_back(JetVar{Alphabet::zero, i, 0});
    }
    return out;
}

long residue_limit(const OrbiSetup &setup)
{
    return floor_ticks(setup.max_weight, setup.g.order()) + setup.window_extra + 1;
}

JetPoly field_coefficient(const JetPoly &p, const DiagAutomorphism &g, long exponent, Alphabet alphabet, long limit)
{
    if (exponent < 0) {
        return JetPoly(g.order());
    }
    if (exponent > limit) {
        throw WindowExceeded("residue needs the coefficient of z^" + format_ticks(exponent, g.order())
                             + " beyond the section window");
    }
    return twisted_vertex_op_ticks(p, g, exponent, alphabet).coefficient_ticks(exponent);
}

} // namespace

std::vector<OutSection> enumerate_sections(const OrbiSetup &setup, int max_degree, long j_min, long j_max)
{
    const int m = setup.g.order();
    const auto alpha = setup.g.exponents();
    std::vector<OutSection> out;
    const auto vars = level_zero_vars(setup.spec);
    for (const auto &p : enumerate_monomials(vars, 0, max_degree)) {
        const int chi = monomial_character(alpha, p, m);
        for (long j = j_min; j <= j_max; ++j) {
            if ((((j + 1 - chi) % m) + m) % m == 0) {
                out.push_back({p, j});
            }
        }
    }
    return out;
}

std::pair<long, long> default_section_window(const OrbiSetup &setup)
{
    const long w = floor_ticks(setup.max_weight, setup.g.order());
    return {-(w + 1) - setup.window_extra, w + setup.window_extra};
}

JetPoly residue_relation(const OutSection &s, const OrbiSetup &setup)
{
    const auto &g = setup.g;
    const int m = g.order();
    const long limit = residue_limit(setup);
    const JetPoly p = JetPoly::monomial(m, s.p, CycScalar(m, 1L));
    JetPoly rel = field_coefficient(p, g, -(s.j + 1), Alphabet::zero, limit);
    rel -= field_coefficient(p, g.inverse(), s.j + 1, Alphabet::infinity, limit);
    return rel;
}

void require_coset_sound(const JetPoly &relation, const DiagAutomorphism &g)
{
    const int m = g.order();
    const auto at_zero = JetLevels::twisted(m, g.exponents(), Alphabet::zero);
    const auto ginv = g.inverse();
    const auto at_inf = JetLevels::twisted(m, ginv.exponents(), Alphabet::infinity);
    for (const auto &v : relation.variables()) {
        const bool ok = v.alphabet == Alphabet::zero ? at_zero.admits(v) : at_inf.admits(v);
        if (!ok) {
            throw Error("residue relation " + relation.str() + " uses " + v.str(m) + " outside its level coset");
        }
    }
}

CoinvariantData coinvariant_ideal(const OrbiSetup &setup)
{
    const int m = setup.g.order();
    const long w_ticks = floor_ticks(setup.max_weight, m);
    CoinvariantData data;

    const auto at_zero = twisted_jet_generators(setup.spec, setup.g, setup.max_weight, Alphabet::zero);
    const auto at_inf = twisted_jet_generators(setup.spec, setup.g.inverse(), setup.max_weight, Alphabet::infinity);
    data.ambient = at_zero.variables;
    data.ambient.insert(data.ambient.end(), at_inf.variables.begin(), at_inf.variables.end());
    data.twisted_generators = at_zero.generator_polys();
    for (auto &p : at_inf.generator_polys()) {
        data.twisted_generators.push_back(std::move(p));
    }

    const auto [j_min, j_max] = default_section_window(setup);
    for (const auto &s : enumerate_sections(setup, setup.max_degree, j_min, j_max)) {
        JetPoly rel = residue_relation(s, setup);
        if (rel.is_zero()) {
            continue;
        }
        require_coset_sound(rel, setup.g);
        // Relations above the weight window only touch truncated pieces.
        if (rel.max_weight_ticks() > w_ticks) {
            continue;
        }
        data.residue_relations.push_back(std::move(rel));
    }
    return data;
}

DimTable coinvariant_dims(const OrbiSetup &setup)
{
    const int m = setup.g.order();
    auto data = coinvariant_ideal(setup);
    std::vector<JetPoly> gens = std::move(data.twisted_generators);
    gens.insert(gens.end(), data.residue_relations.begin(), data.residue_relations.end());
    return graded_quotient_dims(data.ambient, gens, floor_ticks(setup.max_weight, m), setup.max_degree, m,
                                setup.extra_degree);
}

CheckReport verify_fixed_ring(const OrbiSetup &setup)
{
    const int m = setup.g.order();
    const auto coinv = coinvariant_dims(setup);
    const auto fixed = coordinate_ring_dims(fixed_point_ring(setup.spec, setup.g), setup.max_degree);
    const std::string in = "m=" + std::to_string(m) + ", W=" + setup.max_weight.get_str()
                           + ", D=" + std::to_string(setup.max_degree);

    auto lookup = [](const DimTable &t, long w, int d) -> std::size_t {
        auto it = t.find({w, d});
        return it == t.end() ? 0 : it->second;
    };

    CheckReport report;
    CheckResult zero{"weight_zero_matches_fixed_ring", in, true, std::nullopt};
    for (int d = 0; d <= setup.max_degree; ++d) {
        const auto a = lookup(coinv, 0, d);
        const auto b = lookup(fixed, 0, d);
        if (a != b) {
            zero.pass = false;
            zero.witness = "degree " + std::to_string(d) + ": coinvariants " + std::to_string(a) + ", fixed ring "
                           + std::to_string(b);
            break;
        }
    }
    report.add(zero);

    CheckResult positive{"positive_weight_vanishes", in, true, std::nullopt};
    for (const auto &[key, dim] : coinv) {
        if (key.first > 0 && dim != 0) {
            positive.pass = false;
            positive.witness = "dimension " + std::to_string(dim) + " at weight " + format_ticks(key.first, m)
                               + ", degree " + std::to_string(key.second);
            break;
        }
    }
    report.add(positive);
    return report;
}

} // namespace orbijet
