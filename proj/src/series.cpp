#include <orbijet/series.hpp>

#include <algorithm>
#include <sstream>

#include <orbijet/errors.hpp>

namespace orbijet
{

namespace
{

long sat_add(long a, long b)
{
    if (a >= PuiseuxSeries::kExact || b >= PuiseuxSeries::kExact) {
        return PuiseuxSeries::kExact;
    }
    return a + b;
}

int normalize_residue(long r, int m)
{
    r %= m;
    return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

PuiseuxSeries PuiseuxSeries::constant(const JetPoly &c)
{
    PuiseuxSeries s(c.order());
    s.add_term(0, c);
    return s;
}

void PuiseuxSeries::add_term(long ticks, const JetPoly &c)
{
    if (ticks > trunc_ || c.is_zero()) {
        return;
    }
    if (c.order() != order_) {
        throw IncompatibleField("series coefficient over a different cyclotomic order");
    }
    auto [it, inserted] = coeffs_.try_emplace(ticks, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            coeffs_.erase(it);
        }
    }
}

long PuiseuxSeries::valuation_ticks() const
{
    if (!coeffs_.empty()) {
        return coeffs_.begin()->first;
    }
    return is_exact() ? kExact : trunc_ + 1;
}

JetPoly PuiseuxSeries::coefficient_ticks(long ticks) const
{
    if (ticks > trunc_) {
        throw TruncationError("coefficient of z^" + format_ticks(ticks, order_)
                              + " lies beyond the truncation order " + format_ticks(trunc_, order_));
    }
    auto it = coeffs_.find(ticks);
    return it == coeffs_.end() ? JetPoly(order_) : it->second;
}

JetPoly PuiseuxSeries::coefficient(const Rational &w) const
{
    return coefficient_ticks(rational_to_ticks(w, order_));
}

JetPoly series_coefficient(const PuiseuxSeries &s, const Rational &w)
{
    return s.coefficient(w);
}

PuiseuxSeries PuiseuxSeries::truncated(long trunc_ticks) const
{
    if (trunc_ticks >= trunc_) {
        return *this;
    }
    PuiseuxSeries r(order_, trunc_ticks);
    for (const auto &[e, c] : coeffs_) {
        if (e > trunc_ticks) {
            break;
        }
        r.coeffs_.emplace(e, c);
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::derivative() const
{
    PuiseuxSeries r(order_, is_exact() ? kExact : trunc_ - order_);
    for (const auto &[e, c] : coeffs_) {
        if (e != 0) {
            r.add_term(e - order_, c * ticks_to_rational(e, order_));
        }
    }
    return r;
}

PuiseuxSeries &PuiseuxSeries::operator+=(const PuiseuxSeries &other)
{
    if (other.order_ != order_) {
        throw IncompatibleField("series over different cyclotomic orders");
    }
    if (other.trunc_ < trunc_) {
        *this = truncated(other.trunc_);
    }
    for (const auto &[e, c] : other.coeffs_) {
        add_term(e, c);
    }
    return *this;
}

PuiseuxSeries &PuiseuxSeries::operator-=(const PuiseuxSeries &other)
{
    if (other.order_ != order_) {
        throw IncompatibleField("series over different cyclotomic orders");
    }
    if (other.trunc_ < trunc_) {
        *this = truncated(other.trunc_);
    }
    for (const auto &[e, c] : other.coeffs_) {
        add_term(e, -c);
    }
    return *this;
}

PuiseuxSeries &PuiseuxSeries::operator*=(const Rational &q)
{
    if (q == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto &[e, c] : coeffs_) {
        c *= q;
    }
    return *this;
}

PuiseuxSeries operator*(const PuiseuxSeries &a, const PuiseuxSeries &b)
{
    if (a.order_ != b.order_) {
        throw IncompatibleField("series over different cyclotomic orders");
    }
    // An unknown tail of one factor times the lowest term of the other bounds what is known.
    const long trunc = std::min(sat_add(a.trunc_, b.valuation_ticks()), sat_add(b.trunc_, a.valuation_ticks()));
    PuiseuxSeries r(a.order_, trunc);
    for (const auto &[ea, ca] : a.coeffs_) {
        for (const auto &[eb, cb] : b.coeffs_) {
            if (trunc < PuiseuxSeries::kExact && ea + eb > trunc) {
                break;
            }
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries &other) const
{
    if (other.order_ != order_) {
        throw IncompatibleField("series over different cyclotomic orders");
    }
    const long t = std::min(trunc_, other.trunc_);
    auto lhs = truncated(t);
    auto rhs = other.truncated(t);
    return lhs.coeffs_ == rhs.coeffs_;
}

std::string PuiseuxSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : coeffs_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.str() << ")";
        if (e != 0) {
            os << "*z^(" << format_ticks(e, order_) << ")";
        }
    }
    if (!is_exact()) {
        os << (first ? "" : " + ") << "O(z^(" << format_ticks(trunc_ + 1, order_) << "))";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

JetLevels JetLevels::untwisted(int num_vars, int order, Alphabet alphabet)
{
    return JetLevels{order, std::vector<int>(static_cast<std::size_t>(num_vars), 0), alphabet};
}

JetLevels JetLevels::twisted(int order, std::span<const int> alpha, Alphabet alphabet)
{
    JetLevels lv{order, {}, alphabet};
    for (int a : alpha) {
        lv.residues.push_back(normalize_residue(a, order));
    }
    return lv;
}

bool JetLevels::admits(const JetVar &v) const
{
    if (v.alphabet != alphabet || v.var < 1 || v.var > num_vars() || v.level > 0) {
        return false;
    }
    return normalize_residue(v.level, order) == residues[static_cast<std::size_t>(v.var) - 1];
}

long JetLevels::min_weight_ticks(int var) const
{
    const int r = residues.at(static_cast<std::size_t>(var) - 1);
    return r == 0 ? 0 : order - r;
}

std::vector<JetVar> JetLevels::variables_up_to(long max_weight_ticks) const
{
    std::vector<JetVar> vars;
    for (int i = 1; i <= num_vars(); ++i) {
        for (long w = min_weight_ticks(i); w <= max_weight_ticks; w += order) {
            vars.push_back(JetVar{alphabet, i, -w});
        }
    }
    return vars;
}

PuiseuxSeries jet_expansion(int var, const JetLevels &levels, long trunc_ticks)
{
    if (var < 1 || var > levels.num_vars()) {
        throw PreconditionError("jet_expansion: variable index " + std::to_string(var) + " out of range");
    }
    const int m = levels.order;
    PuiseuxSeries s(m, trunc_ticks);
    for (long w = levels.min_weight_ticks(var); w <= trunc_ticks; w += m) {
        s.add_term(w, JetPoly::variable(m, JetVar{levels.alphabet, var, -w}));
    }
    return s;
}

PuiseuxSeries substitute_jets_ticks(const JetPoly &p, const JetLevels &levels, long trunc_ticks)
{
    const int m = levels.order;
    if (p.order() != m) {
        throw IncompatibleField("substitute_jets: polynomial order differs from the level order");
    }
    std::map<int, PuiseuxSeries> expansions;
    PuiseuxSeries result(m, trunc_ticks);
    for (const auto &[mono, c] : p.terms()) {
        PuiseuxSeries term = PuiseuxSeries::constant(JetPoly::constant(m, c));
        for (const auto &[v, e] : mono.factors()) {
            if (v.level != 0) {
                throw PreconditionError("substitute_jets: variable " + v.str(m) + " is not at level 0");
            }
            auto it = expansions.find(v.var);
            if (it == expansions.end()) {
                it = expansions.emplace(v.var, jet_expansion(v.var, levels, trunc_ticks)).first;
            }
            for (int j = 0; j < e; ++j) {
                term = term * it->second;
            }
        }
        result += term;
    }
    return result.truncated(trunc_ticks);
}

PuiseuxSeries substitute_jets(const JetPoly &p, const JetLevels &levels, const Rational &max_exponent)
{
    return substitute_jets_ticks(p, levels, floor_ticks(max_exponent, levels.order));
}

Rational binomial(const Rational &top, long k)
{
    if (k < 0) {
        return 0;
    }
    Rational r = 1;
    for (long j = 0; j < k; ++j) {
        r *= (top - j);
        r /= (j + 1);
    }
    return r;
}

} // namespace orbijet
