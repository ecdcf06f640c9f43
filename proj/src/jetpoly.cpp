#include <orbijet/jetpoly.hpp>

#include <algorithm>
#include <sstream>

#include <orbijet/errors.hpp>

namespace orbijet
{

Rational ticks_to_rational(long ticks, int order)
{
    Rational q(ticks, order);
    q.canonicalize();
    return q;
}

long rational_to_ticks(const Rational &q, int order)
{
    Rational t = q * order;
    t.canonicalize();
    if (t.get_den() != 1) {
        throw PreconditionError(q.get_str() + " is not a multiple of 1/" + std::to_string(order));
    }
    return t.get_num().get_si();
}

long floor_ticks(const Rational &q, int order)
{
    Rational t = q * order;
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    return f.get_si();
}

std::string format_ticks(long ticks, int order)
{
    return ticks_to_rational(ticks, order).get_str();
}

std::string JetVar::str(int order) const
{
    return std::string(alphabet == Alphabet::infinity ? "xinf" : "x") + std::to_string(var) + "["
           + format_ticks(level, order) + "]";
}

Monomial::Monomial(JetVar v, int exponent)
{
    if (exponent > 0) {
        factors_.emplace_back(v, exponent);
    }
}

Monomial::Monomial(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor &a, const Factor &b) { return a.first < b.first; });
    for (auto &f : factors) {
        if (f.second <= 0) {
            continue;
        }
        if (!factors_.empty() && factors_.back().first == f.first) {
            factors_.back().second += f.second;
        } else {
            factors_.push_back(f);
        }
    }
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto &[v, e] : factors_) {
        d += e;
    }
    return d;
}

long Monomial::weight_ticks() const
{
    long w = 0;
    for (const auto &[v, e] : factors_) {
        w += v.weight_ticks() * e;
    }
    return w;
}

int Monomial::exponent(const JetVar &v) const
{
    for (const auto &[u, e] : factors_) {
        if (u == v) {
            return e;
        }
    }
    return 0;
}

Monomial Monomial::divided_by(const JetVar &v) const
{
    Monomial r;
    r.factors_.reserve(factors_.size());
    for (const auto &[u, e] : factors_) {
        if (u == v) {
            if (e > 1) {
                r.factors_.emplace_back(u, e - 1);
            }
        } else {
            r.factors_.emplace_back(u, e);
        }
    }
    return r;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first == j->first) {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        } else if (i->first < j->first) {
            r.factors_.push_back(*i++);
        } else {
            r.factors_.push_back(*j++);
        }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    return r;
}

std::string Monomial::str(int order) const
{
    if (factors_.empty()) {
        return "1";
    }
    std::string s;
    for (const auto &[v, e] : factors_) {
        if (!s.empty()) {
            s += "*";
        }
        s += v.str(order);
        if (e > 1) {
            s += "^" + std::to_string(e);
        }
    }
    return s;
}

JetPoly JetPoly::constant(int order, const CycScalar &c)
{
    JetPoly p(order);
    p.add_term(Monomial{}, c);
    return p;
}

JetPoly JetPoly::constant(int order, const Rational &c)
{
    return constant(order, CycScalar(order, c));
}

JetPoly JetPoly::variable(int order, const JetVar &v)
{
    return monomial(order, Monomial(v), CycScalar(order, 1L));
}

JetPoly JetPoly::monomial(int order, const Monomial &mono, const CycScalar &c)
{
    JetPoly p(order);
    p.add_term(mono, c);
    return p;
}

void JetPoly::add_term(const Monomial &mono, const CycScalar &c)
{
    if (c.order() != order_) {
        throw IncompatibleField("coefficient order " + std::to_string(c.order()) + " in a polynomial over order "
                                + std::to_string(order_));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void JetPoly::check_compatible(const JetPoly &other) const
{
    if (order_ != other.order_) {
        throw IncompatibleField("polynomials over different cyclotomic orders: " + std::to_string(order_) + " vs "
                                + std::to_string(other.order_));
    }
}

JetPoly &JetPoly::operator+=(const JetPoly &other)
{
    check_compatible(other);
    for (const auto &[mono, c] : other.terms_) {
        add_term(mono, c);
    }
    return *this;
}

JetPoly &JetPoly::operator-=(const JetPoly &other)
{
    check_compatible(other);
    for (const auto &[mono, c] : other.terms_) {
        add_term(mono, -c);
    }
    return *this;
}

JetPoly &JetPoly::operator*=(const CycScalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[mono, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

JetPoly &JetPoly::operator*=(const Rational &q)
{
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[mono, coeff] : terms_) {
        coeff *= q;
    }
    return *this;
}

JetPoly operator*(const JetPoly &a, const JetPoly &b)
{
    a.check_compatible(b);
    JetPoly r(a.order_);
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

JetPoly JetPoly::operator-() const
{
    JetPoly r(*this);
    for (auto &[mono, c] : r.terms_) {
        c = -c;
    }
    return r;
}

JetPoly JetPoly::pow(unsigned e) const
{
    JetPoly r = one(order_);
    JetPoly base = *this;
    while (e > 0) {
        if (e & 1U) {
            r = r * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return r;
}

bool operator==(const JetPoly &a, const JetPoly &b)
{
    return a.order_ == b.order_ && a.terms_ == b.terms_;
}

bool operator<(const JetPoly &a, const JetPoly &b)
{
    if (a.order_ != b.order_) {
        return a.order_ < b.order_;
    }
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(), [](const auto &x, const auto &y) {
            if (x.first < y.first) {
                return true;
            }
            if (y.first < x.first) {
                return false;
            }
            return x.second.coeffs() < y.second.coeffs();
        });
}

std::optional<long> JetPoly::homogeneous_weight_ticks() const
{
    std::optional<long> w;
    for (const auto &[mono, c] : terms_) {
        const long mw = mono.weight_ticks();
        if (w && *w != mw) {
            return std::nullopt;
        }
        w = mw;
    }
    return w.value_or(0);
}

long JetPoly::max_weight_ticks() const
{
    long w = 0;
    for (const auto &[mono, c] : terms_) {
        w = std::max(w, mono.weight_ticks());
    }
    return w;
}

int JetPoly::max_degree() const
{
    int d = 0;
    for (const auto &[mono, c] : terms_) {
        d = std::max(d, mono.degree());
    }
    return d;
}

std::set<JetVar> JetPoly::variables() const
{
    std::set<JetVar> vars;
    for (const auto &[mono, c] : terms_) {
        for (const auto &[v, e] : mono.factors()) {
            vars.insert(v);
        }
    }
    return vars;
}

std::string JetPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[mono, c] : terms_) {
        std::string cs;
        bool negative = false;
        if (c.is_rational()) {
            const Rational &q = c.rational_part();
            negative = q < 0;
            cs = Rational(abs(q)).get_str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (mono.is_one()) {
            os << cs;
        } else if (cs == "1") {
            os << mono.str(order_);
        } else {
            os << cs << "*" << mono.str(order_);
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const JetPoly &p)
{
    return os << p.str();
}

JetPoly derivation_T(const JetPoly &p)
{
    const int m = p.order();
    JetPoly r(m);
    for (const auto &[mono, c] : p.terms()) {
        for (const auto &[v, e] : mono.factors()) {
            // -(n - 1) with n = level / m
            const Rational factor = ticks_to_rational(m - v.level, m) * e;
            JetVar lowered = v;
            lowered.level -= m;
            r.add_term(mono.divided_by(v) * Monomial(lowered), c * factor);
        }
    }
    return r;
}

JetPoly divided_T_power(const JetPoly &p, int n)
{
    if (n < 0) {
        throw PreconditionError("divided_T_power: negative exponent");
    }
    JetPoly r = p;
    for (int j = 1; j <= n; ++j) {
        r = derivation_T(r) * Rational(1, j);
    }
    return r;
}

int monomial_character(std::span<const int> alpha, const Monomial &mono, int order)
{
    long r = 0;
    for (const auto &[v, e] : mono.factors()) {
        if (v.var < 1 || static_cast<std::size_t>(v.var) > alpha.size()) {
            throw PreconditionError("automorphism has no exponent for variable index " + std::to_string(v.var));
        }
        r += static_cast<long>(alpha[static_cast<std::size_t>(v.var) - 1]) * e;
    }
    r %= order;
    return static_cast<int>(r < 0 ? r + order : r);
}

JetPoly apply_automorphism(std::span<const int> alpha, const JetPoly &p)
{
    const int m = p.order();
    std::vector<CycScalar> powers;
    powers.reserve(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        powers.push_back(zeta_pow(m, r));
    }
    JetPoly out(m);
    for (const auto &[mono, c] : p.terms()) {
        out.add_term(mono, c * powers[static_cast<std::size_t>(monomial_character(alpha, mono, m))]);
    }
    return out;
}

std::vector<JetPoly> eigen_decompose(std::span<const int> alpha, const JetPoly &p)
{
    const int m = p.order();
    std::vector<JetPoly> parts(static_cast<std::size_t>(m), JetPoly(m));
    for (const auto &[mono, c] : p.terms()) {
        parts[static_cast<std::size_t>(monomial_character(alpha, mono, m))].add_term(mono, c);
    }
    return parts;
}

std::optional<int> eigen_index(std::span<const int> alpha, const JetPoly &p)
{
    std::optional<int> r;
    for (const auto &[mono, c] : p.terms()) {
        const int ch = monomial_character(alpha, mono, p.order());
        if (r && *r != ch) {
            return std::nullopt;
        }
        r = ch;
    }
    return r.value_or(0);
}

JetPoly relabel(const JetPoly &p, Alphabet alphabet)
{
    JetPoly out(p.order());
    for (const auto &[mono, c] : p.terms()) {
        std::vector<Monomial::Factor> fs = mono.factors();
        for (auto &f : fs) {
            f.first.alphabet = alphabet;
        }
        out.add_term(Monomial(std::move(fs)), c);
    }
    return out;
}

} // namespace orbijet
