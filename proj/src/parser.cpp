#include <orbijet/parser.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include <orbijet/errors.hpp>

namespace orbijet
{

namespace
{

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        const std::size_t start_col = col;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, start_col});
            col += j - i;
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            out.push_back({Tok::number, std::string(src.substr(i, j - i)), line, start_col});
            col += j - i;
            i = j;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, start_col);
        }
        out.push_back({kind, std::string(1, c), line, start_col});
        ++col;
        ++i;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser
{
public:
    Parser(std::string_view src, const std::vector<std::string> &vars, int order)
        : toks_(tokenize(src)), vars_(vars), order_(order)
    {
    }

    JetPoly parse()
    {
        JetPoly p = expr();
        if (peek().kind != Tok::end) {
            fail("unexpected '" + peek().text + "'");
        }
        return p;
    }

private:
    const Token &peek() const
    {
        return toks_[pos_];
    }
    const Token &take()
    {
        return toks_[pos_++];
    }
    [[noreturn]] void fail(const std::string &msg) const
    {
        const auto &t = peek();
        throw ParseError(t.kind == Tok::end ? msg + " (end of input)" : msg, t.line, t.column);
    }
    const Token &expect(Tok kind, const char *what)
    {
        if (peek().kind != kind) {
            fail(std::string("expected ") + what);
        }
        return take();
    }

    JetPoly expr()
    {
        bool negate = false;
        if (peek().kind == Tok::minus) {
            take();
            negate = true;
        }
        JetPoly acc = term();
        if (negate) {
            acc = -acc;
        }
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool minus = take().kind == Tok::minus;
            JetPoly t = term();
            if (minus) {
                acc -= t;
            } else {
                acc += t;
            }
        }
        return acc;
    }

    JetPoly term()
    {
        JetPoly acc = factor();
        while (peek().kind == Tok::star) {
            take();
            acc = acc * factor();
        }
        return acc;
    }

    JetPoly factor()
    {
        JetPoly b = base();
        if (peek().kind == Tok::caret) {
            take();
            const auto &t = expect(Tok::number, "a natural number exponent");
            if (t.text.size() > 6) {
                throw ParseError("exponent too large", t.line, t.column);
            }
            b = b.pow(static_cast<unsigned>(std::stoul(t.text)));
        }
        return b;
    }

    JetPoly base()
    {
        const auto &t = peek();
        switch (t.kind) {
        case Tok::ident: {
            take();
            if (t.text == "zeta") {
                return JetPoly::constant(order_, zeta_pow(order_, 1));
            }
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == t.text) {
                    return JetPoly::variable(order_, JetVar{Alphabet::zero, static_cast<int>(i) + 1, 0});
                }
            }
            throw UnknownIdentifier("unknown identifier '" + t.text + "'", t.line, t.column);
        }
        case Tok::number: {
            take();
            Rational q(Integer(t.text));
            if (peek().kind == Tok::slash) {
                take();
                const auto &d = expect(Tok::number, "a denominator");
                Integer den(d.text);
                if (den == 0) {
                    throw ParseError("zero denominator", d.line, d.column);
                }
                q /= Rational(den);
            }
            return JetPoly::constant(order_, q);
        }
        case Tok::lparen: {
            take();
            JetPoly inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        default:
            fail("expected a variable, number, zeta or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const std::vector<std::string> &vars_;
    int order_;
};

std::string rational_atom(const Rational &q)
{
    if (q.get_den() == 1) {
        return q < 0 ? "(" + q.get_str() + ")" : q.get_str();
    }
    return "(" + q.get_str() + ")";
}

// A parenthesized sum c_0 + c_1 zeta + ... in the expression grammar.
std::string cyclotomic_atom(const CycScalar &c)
{
    std::string s;
    const auto &cs = c.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k] == 0) {
            continue;
        }
        std::string zeta = k == 0 ? "" : (k == 1 ? "zeta" : "zeta^" + std::to_string(k));
        std::string coef;
        if (k == 0 || (cs[k] != 1 && cs[k] != -1)) {
            coef = rational_atom(Rational(abs(cs[k])));
        }
        std::string piece = coef.empty() ? zeta : (zeta.empty() ? coef : coef + "*" + zeta);
        if (s.empty()) {
            s = (cs[k] < 0 ? "-" : "") + piece;
        } else {
            s += (cs[k] < 0 ? " - " : " + ") + piece;
        }
    }
    return "(" + s + ")";
}

} // namespace

JetPoly parse_polynomial(std::string_view src, const std::vector<std::string> &vars, int order)
{
    return Parser(src, vars, order).parse();
}

std::string to_expression(const JetPoly &p, const std::vector<std::string> &vars)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[mono, c] : p.terms()) {
        std::string factors;
        for (const auto &[v, e] : mono.factors()) {
            if (v.level != 0 || v.alphabet != Alphabet::zero || v.var < 1
                || static_cast<std::size_t>(v.var) > vars.size()) {
                throw PreconditionError("to_expression: " + v.str(p.order()) + " has no name");
            }
            if (!factors.empty()) {
                factors += "*";
            }
            factors += vars[static_cast<std::size_t>(v.var) - 1];
            if (e != 1) {
                factors += "^" + std::to_string(e);
            }
        }
        bool negative = false;
        std::string coef;
        if (c.is_rational()) {
            const Rational &q = c.rational_part();
            negative = q < 0;
            const Rational a = abs(q);
            if (a != 1 || factors.empty()) {
                coef = a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
            }
        } else {
            coef = cyclotomic_atom(c);
        }
        std::string piece = coef.empty() ? factors : (factors.empty() ? coef : coef + "*" + factors);
        if (out.empty()) {
            out = (negative ? "-" : "") + piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
    }
    return out;
}

SchemeSpec SpecFile::scheme() const
{
    std::vector<JetPoly> rels;
    for (const auto &r : relations) {
        rels.push_back(parse_polynomial(r, variables, m));
    }
    return SchemeSpec::make(m, static_cast<int>(variables.size()), std::move(rels));
}

DiagAutomorphism SpecFile::automorphism() const
{
    if (exponents.empty()) {
        return DiagAutomorphism::identity(m, static_cast<int>(variables.size()));
    }
    return DiagAutomorphism(m, exponents);
}

SpecFile parse_spec_json(const std::string &text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw PreconditionError(std::string("spec file is not valid JSON: ") + e.what());
    }
    SpecFile spec;
    try {
        spec.m = j.at("m").get<int>();
        spec.variables = j.at("variables").get<std::vector<std::string>>();
        spec.relations = j.value("relations", std::vector<std::string>{});
        spec.exponents = j.value("exponents", std::vector<int>{});
    } catch (const nlohmann::json::exception &e) {
        throw PreconditionError(std::string("malformed spec file: ") + e.what());
    }
    if (spec.m < 1) {
        throw PreconditionError("spec file: m must be positive");
    }
    std::set<std::string> seen;
    for (const auto &v : spec.variables) {
        const bool ident = !v.empty() && std::isalpha(static_cast<unsigned char>(v[0]))
                           && std::all_of(v.begin(), v.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
        if (!ident || v == "zeta") {
            throw PreconditionError("spec file: invalid variable name '" + v + "'");
        }
        if (!seen.insert(v).second) {
            throw PreconditionError("spec file: duplicate variable '" + v + "'");
        }
    }
    if (!spec.exponents.empty() && spec.exponents.size() != spec.variables.size()) {
        throw PreconditionError("spec file: exponents and variables differ in length");
    }
    return spec;
}

SpecFile load_spec_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot read spec file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec_json(ss.str());
}

} // namespace orbijet
