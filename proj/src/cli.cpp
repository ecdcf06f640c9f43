#include <orbijet/cli.hpp>

#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <orbijet/coinv.hpp>
#include <orbijet/errors.hpp>
#include <orbijet/jetscheme.hpp>
#include <orbijet/parser.hpp>
#include <orbijet/quasiconf.hpp>
#include <orbijet/twisted.hpp>
#include <orbijet/va.hpp>

namespace orbijet
{

namespace
{

using nlohmann::ordered_json;

const std::vector<std::string> kCommands{"jet",          "twisted-jet",     "fixed-points", "check-va",
                                         "check-twisted", "check-quasiconf", "coinvariants"};

struct Options {
    std::string command;
    std::string input;
    std::optional<std::string> max_weight;
    std::optional<int> max_degree;
    std::optional<int> order;
    std::optional<int> window;
    std::string format = "json";
    std::uint64_t seed = 0;
};

Rational parse_rational(const std::string &s)
{
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw PreconditionError("not a rational number: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw PreconditionError("zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return q;
}

int integral(const Rational &q, const char *flag)
{
    if (q.get_den() != 1) {
        throw PreconditionError(std::string(flag) + " must be an integer for this command");
    }
    return static_cast<int>(q.get_num().get_si());
}

ordered_json check_json(const CheckResult &r)
{
    ordered_json j;
    j["name"] = r.name;
    j["inputs"] = r.inputs;
    j["pass"] = r.pass;
    if (r.witness) {
        j["witness"] = *r.witness;
    }
    return j;
}

// Collapses a batch of same-named results into one entry.
CheckResult summarize(const std::string &name, const std::string &inputs, const CheckReport &report)
{
    CheckResult s{name, inputs + ", " + std::to_string(report.results().size()) + " cases", report.all_passed(),
                  std::nullopt};
    for (const auto &r : report.results()) {
        if (!r.pass) {
            s.witness = r.inputs + (r.witness ? ": " + *r.witness : "");
            break;
        }
    }
    return s;
}

ordered_json dims_json(const DimTable &t, int m)
{
    ordered_json rows = ordered_json::array();
    std::size_t total = 0;
    for (const auto &[key, dim] : t) {
        rows.push_back({{"weight", format_ticks(key.first, m)}, {"degree", key.second}, {"dim", dim}});
        total += dim;
    }
    return {{"table", rows}, {"total", total}};
}

ordered_json generator_json(const JetPresentation &pres)
{
    ordered_json vars = ordered_json::array();
    for (const auto &v : pres.variables) {
        vars.push_back(v.str(pres.order));
    }
    ordered_json gens = ordered_json::array();
    for (const auto &g : pres.generators) {
        gens.push_back({{"relation", g.relation}, {"weight", format_ticks(g.weight_ticks, pres.order)},
                        {"poly", g.poly.str()}});
    }
    return {{"variables", vars}, {"generators", gens}};
}

// Monomials of degree 1 or 2 in untwisted jet variables of weight <= 2.
std::vector<JetPoly> random_monomials(int count, int num_vars, int order, std::mt19937_64 &rng)
{
    std::vector<JetPoly> out;
    if (num_vars == 0) {
        return out;
    }
    std::uniform_int_distribution<int> var(1, num_vars);
    std::uniform_int_distribution<int> level(0, 2);
    std::uniform_int_distribution<int> degree(1, 2);
    for (int c = 0; c < count; ++c) {
        JetPoly p = JetPoly::one(order);
        const int d = degree(rng);
        for (int k = 0; k < d; ++k) {
            const int i = var(rng);
            const long n = -level(rng);
            p = p * JetPoly::variable(order, JetVar{Alphabet::zero, i, n * order});
        }
        out.push_back(p);
    }
    return out;
}

std::vector<JetPoly> base_elements(const SchemeSpec &spec)
{
    std::vector<JetPoly> out;
    for (int i : spec.active_vars) {
        out.push_back(JetPoly::variable(spec.order, JetVar{Alphabet::zero, i, 0}));
    }
    return out;
}

std::string render_text(const ordered_json &j, int indent = 0)
{
    std::ostringstream os;
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const ordered_json &v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto &[key, val] : j.items()) {
        if (val.is_object()) {
            os << pad << key << ":\n" << render_text(val, indent + 2);
        } else if (val.is_array()) {
            os << pad << key << ":";
            if (val.empty()) {
                os << " (none)\n";
                continue;
            }
            os << "\n";
            for (const auto &e : val) {
                os << pad << "  -";
                if (e.is_object()) {
                    bool first = true;
                    for (const auto &[k, v] : e.items()) {
                        os << (first ? " " : ", ") << k << "=" << (v.is_array() || v.is_object() ? v.dump() : scalar(v));
                        first = false;
                    }
                } else {
                    os << " " << scalar(e);
                }
                os << "\n";
            }
        } else {
            os << pad << key << ": " << scalar(val) << "\n";
        }
    }
    return os.str();
}

int execute(const Options &opt, std::ostream &out)
{
    SpecFile file = load_spec_file(opt.input);
    if (opt.order) {
        if (*opt.order < 1) {
            throw PreconditionError("--order must be positive");
        }
        file.m = *opt.order;
    }
    const SchemeSpec spec = file.scheme();
    const DiagAutomorphism g = file.automorphism();
    const int m = spec.order;
    std::mt19937_64 rng(opt.seed);

    ordered_json report;
    report["command"] = opt.command;
    ordered_json inputs;
    inputs["input"] = opt.input;
    inputs["m"] = m;
    inputs["variables"] = file.variables;
    ordered_json rels = ordered_json::array();
    for (const auto &r : spec.relations) {
        rels.push_back(to_expression(r, file.variables));
    }
    inputs["relations"] = rels;
    inputs["exponents"] = std::vector<int>(g.exponents().begin(), g.exponents().end());
    ordered_json results = ordered_json::object();
    CheckReport checks;

    auto weight_or = [&](const char *dflt) { return parse_rational(opt.max_weight.value_or(dflt)); };

    if (opt.command == "jet") {
        const int w = integral(weight_or("2"), "--max-weight");
        inputs["max_weight"] = w;
        const auto pres = jet_generators(spec, w, JetMethod::T_recursion);
        const auto alt = jet_generators(spec, w, JetMethod::substitution);
        results = generator_json(pres);
        CheckResult agree{"substitution_agrees", "W=" + std::to_string(w), pres.generators == alt.generators,
                          std::nullopt};
        if (!agree.pass) {
            agree.witness = "generator lists differ";
        }
        checks.add(agree);
    } else if (opt.command == "twisted-jet") {
        const Rational w = weight_or("2");
        inputs["max_weight"] = w.get_str();
        results = generator_json(twisted_jet_generators(spec, g, w));
    } else if (opt.command == "fixed-points") {
        const int d = opt.max_degree.value_or(3);
        inputs["max_degree"] = d;
        const auto fixed = fixed_point_ring(spec, g);
        ordered_json vars = ordered_json::array();
        for (int i : fixed.active_vars) {
            vars.push_back(file.variables[static_cast<std::size_t>(i) - 1]);
        }
        ordered_json frels = ordered_json::array();
        for (const auto &r : fixed.relations) {
            frels.push_back(to_expression(r, file.variables));
        }
        results["variables"] = vars;
        results["relations"] = frels;
        results["dims"] = dims_json(coordinate_ring_dims(fixed, d), m);
    } else if (opt.command == "check-va") {
        const int w = integral(weight_or("4"), "--max-weight");
        const int bound = opt.window.value_or(2);
        inputs["max_weight"] = w;
        inputs["window"] = bound;
        inputs["seed"] = opt.seed;
        auto elems = base_elements(spec);
        for (const auto &r : spec.relations) {
            elems.push_back(r);
        }
        for (auto &p : random_monomials(3, spec.num_vars, m, rng)) {
            elems.push_back(std::move(p));
        }
        ordered_json names = ordered_json::array();
        for (const auto &a : elems) {
            names.push_back(a.str());
            checks.append(check_va_axioms(a, g, elems, w));
        }
        results["elements"] = names;
        for (const auto &a : elems) {
            for (const auto &b : elems) {
                checks.add(summarize("borcherds", "a=" + a.str() + ", b=" + b.str(),
                                     check_borcherds_range(a, b, bound, w)));
            }
        }
    } else if (opt.command == "check-twisted") {
        const Rational w = weight_or("4");
        const int bound = opt.window.value_or(1);
        inputs["max_weight"] = w.get_str();
        inputs["window"] = bound;
        inputs["seed"] = opt.seed;
        auto elems = base_elements(spec);
        for (auto &p : random_monomials(3, spec.num_vars, m, rng)) {
            elems.push_back(std::move(p));
        }
        ordered_json names = ordered_json::array();
        for (const auto &a : elems) {
            names.push_back(a.str());
        }
        results["elements"] = names;
        for (const auto &a : elems) {
            for (const auto &b : elems) {
                checks.append(check_twisted_axioms(a, b, g, w));
                checks.add(summarize("twisted_borcherds", "a=" + a.str() + ", b=" + b.str(),
                                     check_twisted_borcherds_range(a, b, g, bound, Rational(2 * bound + 1, 2), w)));
            }
        }
        const int max_n = std::min(4, static_cast<int>(floor_ticks(w, 1)));
        for (std::size_t r = 1; r <= spec.relations.size(); ++r) {
            for (int n = 0; n <= max_n; ++n) {
                checks.append(check_descent(spec, g, static_cast<int>(r), n, w));
            }
        }
    } else if (opt.command == "check-quasiconf") {
        const Rational w = weight_or("6");
        const int idx = opt.window.value_or(4);
        inputs["max_weight"] = w.get_str();
        inputs["window"] = idx;
        checks = check_commutators(g, idx, w);
    } else if (opt.command == "coinvariants") {
        const Rational w = weight_or("2");
        const int d = opt.max_degree.value_or(2);
        const int extra = opt.window.value_or(0);
        inputs["max_weight"] = w.get_str();
        inputs["max_degree"] = d;
        inputs["window"] = extra;
        OrbiSetup setup{spec, g, w, d, extra};
        const auto [j_min, j_max] = default_section_window(setup);
        results["section_window"] = {j_min, j_max};
        results["dims"] = dims_json(coinvariant_dims(setup), m);
        checks = verify_fixed_ring(setup);
    }

    report["inputs"] = inputs;
    report["results"] = results;
    ordered_json cj = ordered_json::array();
    for (const auto &r : checks.results()) {
        cj.push_back(check_json(r));
    }
    report["checks"] = cj;

    if (opt.format == "json") {
        out << report.dump(2) << "\n";
    } else {
        out << render_text(report);
        out << "status: " << (checks.all_passed() ? "pass" : "fail") << " (" << checks.failures() << " of "
            << checks.results().size() << " checks failed)\n";
    }
    return checks.all_passed() ? 0 : 1;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Jet schemes, twisted jet modules and orbifold coinvariants", "orbijet"};
    Options opt;
    app.add_option("command", opt.command, "jet | twisted-jet | fixed-points | check-va | check-twisted | "
                                           "check-quasiconf | coinvariants")
        ->required()
        ->check(CLI::IsMember(kCommands));
    app.add_option("--input", opt.input, "spec file (JSON)")->required();
    app.add_option("--max-weight", opt.max_weight, "weight bound W (rational)");
    app.add_option("--max-degree", opt.max_degree, "degree bound D");
    app.add_option("--order", opt.order, "override the order m");
    app.add_option("--window", opt.window, "index bound for checks, or extra section window for coinvariants");
    app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", opt.seed, "sampling seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        return execute(opt, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace orbijet
