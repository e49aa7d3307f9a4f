#include "zetacomb/cli.hpp"

#include "zetacomb/dirichlet.hpp"
#include "zetacomb/errors.hpp"
#include "zetacomb/io.hpp"
#include "zetacomb/measures.hpp"
#include "zetacomb/specfun.hpp"
#include "zetacomb/tde.hpp"
#include "zetacomb/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace zetacomb {

namespace {

// path or flag-syntax problems map to exit 2, unlike computation errors
struct UsageError {
    std::string message;
};

double to_number(const std::string& text, const std::string& flag) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0')
        throw UsageError{flag + ": expected a number, got \"" + text + "\""};
    return v;
}

Complex to_complex(const std::string& text, const std::string& flag) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw UsageError{flag + ": expected RE,IM, got \"" + text + "\""};
    return {to_number(text.substr(0, comma), flag), to_number(text.substr(comma + 1), flag)};
}

const std::string& need(const CommandInvocation& inv, const std::string& flag) {
    const auto it = inv.flags.find(flag);
    if (it == inv.flags.end())
        throw UsageError{"--fn " + inv.flags.at("--fn") + " requires " + flag};
    return it->second;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// empty path means standard output
void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError{"cannot write " + path};
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

const std::vector<std::string>& function_names() {
    static const std::vector<std::string> names{"chi",   "zeta",  "hurwitz", "periodic",
                                                "lerch", "tde-f", "tde-g",   "gk"};
    return names;
}

Complex evaluate(const CommandInvocation& inv, Complex s) {
    const std::string& fn = inv.flags.at("--fn");
    if (fn == "chi") return chi(s);
    if (fn == "zeta") return riemann_zeta(s);
    if (fn == "hurwitz") return hurwitz_zeta(s, to_number(need(inv, "--a"), "--a"));
    if (fn == "periodic") return periodic_zeta(to_number(need(inv, "--e"), "--e"), s);
    const double d = fn == "lerch" || fn == "tde-f" || fn == "tde-g"
                         ? to_number(need(inv, "--d"), "--d")
                         : 0.0;
    if (fn == "lerch") return lerch_sum(d, to_number(need(inv, "--e"), "--e"), s);
    if (fn == "tde-f") return tde_f(d, to_number(need(inv, "--e"), "--e"), s);
    if (fn == "tde-g") return tde_g(d, to_number(need(inv, "--e"), "--e"), s);
    const double k = to_number(need(inv, "--k"), "--k");
    if (k != std::round(k)) throw UsageError{"--k must be an integer"};
    return zeta_shift_g(static_cast<int>(k), s);
}

int cmd_eval(const CommandInvocation& inv) {
    const Complex value = evaluate(inv, to_complex(inv.flags.at("--s"), "--s"));
    std::cout << format_complex(value) << "\n";
    return 0;
}

int cmd_verify(const CommandInvocation& inv) {
    std::uint64_t seed = 0;
    if (inv.flags.count("--seed")) {
        const std::string& text = inv.flags.at("--seed");
        char* end = nullptr;
        seed = std::strtoull(text.c_str(), &end, 10);
        if (end == text.c_str() || *end != '\0')
            throw UsageError{"--seed: expected an integer, got \"" + text + "\""};
    }
    const VerificationReport rep = run_suite(inv.flags.at("--suite"), seed);
    std::printf("suite %s  seed %llu  checks %zu\n", rep.suite.c_str(),
                static_cast<unsigned long long>(rep.seed), rep.checks.size());
    for (const Check& c : rep.checks)
        std::printf("  [%s] %-46s max_error %.3e  tolerance %.3e\n", c.passed ? "pass" : "FAIL",
                    c.label.c_str(), c.max_error, c.tolerance);
    std::printf("%s\n", rep.passed() ? "PASS" : "FAIL");
    if (!inv.output_path.empty()) write_output(inv.output_path, report_to_json(rep));
    return rep.passed() ? 0 : 1;
}

int cmd_decompose(const CommandInvocation& inv) {
    const AtomicEvenMeasure m = measure_from_json(read_file(inv.input_path));
    const double window = to_number(inv.flags.at("--window"), "--window");
    write_output(inv.output_path, decomposition_to_json(decompose_prony(m, window)));
    return 0;
}

int cmd_fourier(const CommandInvocation& inv) {
    const TdeDecomposition dec = decomposition_from_json(read_file(inv.input_path));
    write_output(inv.output_path, decomposition_to_json(fourier_measure(dec)));
    return 0;
}

int cmd_table(const CommandInvocation& inv) {
    const std::string& range = inv.flags.at("--sigma-range");
    const auto c1 = range.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : range.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw UsageError{"--sigma-range: expected A:B:STEP, got \"" + range + "\""};
    const double lo = to_number(range.substr(0, c1), "--sigma-range");
    const double hi = to_number(range.substr(c1 + 1, c2 - c1 - 1), "--sigma-range");
    const double step = to_number(range.substr(c2 + 1), "--sigma-range");
    if (!(step > 0.0) || hi < lo) throw UsageError{"--sigma-range: need A <= B and STEP > 0"};

    std::string csv = "sigma,re,im\n";
    char row[120];
    // half-step slack keeps B itself in the table despite rounding
    for (double sigma = lo; sigma <= hi + 0.5 * step; sigma += step) {
        const Complex v = evaluate(inv, Complex{sigma, 0.0});
        std::snprintf(row, sizeof row, "%.17g,%.17g,%.17g\n", sigma, v.real(), v.imag());
        csv += row;
    }
    write_output(inv.output_path, csv);
    return 0;
}

} // namespace

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"functional-equation toolkit: special functions, shifted zeta "
                 "combinations, comb measures, Prony decomposition"};
    app.name("zetacomb");
    app.require_subcommand(1);

    // every option is collected as a raw string; typed validation happens in
    // the handlers so the whole invocation can be recorded uniformly
    std::map<std::string, std::string> values;
    auto opt = [&values](CLI::App* sub, const std::string& flag, const char* help,
                         bool required) {
        CLI::Option* o = sub->add_option(flag, values[flag], help);
        if (required) o->required();
        return o;
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a function at a complex point");
    opt(eval, "--fn", "function name", true)->check(CLI::IsMember(function_names()));
    opt(eval, "--s", "evaluation point RE,IM", true);
    opt(eval, "--a", "hurwitz shift", false);
    opt(eval, "--d", "translation parameter", false);
    opt(eval, "--e", "twist parameter", false);
    opt(eval, "--k", "shift index", false);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    opt(verify, "--suite", "suite name", true)->check(CLI::IsMember(suite_names()));
    opt(verify, "--seed", "fixture seed (default 0)", false);
    opt(verify, "--json", "also write the report as JSON", false);

    CLI::App* decompose =
        app.add_subcommand("decompose", "recover a finite comb combination from a measure");
    opt(decompose, "--in", "measure JSON", true);
    opt(decompose, "--window", "support window", true);
    opt(decompose, "--out", "decomposition JSON (default stdout)", false);

    CLI::App* fourier = app.add_subcommand("fourier", "transform side of a decomposition");
    opt(fourier, "--in", "decomposition JSON", true);
    opt(fourier, "--out", "decomposition JSON (default stdout)", false);

    CLI::App* table = app.add_subcommand("table", "CSV of a function along the real axis");
    opt(table, "--fn", "function name", true)->check(CLI::IsMember(function_names()));
    opt(table, "--sigma-range", "A:B:STEP inclusive", true);
    opt(table, "--a", "hurwitz shift", false);
    opt(table, "--d", "translation parameter", false);
    opt(table, "--e", "twist parameter", false);
    opt(table, "--k", "shift index", false);
    opt(table, "--csv", "output path (default stdout)", false);

    std::vector<const char*> argv{"zetacomb"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    CommandInvocation inv;
    inv.subcommand = sub->get_name();
    for (const CLI::Option* o : sub->get_options())
        if (o->count() > 0 && !o->get_name().empty()) inv.flags[o->get_name()] = values[o->get_name()];
    if (inv.flags.count("--in")) inv.input_path = inv.flags.at("--in");
    for (const char* out : {"--out", "--csv", "--json"})
        if (inv.flags.count(out)) inv.output_path = inv.flags.at(out);

    try {
        if (inv.subcommand == "eval") return cmd_eval(inv);
        if (inv.subcommand == "verify") return cmd_verify(inv);
        if (inv.subcommand == "decompose") return cmd_decompose(inv);
        if (inv.subcommand == "fourier") return cmd_fourier(inv);
        return cmd_table(inv);
    } catch (const UsageError& e) {
        std::cerr << e.message << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace zetacomb
