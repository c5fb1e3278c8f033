#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <leibniz/calculus.hpp>
#include <leibniz/dsl/evaluate.hpp>
#include <leibniz/dsl/parser.hpp>
#include <leibniz/dsl/transfer.hpp>
#include <leibniz/error.hpp>
#include <leibniz/gallery.hpp>
#include <leibniz/serialize.hpp>

namespace leibniz::cli
{

namespace
{

using nlohmann::json;

enum class Format { text, json };

struct CliConfig {
    int precision = default_precision;
    Format format = Format::text;
    std::uint64_t seed = 0;
    std::vector<std::string> bindings;
};

// A failure that maps straight onto an exit code.
struct Failure {
    int code;
    std::string message;
};

struct Definitions {
    std::vector<std::string> order;
    std::map<std::string, dsl::Expr> exprs;
};

bool valid_identifier(const std::string &name)
{
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; });
}

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string describe(const Error &e, const std::string &source)
{
    std::string msg = e.what();
    if (e.position() && *e.position() <= source.size()) {
        msg += "\n  " + source + "\n  " + std::string(*e.position(), ' ') + "^";
    }
    return msg;
}

dsl::Expr parse_or_fail(const std::string &source, const std::string &what)
{
    try {
        return dsl::parse(source);
    } catch (const Error &e) {
        throw Failure{exit_code::usage, what + ": " + describe(e, source)};
    }
}

// name=expr pairs, each expanded with the earlier ones. A binding may use
// eps, H and earlier names; `allowed_free` names (a differentiation
// variable) may also stay free.
Definitions read_bindings(const std::vector<std::string> &raw, const std::set<std::string> &allowed_free)
{
    Definitions defs;
    std::set<std::string> later;
    for (const auto &b : raw) {
        const auto eq = b.find('=');
        if (eq != std::string::npos) {
            later.insert(trim(b.substr(0, eq)));
        }
    }
    for (const auto &b : raw) {
        const auto eq = b.find('=');
        if (eq == std::string::npos) {
            throw Failure{exit_code::usage, "binding '" + b + "' is not of the form name=expr"};
        }
        const std::string name = trim(b.substr(0, eq));
        if (!valid_identifier(name) || dsl::is_reserved_word(name)) {
            throw Failure{exit_code::usage, "invalid binding name '" + name + "'"};
        }
        later.erase(name);
        dsl::Expr e = dsl::substitute(parse_or_fail(trim(b.substr(eq + 1)), "binding " + name), defs.exprs);
        for (const auto &v : dsl::free_variables(e)) {
            if (later.count(v) != 0) {
                throw Failure{exit_code::usage, "binding " + name + " refers to the later binding " + v};
            }
            if (allowed_free.count(v) == 0) {
                throw Failure{exit_code::usage, "binding " + name + " refers to the unbound name " + v};
            }
        }
        if (defs.exprs.count(name) == 0) {
            defs.order.push_back(name);
        }
        defs.exprs.insert_or_assign(name, std::move(e));
    }
    return defs;
}

std::string value_line(const LcNumber &x)
{
    return x.str() + " (" + classification_name(classify(x)) + ")";
}

json value_json(const std::string &source, const LcNumber &x)
{
    json j = {{"expression", source}, {"value", to_json(x)}, {"series", x.str()},
              {"classification", classification_name(classify(x))}};
    j["shadow"] = nullptr;
    if (is_finite(x)) {
        try {
            j["shadow"] = standard_part(x).str();
        } catch (const Error &) {
        }
    }
    return j;
}

void print_value(std::ostream &out, const CliConfig &config, const std::string &source, const LcNumber &x)
{
    if (config.format == Format::json) {
        out << value_json(source, x).dump(2) << "\n";
        return;
    }
    out << value_line(x) << "\n";
    if (is_finite(x)) {
        try {
            out << "shadow: " << standard_part(x) << "\n";
        } catch (const Error &) {
            out << "shadow: unknown at this precision\n";
        }
    }
}

LcNumber evaluate_or_fail(const dsl::Expr &e, const dsl::Bindings &env, int precision, const std::string &source)
{
    try {
        return dsl::evaluate(e, env, precision);
    } catch (const Error &err) {
        throw Failure{exit_code::evaluation, describe(err, source)};
    }
}

int cmd_eval(const std::string &source, const CliConfig &config, std::ostream &out)
{
    const Definitions defs = read_bindings(config.bindings, {});
    const dsl::Expr e = dsl::substitute(parse_or_fail(source, "expression"), defs.exprs);
    print_value(out, config, source, evaluate_or_fail(e, {}, config.precision, source));
    return exit_code::ok;
}

int cmd_diff(const std::string &source, const std::string &var, const std::string &point_text, const CliConfig &config,
             std::ostream &out)
{
    if (!valid_identifier(var) || dsl::is_reserved_word(var)) {
        throw Failure{exit_code::usage, "invalid variable name '" + var + "'"};
    }
    const auto point = Rational::parse(point_text);
    if (!point) {
        throw Failure{exit_code::usage, "point '" + point_text + "' is not a rational number"};
    }
    const Definitions defs = read_bindings(config.bindings, {var});
    const dsl::Expr f = dsl::substitute(parse_or_fail(source, "expression"), defs.exprs);
    std::optional<calculus::DiffResult> result;
    try {
        result.emplace(calculus::derivative_at(f, var, *point, {}, calculus::Direction::forward, config.precision));
    } catch (const Error &err) {
        throw Failure{exit_code::evaluation, describe(err, source)};
    }
    if (config.format == Format::json) {
        json j = to_json(*result);
        j["expression"] = source;
        j["variable"] = var;
        j["point"] = point->str();
        out << j.dump(2) << "\n";
    } else {
        out << "quotient: " << result->quotient().str() << "\n";
        out << "shadow: " << result->shadow() << "\n";
        out << "superfluous: " << result->discarded().str() << "\n";
    }
    return exit_code::ok;
}

int cmd_gallery(const std::string &id_text, const std::string &csv_path, const CliConfig &config, std::ostream &out)
{
    const auto id = parse_example_id(id_text);
    if (!id) {
        throw Failure{exit_code::usage, "unknown example '" + id_text +
                                            "'; choose parallel_lines, infinitesimal_equality, ellipse_parabola or "
                                            "product_rule"};
    }
    if (!csv_path.empty() && *id != ExampleId::ellipse_parabola) {
        throw Failure{exit_code::usage, "--csv is only available for ellipse_parabola"};
    }
    GalleryReport report(*id);
    try {
        report = gallery::run_example(*id, config.precision);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) {
                throw Failure{exit_code::usage, "cannot write " + csv_path};
            }
            csv << gallery::parabola_csv(gallery::default_grid(), config.precision);
        }
    } catch (const Error &err) {
        throw Failure{exit_code::evaluation, err.what()};
    }
    if (config.format == Format::json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << report.text();
    }
    return report.pass() ? exit_code::ok : exit_code::claim_failed;
}

struct CorpusLine {
    std::size_t line;
    std::string lhs_text, rhs_text;
    dsl::Expr lhs, rhs;
};

std::string point_str(const dsl::Bindings &point)
{
    std::string out = "{";
    for (const auto &[name, value] : point) {
        if (out.size() > 1) {
            out += ", ";
        }
        out += name + " = " + value.str();
    }
    return out + "}";
}

int cmd_transfer(const std::string &path, std::size_t trials, const CliConfig &config, std::ostream &out,
                 std::ostream &err)
{
    std::ifstream file(path);
    if (!file) {
        throw Failure{exit_code::usage, "cannot read " + path};
    }
    std::vector<CorpusLine> corpus;
    std::vector<std::string> problems;
    std::string raw;
    for (std::size_t n = 1; std::getline(file, raw); ++n) {
        const std::string text = trim(raw.substr(0, raw.find('#')));
        if (text.empty()) {
            continue;
        }
        const auto sep = text.find("==");
        if (sep == std::string::npos || text.find("==", sep + 2) != std::string::npos) {
            problems.push_back("line " + std::to_string(n) + ": expected exactly one 'lhs == rhs'");
            continue;
        }
        const std::string lhs = trim(text.substr(0, sep));
        const std::string rhs = trim(text.substr(sep + 2));
        try {
            dsl::Expr l = dsl::parse(lhs);
            dsl::Expr r = dsl::parse(rhs);
            for (const auto *e : {&l, &r}) {
                if (!dsl::is_rational_expression(*e)) {
                    throw Error(ErrorKind::NonRationalNode, "sqrt and st are not allowed in identities");
                }
            }
            corpus.push_back({n, lhs, rhs, l, r});
        } catch (const Error &e) {
            problems.push_back("line " + std::to_string(n) + ": " + e.what());
        }
    }
    if (!problems.empty()) {
        for (const auto &p : problems) {
            err << p << "\n";
        }
        return exit_code::usage;
    }

    json results = json::array();
    std::size_t failed = 0;
    std::ostringstream text;
    for (const auto &item : corpus) {
        dsl::TransferReport report;
        try {
            report = dsl::identities_transfer_check(item.lhs, item.rhs, trials, config.seed, config.precision);
        } catch (const Error &e) {
            throw Failure{exit_code::evaluation, "line " + std::to_string(item.line) + ": " + e.what()};
        }
        const bool holds = report.holds();
        failed += holds ? 0 : 1;
        if (config.format == Format::json) {
            results.push_back({{"line", item.line},
                               {"lhs", item.lhs_text},
                               {"rhs", item.rhs_text},
                               {"holds", holds},
                               {"report", to_json(report)}});
            continue;
        }
        const std::size_t finite_ok = static_cast<std::size_t>(
            std::count_if(report.finite_samples.begin(), report.finite_samples.end(),
                          [](const auto &s) { return s.status == dsl::SampleStatus::agree; }));
        const std::size_t infinite_ok = static_cast<std::size_t>(
            std::count_if(report.infinite_samples.begin(), report.infinite_samples.end(),
                          [](const auto &s) { return s.status == dsl::SampleStatus::agree; }));
        text << "line " << item.line << ": " << item.lhs_text << " == " << item.rhs_text << "\n";
        text << "  " << (report.identity ? "identity" : "NOT an identity") << "; finite samples agree "
             << finite_ok << "/" << report.finite_samples.size() << ", inassignable samples agree " << infinite_ok
             << "/" << report.infinite_samples.size() << "\n";
        if (report.counterexample) {
            text << "  counterexample: " << point_str(report.counterexample->point) << ": "
                 << report.counterexample->lhs->str() << " != " << report.counterexample->rhs->str() << "\n";
        }
    }
    if (config.format == Format::json) {
        out << json{{"file", path},
                    {"seed", config.seed},
                    {"identities", std::move(results)},
                    {"count", corpus.size()},
                    {"failed", failed},
                    {"pass", failed == 0}}
                   .dump(2)
            << "\n";
    } else {
        out << text.str();
        out << corpus.size() << " identities checked, " << failed << " failed (seed " << config.seed << ")\n";
    }
    return failed == 0 ? exit_code::ok : exit_code::claim_failed;
}

// "name = expr" binds, anything else is evaluated; ":quit" or end of input
// leaves. Errors are reported and the session continues.
int cmd_repl(const CliConfig &config, std::istream &in, std::ostream &out, std::ostream &err, bool interactive)
{
    dsl::Bindings env;
    const Definitions defs = read_bindings(config.bindings, {});
    for (const auto &name : defs.order) {
        env.insert_or_assign(name, evaluate_or_fail(defs.exprs.at(name), {}, config.precision, name));
    }
    std::string line;
    while (true) {
        if (interactive) {
            out << "> " << std::flush;
        }
        if (!std::getline(in, line)) {
            break;
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line == ":quit" || line == ":q") {
            break;
        }
        try {
            const auto eq = line.find('=');
            if (eq != std::string::npos && line.find("==") == std::string::npos) {
                const std::string name = trim(line.substr(0, eq));
                if (!valid_identifier(name) || dsl::is_reserved_word(name)) {
                    throw Failure{exit_code::usage, "invalid binding name '" + name + "'"};
                }
                const std::string source = trim(line.substr(eq + 1));
                LcNumber value = evaluate_or_fail(parse_or_fail(source, "expression"), env, config.precision, source);
                out << name << " = ";
                print_value(out, config, source, value);
                env.insert_or_assign(name, std::move(value));
            } else {
                print_value(out, config, line,
                            evaluate_or_fail(parse_or_fail(line, "expression"), env, config.precision, line));
            }
        } catch (const Failure &f) {
            err << f.message << "\n";
        }
    }
    return exit_code::ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err,
        bool interactive)
{
    CLI::App app{"Exact arithmetic with infinitesimals: series, shadows, differentials and identity transfer",
                 "leibniz"};
    app.require_subcommand(1);

    CliConfig config;
    std::string format = "text";
    app.add_option("-T,--precision", config.precision, "relative truncation order of series arithmetic")
        ->capture_default_str();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", config.seed, "seed for sampled checks")->capture_default_str();
    app.add_option("-b,--bind", config.bindings, "name=expr binding, evaluated left to right (repeatable)");

    std::string expr_text, var, point, example, csv_path, corpus;
    std::size_t trials = 100;

    auto *eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", expr_text, "expression")->required();
    auto *diff = app.add_subcommand("diff", "differential quotient and its shadow");
    diff->add_option("expr", expr_text, "expression")->required();
    diff->add_option("var", var, "variable")->required();
    diff->add_option("point", point, "rational point")->required();
    auto *gal = app.add_subcommand("gallery", "run a worked example");
    gal->add_option("example", example, "parallel_lines | infinitesimal_equality | ellipse_parabola | product_rule")
        ->required();
    gal->add_option("--csv", csv_path, "write parabola data (ellipse_parabola only)");
    auto *transfer = app.add_subcommand("transfer", "check a file of 'lhs == rhs' identities");
    transfer->add_option("file", corpus, "identity corpus")->required();
    transfer->add_option("--trials", trials, "samples per stratum")->capture_default_str();
    auto *repl = app.add_subcommand("repl", "interactive evaluation with persistent bindings");
    for (auto *sub : {eval, diff, gal, transfer, repl}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError &e) {
        err << e.what() << "\n" << app.help();
        return exit_code::usage;
    }
    config.format = format == "json" ? Format::json : Format::text;
    if (config.precision < 2) {
        err << "--precision must be at least 2\n";
        return exit_code::usage;
    }

    try {
        if (eval->parsed()) {
            return cmd_eval(expr_text, config, out);
        }
        if (diff->parsed()) {
            return cmd_diff(expr_text, var, point, config, out);
        }
        if (gal->parsed()) {
            return cmd_gallery(example, csv_path, config, out);
        }
        if (transfer->parsed()) {
            return cmd_transfer(corpus, trials, config, out, err);
        }
        return cmd_repl(config, in, out, err, interactive);
    } catch (const Failure &f) {
        err << f.message << "\n";
        if (f.code == exit_code::usage && gal->parsed()) {
            err << gal->help();
        }
        return f.code;
    }
}

} // namespace leibniz::cli
