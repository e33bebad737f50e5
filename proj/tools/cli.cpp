#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "f4rep/algebra.hpp"
#include "f4rep/identity.hpp"
#include "f4rep/representation.hpp"
#include "f4rep/root_lattice.hpp"
#include "f4rep/suites.hpp"

namespace f4rep::cli
{

using nlohmann::json;

namespace
{

json polynomial_json(const Polynomial &p)
{
    json terms = json::array();
    for (const auto &[m, c] : p.terms()) {
        json exp = json::array();
        for (int i = 1; i <= kNumVars; ++i)
            exp.push_back(m.exponent(i));
        terms.push_back({{"exp", exp}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    }
    return terms;
}

json weight_json(const WeightVector &w) { return json::array({w[0], w[1], w[2], w[3]}); }

bool write_json(const RunConfig &config, const json &doc, std::ostream &err)
{
    if (!config.json_path)
        return true;
    std::ofstream f(*config.json_path);
    if (!f) {
        err << "cannot write " << *config.json_path << "\n";
        return false;
    }
    f << doc.dump(2) << "\n";
    return static_cast<bool>(f);
}

int run_verify(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    using SuiteFn = SuiteResult (*)(std::uint64_t);
    std::vector<SuiteFn> suites;
    const std::string &t = config.target;
    if (t == "lattice" || t == "all")
        suites.push_back(lattice_suite);
    if (t == "algebra" || t == "all")
        suites.push_back(algebra_suite);
    if (t == "rep" || t == "all")
        suites.push_back(representation_suite);
    if (t == "invariants" || t == "all")
        suites.push_back(invariants_suite);
    if (t == "identity" || t == "all")
        suites.push_back(identity_suite);

    bool all_pass = true;
    json doc = {{"seed", config.seed}, {"suites", json::array()}};
    for (auto fn : suites) {
        const SuiteResult r = fn(config.seed);
        out << "[" << r.name << "]\n";
        json checks = json::array();
        std::size_t passed = 0;
        for (const auto &c : r.checks) {
            out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty())
                out << " -- " << c.detail;
            out << "\n";
            passed += c.pass;
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        out << "  " << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size()
            << " checks)\n";
        all_pass = all_pass && r.pass();
        doc["suites"].push_back({{"name", r.name}, {"pass", r.pass()}, {"checks", checks}});
    }
    doc["pass"] = all_pass;
    out << "overall: " << (all_pass ? "PASS" : "FAIL") << "\n";
    if (!write_json(config, doc, err))
        return kUsage;
    return all_pass ? kPass : kFail;
}

int run_singular(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const SingularReport r = singular_vectors(config.degree);
    const bool pass = r.total() == r.predicted && r.all_positive_annihilate && r.products_span;
    out << "degree " << r.degree << ": total " << r.total() << ", predicted " << r.predicted << "\n";
    json entries = json::array();
    for (const auto &e : r.entries) {
        out << "  weight " << to_string(e.weight) << " dim " << e.dim << "\n";
        json basis = json::array();
        for (const auto &f : e.basis) {
            out << "    " << f.to_string() << "\n";
            basis.push_back(polynomial_json(f));
        }
        entries.push_back({{"weight", weight_json(e.weight)}, {"dim", e.dim}, {"basis", basis}});
    }
    out << "all positive root operators annihilate: " << (r.all_positive_annihilate ? "yes" : "no") << "\n";
    out << "generator products span each kernel: " << (r.products_span ? "yes" : "no") << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
    json doc = {{"degree", r.degree},
                {"predicted", r.predicted},
                {"total", r.total()},
                {"all_positive_annihilate", r.all_positive_annihilate},
                {"products_span", r.products_span},
                {"entries", entries}};
    if (!write_json(config, doc, err))
        return kUsage;
    return pass ? kPass : kFail;
}

int run_identity(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const Identity24Result r = verify_identity_24(config.order);
    const Identity26Result forms = verify_identity_26(config.order);
    const bool pass = r.pass && forms.pass() && forms.consistent();
    auto join = [](const std::vector<Integer> &v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? " " : "") + v[i].get_str();
        return s;
    };
    out << "order " << r.order << "\n";
    out << "  lhs: " << join(r.lhs) << "\n";
    out << "  rhs: " << join(r.rhs) << "\n";
    out << "  (1-t)^24 form: " << (r.pass ? "PASS" : "FAIL");
    if (r.first_mismatch)
        out << " (first mismatch at t^" << *r.first_mismatch << ")";
    out << "\n";
    out << "  1/(1-t)^26 form: " << (forms.form_26 ? "PASS" : "FAIL") << "\n";
    out << "  1/(1-t)^24 form: " << (forms.form_24 ? "PASS" : "FAIL") << "\n";
    out << "  forms agree: " << (forms.consistent() ? "yes" : "no") << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";

    json lhs = json::array(), rhs = json::array();
    for (const auto &c : r.lhs)
        lhs.push_back(c.get_si());
    for (const auto &c : r.rhs)
        rhs.push_back(c.get_str());
    json doc = {{"order", r.order}, {"lhs", lhs}, {"rhs", rhs}, {"pass", r.pass}};
    doc["first_mismatch"] = r.first_mismatch ? json(*r.first_mismatch) : json(nullptr);
    if (!write_json(config, doc, err))
        return kUsage;
    return pass ? kPass : kFail;
}

int run_dim(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    if (!config.table) {
        const Integer d = weyl_dim(config.k, config.l);
        const Integer c = closed_form_dim(config.k, config.l);
        out << d.get_str() << "\n";
        json doc = {{"k", config.k}, {"l", config.l}, {"dim", d.get_str()}, {"closed_form", c.get_str()}};
        if (!write_json(config, doc, err))
            return kUsage;
        return d == c ? kPass : kFail;
    }
    bool pass = true;
    json rows = json::array();
    out << "k l dim\n";
    for (unsigned long k = 0; k <= config.k; ++k)
        for (unsigned long l = 0; l <= config.l; ++l) {
            const Integer d = weyl_dim(k, l);
            pass = pass && d == closed_form_dim(k, l);
            out << k << " " << l << " " << d.get_str() << "\n";
            rows.push_back(json::array({std::to_string(k), std::to_string(l), d.get_str()}));
        }
    if (!write_json(config, json{{"rows", rows}}, err))
        return kUsage;
    return pass ? kPass : kFail;
}

int run_branch(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const auto k = static_cast<unsigned long>(config.degree);
    const Integer s = branching_sum(k);
    const Integer b = binomial(k + 25, 25);
    const bool pass = s == b;
    out << "degree " << k << ": sum " << s.get_str() << ", C(" << k + 25 << ",25) = " << b.get_str() << "\n"
        << (pass ? "PASS" : "FAIL") << "\n";
    json doc = {{"degree", k}, {"sum", s.get_str()}, {"binomial", b.get_str()}, {"pass", pass}};
    if (!write_json(config, doc, err))
        return kUsage;
    return pass ? kPass : kFail;
}

int run_harmonic(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const HarmonicBound hb = harmonic_summand_bound(config.degree);
    const bool pass = hb.verified() >= hb.bound;
    out << "degree " << hb.degree << ": bound " << hb.bound << ", harmonic witnesses " << hb.verified() << "\n";
    json witnesses = json::array();
    for (const auto &w : hb.witnesses) {
        out << "  " << (w.harmonic ? "harmonic    " : "not harmonic") << "  " << w.name << "\n";
        witnesses.push_back({{"name", w.name}, {"harmonic", w.harmonic}});
    }
    out << (pass ? "PASS" : "FAIL") << "\n";
    json doc = {{"degree", hb.degree}, {"bound", hb.bound}, {"witnesses", witnesses}, {"pass", pass}};
    if (!write_json(config, doc, err))
        return kUsage;
    return pass ? kPass : kFail;
}

int run_errata(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    const auto errata = validate_table();
    out << errata.size() << " mismatched entries\n";
    json doc = json::array();
    for (const auto &e : errata) {
        out << "  " << e.label.to_string() << " x" << e.row << "d" << e.col << ": typeset " << to_string(e.transcribed)
            << ", derived " << to_string(e.oracle) << "\n";
        doc.push_back({{"label", e.label.to_string()},
                       {"row", e.row},
                       {"col", e.col},
                       {"transcribed", to_string(e.transcribed)},
                       {"oracle", to_string(e.oracle)}});
    }
    if (!write_json(config, doc, err))
        return kUsage;
    return kPass;
}

int run_export(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    json doc = json::array();
    if (config.target == "roots") {
        for (const auto &r : all_roots())
            doc.push_back(r.coords);
    } else {
        for (std::size_t a = 0; a < kE6Dim; ++a)
            for (std::size_t b = 0; b < kE6Dim; ++b) {
                const auto &terms = basis_bracket(a, b);
                if (terms.empty())
                    continue;
                json t = json::array();
                for (const auto &[k, c] : terms)
                    t.push_back(json::array({BasisLabel::from_index(k).to_string(), c}));
                doc.push_back({{"a", BasisLabel::from_index(a).to_string()},
                               {"b", BasisLabel::from_index(b).to_string()},
                               {"terms", t}});
            }
    }
    if (config.json_path) {
        if (!write_json(config, doc, err))
            return kUsage;
        out << doc.size() << " records written to " << *config.json_path << "\n";
    } else {
        out << doc.dump() << "\n";
    }
    return kPass;
}

} // namespace

std::optional<RunConfig> parse(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                               int &exit_code)
{
    RunConfig cfg;
    cfg.seed = kDefaultSeed;
    std::string json_path;

    CLI::App app{"Exact computations for F4 and its 26-dimensional module"};
    app.name("f4rep");
    app.require_subcommand(1);
    app.add_option("--json", json_path, "Write a JSON report to this path");
    app.add_option("--seed", cfg.seed, "Seed for randomized property samples");

    auto *verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("suite", cfg.target, "lattice, algebra, rep, invariants, identity or all")
        ->required()
        ->check(CLI::IsMember({"lattice", "algebra", "rep", "invariants", "identity", "all"}));

    auto *singular = app.add_subcommand("singular", "Singular vectors of a given degree");
    singular->add_option("--degree", cfg.degree, "Polynomial degree")->required()->check(CLI::Range(0, 12));

    auto *identity = app.add_subcommand("identity", "Check the series identity through a given order");
    identity->add_option("--order", cfg.order, "Truncation order")->check(CLI::Range(3, 2000));

    auto *dim = app.add_subcommand("dim", "Dimension of the module with highest weight k lambda3 + l lambda4");
    dim->add_option("k", cfg.k)->required();
    dim->add_option("l", cfg.l)->required();
    dim->add_flag("--table", cfg.table, "Print all dimensions with 0 <= k' <= k, 0 <= l' <= l");

    auto *branch = app.add_subcommand("branch", "Branching sum against C(k+25,25)");
    branch->add_option("--degree", cfg.degree)->required()->check(CLI::Range(0, 200));

    auto *harmonic = app.add_subcommand("harmonic", "Harmonic witnesses for the summand bound");
    harmonic->add_option("--degree", cfg.degree)->required()->check(CLI::Range(2, 12));

    app.add_subcommand("errata", "Differences between typeset and derived operators");

    auto *exp = app.add_subcommand("export", "Export roots or structure constants as JSON");
    exp->add_option("what", cfg.target, "roots or structure")->required()->check(CLI::IsMember({"roots", "structure"}));

    for (auto *sub : app.get_subcommands({}))
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        exit_code = code == 0 ? kPass : kUsage;
        return std::nullopt;
    }
    for (auto *sub : app.get_subcommands())
        cfg.command = sub->get_name();
    if (!json_path.empty())
        cfg.json_path = json_path;
    exit_code = kPass;
    return cfg;
}

int execute(const RunConfig &config, std::ostream &out, std::ostream &err)
{
    try {
        if (config.command == "verify")
            return run_verify(config, out, err);
        if (config.command == "singular")
            return run_singular(config, out, err);
        if (config.command == "identity")
            return run_identity(config, out, err);
        if (config.command == "dim")
            return run_dim(config, out, err);
        if (config.command == "branch")
            return run_branch(config, out, err);
        if (config.command == "harmonic")
            return run_harmonic(config, out, err);
        if (config.command == "errata")
            return run_errata(config, out, err);
        if (config.command == "export")
            return run_export(config, out, err);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "unknown command \"" << config.command << "\"\n";
    return kUsage;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    int code = kPass;
    const auto cfg = parse(args, out, err, code);
    if (!cfg)
        return code;
    return execute(*cfg, out, err);
}

} // namespace f4rep::cli
