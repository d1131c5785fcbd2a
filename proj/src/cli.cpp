#include "litgame/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "litgame/errors.hpp"
#include "litgame/inference.hpp"
#include "litgame/monte_carlo.hpp"
#include "litgame/scenario.hpp"
#include "litgame/sweep.hpp"

namespace litgame::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// formatting

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed6(const std::optional<Probability>& p) { return p ? fixed6(p->value()) : "-"; }

std::string table_lr(const LikelihoodRatio& lr) { return lr.is_finite() ? fixed6(lr.value()) : lr.to_string(); }

std::string shortest(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string csv_cell(const std::optional<Probability>& p) { return p ? shortest(p->value()) : ""; }

std::string csv_lr(const LikelihoodRatio& lr) { return lr.is_finite() ? shortest(lr.value()) : lr.to_string(); }

json json_of(const std::optional<Probability>& p) { return p ? json(p->value()) : json(nullptr); }

json json_of(const LikelihoodRatio& lr) { return lr.is_finite() ? json(lr.value()) : json(lr.to_string()); }

/// Left-aligned columns separated by two spaces; no trailing whitespace.
class Table {
public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> width(rows_.front().size(), 0);
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t i = 0; i < row.size(); ++i) {
                line += row[i];
                if (i + 1 < row.size()) line.append(width[i] - row[i].size() + 2, ' ');
            }
            out << line << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    return OutputFormat::Table;
}

json report_json(const PosteriorReport& r) {
    return json{
        {"prior", {{"p_guilty", r.prior.p_guilty().value()}}},
        {"chars",
         {{"sensitivity", r.chars.sensitivity().value()}, {"specificity", r.chars.specificity().value()}}},
        {"p_positive", r.p_positive.value()},
        {"ppv", json_of(r.ppv)},
        {"p_innocent_given_positive", json_of(r.p_innocent_given_positive)},
        {"npv", json_of(r.npv)},
        {"p_guilty_given_negative", json_of(r.p_guilty_given_negative)},
        {"lr_positive", json_of(r.lr_positive)},
        {"lr_negative", json_of(r.lr_negative)},
    };
}

void render_report(std::ostream& out, const PosteriorReport& r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json:
            out << report_json(r).dump(2) << '\n';
            return;
        case OutputFormat::Csv:
            out << "prior,sensitivity,specificity,p_positive,ppv,p_innocent_given_positive,npv,"
                   "p_guilty_given_negative,lr_positive,lr_negative\n";
            out << shortest(r.prior.p_guilty().value()) << ',' << shortest(r.chars.sensitivity().value()) << ','
                << shortest(r.chars.specificity().value()) << ',' << shortest(r.p_positive.value()) << ','
                << csv_cell(r.ppv) << ',' << csv_cell(r.p_innocent_given_positive) << ',' << csv_cell(r.npv)
                << ',' << csv_cell(r.p_guilty_given_negative) << ',' << csv_lr(r.lr_positive) << ','
                << csv_lr(r.lr_negative) << '\n';
            return;
        case OutputFormat::Table:
            break;
    }
    Table t({"quantity", "value"});
    t.add({"prior", fixed6(r.prior.p_guilty().value())});
    t.add({"sensitivity", fixed6(r.chars.sensitivity().value())});
    t.add({"specificity", fixed6(r.chars.specificity().value())});
    t.add({"p_positive", fixed6(r.p_positive.value())});
    t.add({"ppv", fixed6(r.ppv)});
    t.add({"p_innocent_given_positive", fixed6(r.p_innocent_given_positive)});
    t.add({"npv", fixed6(r.npv)});
    t.add({"p_guilty_given_negative", fixed6(r.p_guilty_given_negative)});
    t.add({"lr_positive", table_lr(r.lr_positive)});
    t.add({"lr_negative", table_lr(r.lr_negative)});
    t.print(out);
}

// ---------------------------------------------------------------------------
// parameter resolution

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "': " + std::strerror(errno));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::uint64_t parse_count(const std::string& text, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(std::string(what) + ": expected a nonnegative integer, got '" + text + "'");
    }
    return value;
}

double parse_real(const std::string& text, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(std::string(what) + ": not a number: '" + text + "'");
    }
    return value;
}

/// Numeric flags as given on the command line, before merging with a
/// scenario or config file.
struct ParameterFlags {
    std::string prior;
    std::string sensitivity;
    std::string specificity;
    CLI::Option* prior_opt = nullptr;
    CLI::Option* sensitivity_opt = nullptr;
    CLI::Option* specificity_opt = nullptr;

    void add_to(CLI::App& app) {
        prior_opt = app.add_option("--prior", prior, "Prior probability of guilt");
        sensitivity_opt = app.add_option("--sensitivity", sensitivity, "Pr(+ | guilty)");
        specificity_opt = app.add_option("--specificity", specificity, "Pr(- | innocent)");
    }
};

struct ResolvedParameters {
    std::string name;
    PriorBelief prior;
    TestCharacteristics chars;
};

/// Starts from the base scenario (if any) and lets explicit flags override
/// individual values. Throws ParseError when a value is still missing.
ResolvedParameters resolve(const ParameterFlags& flags, const std::optional<Scenario>& base) {
    std::optional<Probability> prior, sens, spec;
    std::string name = "custom";
    if (base) {
        name = base->name;
        prior = base->prior().p_guilty();
        sens = base->chars().sensitivity();
        spec = base->chars().specificity();
    }
    bool overridden = false;
    if (flags.prior_opt->count() > 0) {
        prior = parse_probability(flags.prior, "--prior");
        overridden = true;
    }
    if (flags.sensitivity_opt->count() > 0) {
        sens = parse_probability(flags.sensitivity, "--sensitivity");
        overridden = true;
    }
    if (flags.specificity_opt->count() > 0) {
        spec = parse_probability(flags.specificity, "--specificity");
        overridden = true;
    }
    if (!prior || !sens || !spec) {
        throw ParseError("--prior, --sensitivity and --specificity are all required (or use --config/--scenario)");
    }
    if (base && overridden) name = "custom";
    return {name, PriorBelief(*prior), TestCharacteristics(*sens, *spec)};
}

std::optional<Scenario> load_config(const CLI::Option* opt, const std::string& path) {
    if (opt->count() == 0) return std::nullopt;
    return parse_scenario(read_file(path));
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_posterior(const ParameterFlags& flags, const std::optional<Scenario>& base, OutputFormat format,
                  std::ostream& out, std::ostream& err) {
    const auto params = resolve(flags, base);
    const auto report = full_report(params.prior, params.chars);
    if (!report.ppv) {
        err << "error: UndefinedPosterior: Pr(+) = 0, so Pr(guilty | +) is undefined for these parameters\n";
        return static_cast<int>(ExitStatus::DomainFailure);
    }
    render_report(out, report, format);
    return 0;
}

int cmd_scenarios(const std::optional<std::string>& name, OutputFormat format, std::ostream& out) {
    std::vector<Scenario> selected;
    if (name) {
        const Scenario* s = find_scenario(*name);
        if (s == nullptr) throw ParseError("unknown scenario '" + *name + "'");
        selected.push_back(*s);
    } else {
        selected = catalog();
    }

    if (format == OutputFormat::Json) {
        json doc = json::array();
        for (const auto& s : selected) {
            const auto& cell = std::get<CatalogCell>(s.cell);
            json entry = report_json(evaluate(s));
            entry["name"] = s.name;
            entry["regime"] = std::string(slug(cell.regime));
            entry["profile"] = std::string(slug(cell.profile));
            doc.push_back(std::move(entry));
        }
        out << doc.dump(2) << '\n';
        return 0;
    }
    if (format == OutputFormat::Csv) {
        out << "name,prior,sensitivity,specificity,p_positive,ppv\n";
        for (const auto& s : selected) {
            const auto r = evaluate(s);
            out << s.name << ',' << shortest(r.prior.p_guilty().value()) << ','
                << shortest(r.chars.sensitivity().value()) << ',' << shortest(r.chars.specificity().value())
                << ',' << shortest(r.p_positive.value()) << ',' << csv_cell(r.ppv) << '\n';
        }
        return 0;
    }
    Table t({"scenario", "prior", "sensitivity", "specificity", "p_positive", "ppv"});
    for (const auto& s : selected) {
        const auto r = evaluate(s);
        t.add({s.name, fixed6(r.prior.p_guilty().value()), fixed6(r.chars.sensitivity().value()),
               fixed6(r.chars.specificity().value()), fixed6(r.p_positive.value()), fixed6(r.ppv)});
    }
    t.print(out);
    return 0;
}

struct SimulateFlags {
    std::string trials = "1000000";
    std::string seed = "42";
    std::string z = "4";
    std::string chunk_size = "4096";
    std::string threads = "0";
};

int cmd_simulate(const ParameterFlags& flags, const std::optional<Scenario>& base, const SimulateFlags& sf,
                 OutputFormat format, std::ostream& out, std::ostream& err) {
    SimConfig config;
    config.n_trials = parse_count(sf.trials, "--trials");
    config.seed = parse_count(sf.seed, "--seed");
    config.chunk_size = parse_count(sf.chunk_size, "--chunk-size");
    config.threads = static_cast<unsigned>(std::min<std::uint64_t>(parse_count(sf.threads, "--threads"), 1024));
    const double z = parse_real(sf.z, "--z");
    if (!(z > 0.0) || !std::isfinite(z)) throw ValidationError("--z must be a positive number");
    config.validate();
    const auto params = resolve(flags, base);

    const auto result = simulate(params.prior, params.chars, config);
    const auto analytic = full_report(params.prior, params.chars);
    const auto verdict = agreement_check(result, analytic, z);
    const auto& c = result.counts;

    if (format == OutputFormat::Json) {
        json doc{
            {"scenario", params.name},
            {"prior", params.prior.p_guilty().value()},
            {"sensitivity", params.chars.sensitivity().value()},
            {"specificity", params.chars.specificity().value()},
            {"trials", config.n_trials},
            {"seed", config.seed},
            {"counts",
             {{"true_positive", c.true_positive},
              {"false_positive", c.false_positive},
              {"true_negative", c.true_negative},
              {"false_negative", c.false_negative}}},
            {"ppv_hat", json_of(result.ppv_hat)},
            {"npv_hat", json_of(result.npv_hat)},
            {"standard_error_ppv", *result.standard_error_ppv},
            {"ci95_ppv", {result.ci95_ppv->lo, result.ci95_ppv->hi}},
            {"analytic_ppv", verdict.analytic_ppv},
            {"difference", verdict.difference},
            {"margin", verdict.margin},
            {"z", verdict.z},
            {"agreement", verdict.agrees ? "PASS" : "FAIL"},
        };
        out << doc.dump(2) << '\n';
    } else if (format == OutputFormat::Csv) {
        out << "scenario,trials,seed,true_positive,false_positive,true_negative,false_negative,ppv_hat,"
               "standard_error_ppv,ci95_lo,ci95_hi,analytic_ppv,margin,agreement\n";
        out << params.name << ',' << config.n_trials << ',' << config.seed << ',' << c.true_positive << ','
            << c.false_positive << ',' << c.true_negative << ',' << c.false_negative << ','
            << csv_cell(result.ppv_hat) << ',' << shortest(*result.standard_error_ppv) << ','
            << shortest(result.ci95_ppv->lo) << ',' << shortest(result.ci95_ppv->hi) << ','
            << shortest(verdict.analytic_ppv) << ',' << shortest(verdict.margin) << ','
            << (verdict.agrees ? "PASS" : "FAIL") << '\n';
    } else {
        Table t({"quantity", "value"});
        t.add({"scenario", params.name});
        t.add({"trials", std::to_string(config.n_trials)});
        t.add({"seed", std::to_string(config.seed)});
        t.add({"true_positive", std::to_string(c.true_positive)});
        t.add({"false_positive", std::to_string(c.false_positive)});
        t.add({"true_negative", std::to_string(c.true_negative)});
        t.add({"false_negative", std::to_string(c.false_negative)});
        t.add({"ppv_hat", fixed6(result.ppv_hat)});
        t.add({"standard_error_ppv", fixed6(*result.standard_error_ppv)});
        t.add({"ci95_ppv", "[" + fixed6(result.ci95_ppv->lo) + ", " + fixed6(result.ci95_ppv->hi) + "]"});
        t.add({"analytic_ppv", fixed6(verdict.analytic_ppv)});
        t.add({"difference", fixed6(verdict.difference)});
        t.add({"margin", fixed6(verdict.margin) + " (z = " + shortest(z) + ")"});
        t.add({"agreement", verdict.agrees ? "PASS" : "FAIL"});
        t.print(out);
    }
    if (!verdict.agrees) {
        err << "simulated ppv " << shortest(verdict.simulated_ppv) << " differs from analytic "
            << shortest(verdict.analytic_ppv) << " by more than " << shortest(verdict.margin) << '\n';
        return static_cast<int>(ExitStatus::DomainFailure);
    }
    return 0;
}

struct SweepFlags {
    std::string prior;
    std::string sensitivity;
    std::string specificity;
    std::string out_path;
    std::string max_cells;
    CLI::Option* out_opt = nullptr;
    CLI::Option* max_cells_opt = nullptr;
};

int cmd_sweep(const SweepFlags& sf, std::ostream& out) {
    GridSpec grid{
        Axis::parse(sf.prior, "--prior"),
        Axis::parse(sf.sensitivity, "--sensitivity"),
        Axis::parse(sf.specificity, "--specificity"),
    };
    if (sf.max_cells_opt->count() > 0) {
        grid.max_cells = static_cast<std::size_t>(parse_count(sf.max_cells, "--max-cells"));
    }
    const auto rows = run_sweep(grid);

    if (sf.out_opt->count() == 0) {
        write_sweep_csv(out, rows);
        return 0;
    }
    std::ofstream file(sf.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + sf.out_path + "' for writing: " + std::strerror(errno));
    write_sweep_csv(file, rows);
    file.flush();
    if (!file) throw IoError("failed writing '" + sf.out_path + "': " + std::strerror(errno));
    return 0;
}

struct InvertFlags {
    std::string sensitivity;
    std::string specificity;
    std::string target;
};

int cmd_invert(const InvertFlags& inv, OutputFormat format, std::ostream& out) {
    const Axis sens_axis = Axis::parse(inv.sensitivity, "--sensitivity");
    const Axis spec_axis = Axis::parse(inv.specificity, "--specificity");
    const Probability target = parse_probability(inv.target, "--target");

    // A single point is a question with one answer; failing it is an error.
    if (sens_axis.size() == 1 && spec_axis.size() == 1) {
        const TestCharacteristics chars(sens_axis.materialize().front(), spec_axis.materialize().front());
        const Probability prior = required_prior(chars, target);
        if (format == OutputFormat::Json) {
            out << json{{"sensitivity", chars.sensitivity().value()},
                        {"specificity", chars.specificity().value()},
                        {"target_ppv", target.value()},
                        {"required_prior", prior.value()}}
                       .dump(2)
                << '\n';
        } else if (format == OutputFormat::Csv) {
            out << "sensitivity,specificity,target_ppv,required_prior\n"
                << shortest(chars.sensitivity().value()) << ',' << shortest(chars.specificity().value()) << ','
                << shortest(target.value()) << ',' << shortest(prior.value()) << '\n';
        } else {
            out << "required_prior  " << fixed6(prior.value()) << '\n';
        }
        return 0;
    }

    const GridSpec lattice{Axis::fixed(Probability(0.0)), sens_axis, spec_axis};
    if (lattice.cell_count() > kDefaultMaxCells) {
        throw GridTooLarge("break-even curve exceeds " + std::to_string(kDefaultMaxCells) + " points");
    }
    std::vector<TestCharacteristics> chars_axis;
    for (const auto s : sens_axis.materialize()) {
        for (const auto c : spec_axis.materialize()) chars_axis.emplace_back(s, c);
    }
    const auto curve = break_even_curve(chars_axis, target);

    if (format == OutputFormat::Json) {
        json doc = json::array();
        for (const auto& pt : curve) {
            doc.push_back({{"sensitivity", pt.chars.sensitivity().value()},
                           {"specificity", pt.chars.specificity().value()},
                           {"required_prior", json_of(pt.required_prior)}});
        }
        out << doc.dump(2) << '\n';
    } else if (format == OutputFormat::Csv) {
        out << "sensitivity,specificity,required_prior\n";
        for (const auto& pt : curve) {
            out << shortest(pt.chars.sensitivity().value()) << ',' << shortest(pt.chars.specificity().value())
                << ',' << csv_cell(pt.required_prior) << '\n';
        }
    } else {
        Table t({"sensitivity", "specificity", "required_prior"});
        for (const auto& pt : curve) {
            t.add({fixed6(pt.chars.sensitivity().value()), fixed6(pt.chars.specificity().value()),
                   pt.required_prior ? fixed6(pt.required_prior->value()) : "unreachable"});
        }
        t.print(out);
    }
    return 0;
}

}  // namespace

ExitStatus classify(const std::exception_ptr& error) noexcept {
    try {
        std::rethrow_exception(error);
    } catch (const DomainError&) {
        return ExitStatus::DomainFailure;
    } catch (const ParseError&) {
        return ExitStatus::UsageError;
    } catch (const ValidationError&) {
        return ExitStatus::UsageError;
    } catch (const CLI::Error&) {
        return ExitStatus::UsageError;
    } catch (...) {
        return ExitStatus::InternalError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bayesian reliability of two-outcome adjudication", "litgame"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "litgame 1.0.0");

    const auto formats = CLI::IsMember({"table", "json", "csv"});

    // posterior
    auto* posterior = app.add_subcommand("posterior", "Exact posterior report for one parameter triple");
    ParameterFlags posterior_flags;
    posterior_flags.add_to(*posterior);
    std::string posterior_config;
    auto* posterior_config_opt =
        posterior->add_option("--config", posterior_config, "Scenario document; flags override its values");
    std::string posterior_format = "table";
    posterior->add_option("--format", posterior_format, "table, json or csv")->check(formats);

    // scenarios
    auto* scenarios = app.add_subcommand("scenarios", "Evaluate the four catalog scenarios");
    std::string scenario_name;
    auto* scenario_name_opt = scenarios->add_option("--name", scenario_name, "Only this scenario");
    std::string scenarios_format = "table";
    scenarios->add_option("--format", scenarios_format, "table, json or csv")->check(formats);

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo check of the analytic posterior");
    ParameterFlags simulate_flags;
    simulate_flags.add_to(*simulate_cmd);
    std::string simulate_scenario;
    auto* simulate_scenario_opt = simulate_cmd->add_option("--scenario", simulate_scenario, "Catalog scenario name");
    std::string simulate_config;
    auto* simulate_config_opt = simulate_cmd->add_option("--config", simulate_config, "Scenario document");
    simulate_scenario_opt->excludes(simulate_config_opt);
    SimulateFlags sim;
    simulate_cmd->add_option("--trials", sim.trials, "Number of simulated defendants")->capture_default_str();
    simulate_cmd->add_option("--seed", sim.seed, "64-bit seed")->capture_default_str();
    simulate_cmd->add_option("--z", sim.z, "Agreement threshold in standard errors")->capture_default_str();
    simulate_cmd->add_option("--chunk-size", sim.chunk_size, "Trials per work unit")->capture_default_str();
    simulate_cmd->add_option("--threads", sim.threads, "Worker threads (0 = all cores)")->capture_default_str();
    std::string simulate_format = "table";
    simulate_cmd->add_option("--format", simulate_format, "table, json or csv")->check(formats);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Evaluate a (prior, sensitivity, specificity) lattice as CSV");
    SweepFlags sweep_flags;
    sweep->add_option("--prior", sweep_flags.prior, "lo:hi:step or a single value")->required();
    sweep->add_option("--sensitivity", sweep_flags.sensitivity, "lo:hi:step or a single value")->required();
    sweep->add_option("--specificity", sweep_flags.specificity, "lo:hi:step or a single value")->required();
    sweep_flags.out_opt = sweep->add_option("--out", sweep_flags.out_path, "Output file (default stdout)");
    sweep_flags.max_cells_opt = sweep->add_option("--max-cells", sweep_flags.max_cells, "Lattice size limit");
    std::string sweep_format = "csv";
    sweep->add_option("--format", sweep_format, "csv")->check(CLI::IsMember({"csv"}));

    // invert
    auto* invert = app.add_subcommand("invert", "Prior needed to reach a target posterior");
    InvertFlags inv;
    invert->add_option("--sensitivity", inv.sensitivity, "Value or lo:hi:step")->required();
    invert->add_option("--specificity", inv.specificity, "Value or lo:hi:step")->required();
    invert->add_option("--target", inv.target, "Target Pr(guilty | +)")->required();
    std::string invert_format = "table";
    invert->add_option("--format", invert_format, "table, json or csv")->check(formats);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitStatus::UsageError);
    }

    try {
        if (posterior->parsed()) {
            return cmd_posterior(posterior_flags, load_config(posterior_config_opt, posterior_config),
                                 parse_format(posterior_format), out, err);
        }
        if (scenarios->parsed()) {
            std::optional<std::string> name;
            if (scenario_name_opt->count() > 0) name = scenario_name;
            return cmd_scenarios(name, parse_format(scenarios_format), out);
        }
        if (simulate_cmd->parsed()) {
            std::optional<Scenario> base = load_config(simulate_config_opt, simulate_config);
            if (simulate_scenario_opt->count() > 0) {
                const Scenario* s = find_scenario(simulate_scenario);
                if (s == nullptr) throw ParseError("unknown scenario '" + simulate_scenario + "'");
                base = *s;
            }
            return cmd_simulate(simulate_flags, base, sim, parse_format(simulate_format), out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_flags, out);
        }
        if (invert->parsed()) {
            return cmd_invert(inv, parse_format(invert_format), out);
        }
    } catch (const std::exception& e) {
        const ExitStatus status = classify(std::current_exception());
        err << "error: " << e.what() << '\n';
        return static_cast<int>(status);
    } catch (...) {
        err << "error: unknown failure\n";
        return static_cast<int>(ExitStatus::InternalError);
    }
    err << app.help();
    return static_cast<int>(ExitStatus::UsageError);
}

}  // namespace litgame::cli
