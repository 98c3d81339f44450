#include "logparadox/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "logparadox/csv.hpp"
#include "logparadox/generators.hpp"
#include "logparadox/report.hpp"

namespace logparadox::cli {

namespace {

using nlohmann::json;
using csv::format_number;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string output;
    std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--output,-o", o.output, "Write the report here instead of stdout");
    cmd->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw Error(ErrorCode::InvalidParams, "cannot open output file '" + path + "'");
    }
    f << text;
}

void emit(const OutputOptions& o, const ExperimentReport& report, const std::string& csv_text,
          std::ostream& out) {
    write_text(o.format == "csv" ? csv_text : serialize(report), o.output, out);
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
    std::uint64_t v = 0;
    std::istringstream is(text);
    if (text.empty() || text.front() == '-' || !(is >> v) || !is.eof()) {
        throw UsageError(std::string("invalid seed from ") + source + ": '" + text + "'");
    }
    return v;
}

std::uint64_t resolve_seed(const std::string& flag) {
    if (!flag.empty()) return parse_seed(flag, "--seed");
    if (const char* env = std::getenv(kSeedEnvVar)) return parse_seed(env, kSeedEnvVar);
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Re-raises a validation failure with the CSV row and line it came from.
SampleVector validate_column(const csv::Column& col) {
    try {
        return SampleVector::validate(col.values);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptyVector) {
            throw Error(e.code(), "column '" + col.name + "' has no data rows");
        }
        const std::size_t row = e.index().value_or(0);
        const std::size_t line = row < col.lines.size() ? col.lines[row] : 0;
        throw Error(e.code(),
                    "row " + std::to_string(row) + " (line " + std::to_string(line) + ") of column '" +
                        col.name + "': value " + format_number(e.value().value_or(0.0)) +
                        " must be finite and > 0",
                    row, e.value());
    }
}

SampleVector parse_operand(const std::string& text, const char* flag) {
    try {
        return SampleVector::validate(csv::parse_list(text));
    } catch (const Error& e) {
        throw Error(e.code(), std::string(flag) + ": " + e.what(), e.index(), e.value());
    }
}

std::vector<std::uint64_t> parse_counts(const std::string& text, const char* flag) {
    std::vector<std::uint64_t> out;
    for (double v : csv::parse_list(text)) {
        if (!(v >= 0.0) || v != std::floor(v) || v > 1e15) {
            throw Error(ErrorCode::InvalidParams,
                        std::string(flag) + ": counts must be non-negative integers", std::nullopt, v);
        }
        out.push_back(static_cast<std::uint64_t>(v));
    }
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : csv::parse_list(text)) {
        if (!(v >= 1.0) || v != std::floor(v)) {
            throw UsageError("--sample-sizes: entries must be positive integers");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw UsageError("--sample-sizes: at least one size is required");
    return out;
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string line;
    for (const auto& f : fields) {
        if (!line.empty()) line += ',';
        line += f;
    }
    return line + "\n";
}

std::string b(bool v) { return v ? "true" : "false"; }

// ---------------------------------------------------------------- summary

struct SummaryOptions {
    OutputOptions out;
    std::string input;
    std::string column = "0";
    double base = 10.0;
    std::optional<double> offset;
};

int cmd_summary(const SummaryOptions& o, std::ostream& out, std::ostream& err) {
    const auto col = csv::read_column_file(o.input, o.column);
    const SampleVector x = validate_column(col);
    const MeanSummary s = summarize(x);
    const BaseSensitivity bs = base_sensitivity(x, o.base);

    ExperimentReport r;
    r.command = "summary";
    r.params = {{"input", o.input}, {"column", o.column}, {"base", o.base}};
    if (o.offset) r.params["offset"] = *o.offset;
    r.results["summary"] = to_json(s);
    r.results["base_sensitivity"] = {
        {"base", o.base}, {"min_below_base", bs.min_below_base}, {"derivative_at_min", bs.derivative_at_min}};
    json warnings = json::array();
    if (bs.min_below_base) {
        warnings.push_back("min(x) = " + format_number(s.min) + " lies below log base " + format_number(o.base) +
                           "; values under the base are re-weighted asymmetrically by the log transform");
    }
    if (o.offset) {
        TransformOptions t;
        t.base = o.base;
        t.offset = *o.offset;
        t.mode = TransformMode::Offset;
        const auto logs = log_transform(x, t);
        r.results["log_transform"] = {{"mode", "offset"},
                                      {"offset", *o.offset},
                                      {"base", o.base},
                                      {"mean", arith_mean(std::span<const double>(logs))}};
    }
    r.results["warnings"] = warnings;
    for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << "\n";

    const std::string csv_text =
        csv_row({"n", "arith_mean", "geom_mean", "inter_mean_distance", "flatness", "min", "max"}) +
        csv_row({std::to_string(s.n), format_number(s.arith_mean), format_number(s.geom_mean),
                 format_number(s.inter_mean_distance), format_number(s.flatness), format_number(s.min),
                 format_number(s.max)});
    emit(o.out, r, csv_text, out);
    return kExitOk;
}

// ------------------------------------------------------------------- diff

struct DiffOptions {
    OutputOptions out;
    std::string input;
    std::string column = "0";
    std::string op;
    std::string y;
    std::string z;
};

int cmd_diff(const DiffOptions& o, std::ostream& out) {
    const SampleVector x = validate_column(csv::read_column_file(o.input, o.column));
    const SampleVector y = parse_operand(o.y, "--y");
    Perturbation p = Concat{y};
    if (o.op == "delete") {
        p = Delete{y};
    } else if (o.op == "replace") {
        if (o.z.empty()) throw UsageError("--op replace requires --z");
        p = Replace{y, parse_operand(o.z, "--z")};
    }

    const DiffResult closed = closed_form_diff(x, p);
    const DiffResult oracle = oracle_diff(x, p);
    const SignPrediction predicted = condition_check(x, p);

    ExperimentReport r;
    r.command = "diff";
    r.params = {{"input", o.input}, {"column", o.column}, {"op", o.op}, {"y", o.y}};
    if (!o.z.empty()) r.params["z"] = o.z;
    r.results["closed_form"] = to_json(closed);
    r.results["oracle"] = to_json(oracle);
    r.results["agreement_delta"] = {{"d_arith", std::abs(closed.d_arith - oracle.d_arith)},
                                    {"d_geom", std::abs(closed.d_geom - oracle.d_geom)},
                                    {"d_id", std::abs(closed.d_id - oracle.d_id)}};
    r.results["predicted_signs"] = to_json(predicted);
    r.results["before"] = to_json(summarize(x));
    r.results["after"] = to_json(summarize(perturb(x, p)));

    const std::string csv_text =
        csv_row({"source", "d_arith", "d_geom", "d_id", "paradox_signed"}) +
        csv_row({"closed_form", format_number(closed.d_arith), format_number(closed.d_geom),
                 format_number(closed.d_id), b(closed.paradox_signed)}) +
        csv_row({"oracle", format_number(oracle.d_arith), format_number(oracle.d_geom),
                 format_number(oracle.d_id), b(oracle.paradox_signed)});
    emit(o.out, r, csv_text, out);
    return kExitOk;
}

// ----------------------------------------------------------------- induce

struct InduceOptions {
    OutputOptions out;
    std::string input;
    std::string column = "0";
    std::string mode = "insert";
    std::size_t steps = 1;
    std::string seed;
    std::size_t n = 2000;
    std::string trajectory;
};

int cmd_induce(const InduceOptions& o, std::ostream& out) {
    const std::uint64_t seed = resolve_seed(o.seed);
    const RandomStream master(seed);
    SampleVector x = o.input.empty() ? gen_exponential(o.n, master.substream(0).seed())
                                     : validate_column(csv::read_column_file(o.input, o.column));
    const SampleVector initial = x;
    const MeanSummary s0 = summarize(x);

    std::string csv_text = csv_row({"step", "n", "arith_mean", "geom_mean", "inter_mean_distance", "delta_arith",
                                    "delta_geom", "cum_delta_arith", "cum_delta_geom", "q",
                                    "precondition_holds"});
    json rows = json::array();
    MeanSummary prev = s0;
    bool monotone = true;
    auto record = [&](std::size_t step, const MeanSummary& s, const HeuristicStep* h) {
        const double q = h ? h->q : optimal_target(x);
        const double d_a = s.arith_mean - prev.arith_mean;
        const double d_g = s.geom_mean - prev.geom_mean;
        json row = {{"step", step},
                    {"n", s.n},
                    {"arith_mean", s.arith_mean},
                    {"geom_mean", s.geom_mean},
                    {"inter_mean_distance", s.inter_mean_distance},
                    {"delta_arith", d_a},
                    {"delta_geom", d_g},
                    {"cum_delta_arith", s.arith_mean - s0.arith_mean},
                    {"cum_delta_geom", s.geom_mean - s0.geom_mean},
                    {"q", q}};
        if (h) {
            row["precondition_holds"] = h->precondition_holds;
            row["removed"] = h->removed;
            row["inserted"] = h->inserted;
        }
        csv_text += csv_row({std::to_string(step), std::to_string(s.n), format_number(s.arith_mean),
                             format_number(s.geom_mean), format_number(s.inter_mean_distance), format_number(d_a),
                             format_number(d_g), format_number(s.arith_mean - s0.arith_mean),
                             format_number(s.geom_mean - s0.geom_mean), format_number(q),
                             h ? b(h->precondition_holds) : ""});
        rows.push_back(std::move(row));
    };

    record(0, s0, nullptr);
    for (std::size_t t = 1; t <= o.steps; ++t) {
        std::pair<SampleVector, HeuristicStep> next = [&] {
            if (o.mode == "insert") return insert_step(x);
            if (o.mode == "replace-minmax") return replace_step(x, selector::MinMax{});
            return replace_step(x, selector::Random{master.substream(t).seed()});
        }();
        x = std::move(next.first);
        const MeanSummary s = summarize(x);
        if (prev.inter_mean_distance > 1e-9 && !(s.inter_mean_distance < prev.inter_mean_distance)) {
            monotone = false;
        }
        record(t, s, &next.second);
        prev = s;
    }

    ExperimentReport r;
    r.command = "induce";
    r.seed = seed;
    r.params = {{"input", o.input.empty() ? json(nullptr) : json(o.input)},
                {"column", o.column},
                {"mode", o.mode},
                {"steps", o.steps}};
    if (o.input.empty()) r.params["generated_exponential_n"] = o.n;
    r.results["initial"] = to_json(s0);
    r.results["final"] = to_json(summarize(x));
    r.results["monotone_id_decrease"] = monotone;
    r.results["verdict_initial_vs_final"] = to_json(paradox_verdict(initial, x));
    r.results["trajectory"] = std::move(rows);

    if (!o.trajectory.empty()) write_text(csv_text, o.trajectory, out);
    emit(o.out, r, csv_text, out);
    return kExitOk;
}

// -------------------------------------------------------- bootstrap-sweep

struct SweepOptions {
    OutputOptions out;
    std::string input;
    std::string column = "0";
    std::size_t n = 2000;
    std::string sample_sizes = "50,100,200";
    std::size_t resamples = 50;
    double max_fraction = 0.1;
    std::size_t step = 1;
    std::size_t smooth_window = 10;
    std::string alternative = "two-sided";
    std::string seed;
    std::string plot_csv;
};

int cmd_bootstrap_sweep(const SweepOptions& o, std::ostream& out) {
    if (!(o.max_fraction > 0.0)) throw UsageError("--max-fraction must be > 0");
    const auto sizes = parse_sizes(o.sample_sizes);
    const std::uint64_t seed = resolve_seed(o.seed);
    const RandomStream master(seed);
    const SampleVector a = o.input.empty() ? gen_exponential(o.n, master.substream(0).seed())
                                           : validate_column(csv::read_column_file(o.input, o.column));

    SweepConfig cfg;
    cfg.n_resamples = o.resamples;
    cfg.max_fraction = o.max_fraction;
    cfg.step = o.step;
    cfg.seed = master.substream(1).seed();
    cfg.alternative = o.alternative == "greater" ? Alternative::Greater
                      : o.alternative == "less"  ? Alternative::Less
                                                 : Alternative::TwoSided;

    json sweeps = json::array();
    json table = json::array();
    std::string csv_text = csv_row({"sample_size", "k", "p_geom", "p_arith", "d_arith", "d_geom",
                                    "paradox_direction_ok", "p_geom_smoothed", "p_arith_smoothed"});
    for (std::size_t s : sizes) {
        cfg.sample_size = s;
        const SweepReport rep = replacement_sweep(a, cfg);
        std::vector<double> pg;
        std::vector<double> pa;
        for (const auto& p : rep.points) {
            pg.push_back(p.p_geom);
            pa.push_back(p.p_arith);
        }
        const auto pg_s = moving_average(pg, o.smooth_window);
        const auto pa_s = moving_average(pa, o.smooth_window);
        for (std::size_t i = 0; i < rep.points.size(); ++i) {
            const auto& p = rep.points[i];
            csv_text += csv_row({std::to_string(s), std::to_string(p.k), format_number(p.p_geom),
                                 format_number(p.p_arith), format_number(p.d_arith), format_number(p.d_geom),
                                 b(p.paradox_direction_ok), format_number(pg_s[i]), format_number(pa_s[i])});
        }
        json j = to_json(rep);
        j["p_geom_smoothed"] = pg_s;
        j["p_arith_smoothed"] = pa_s;
        sweeps.push_back(std::move(j));
        for (const auto& c : rep.crossings) {
            table.push_back({{"sample_size", s}, {"alpha", c.alpha}, {"k", c.k ? json(*c.k) : json(nullptr)}});
        }
    }

    ExperimentReport r;
    r.command = "bootstrap-sweep";
    r.seed = seed;
    r.params = {{"input", o.input.empty() ? json(nullptr) : json(o.input)},
                {"column", o.column},
                {"sample_sizes", sizes},
                {"resamples", o.resamples},
                {"max_fraction", o.max_fraction},
                {"step", o.step},
                {"smooth_window", o.smooth_window},
                {"alternative", o.alternative}};
    if (o.input.empty()) r.params["generated_exponential_n"] = o.n;
    r.results["dataset"] = to_json(summarize(a));
    r.results["sweeps"] = std::move(sweeps);
    r.results["crossing_table"] = std::move(table);

    if (!o.plot_csv.empty()) write_text(csv_text, o.plot_csv, out);
    emit(o.out, r, csv_text, out);
    return kExitOk;
}

// ----------------------------------------------------------------- markov

struct MarkovOptions {
    OutputOptions out;
    std::string model_a = "300,100,30,7";
    std::string model_b = "240,147,30,4";
    std::string states = "1,3,9,27";
    std::size_t cells = 1000;
    std::size_t per_cell = 525;
    bool require_match = false;
    std::string seed;
    std::string cells_csv;
};

json line_summary(const std::vector<double>& arith, const std::vector<double>& geom) {
    const double n = static_cast<double>(arith.size());
    const double mean = arith_mean(std::span<const double>(arith));
    double ss = 0.0;
    for (double v : arith) ss += (v - mean) * (v - mean);
    const double se = arith.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0;
    return {{"cells", arith.size()},
            {"mean_of_cell_arith_means", mean},
            {"se_of_cell_arith_means", se},
            {"mean_of_cell_geom_means", arith_mean(std::span<const double>(geom))}};
}

int cmd_markov(const MarkovOptions& o, std::ostream& out) {
    const auto states = csv::parse_list(o.states);
    const MarkovKmerModel a = markov_model(parse_counts(o.model_a, "--model-a"), states);
    const MarkovKmerModel bm = markov_model(parse_counts(o.model_b, "--model-b"), states);
    if (o.require_match) require_protein_matched(a, bm);
    const std::uint64_t seed = resolve_seed(o.seed);
    const KmerReport k = kmer_experiment(a, bm, o.cells, o.per_cell, seed);

    ExperimentReport r;
    r.command = "markov";
    r.seed = seed;
    r.params = {{"model_a", o.model_a}, {"model_b", o.model_b}, {"states", o.states},
                {"cells", o.cells},     {"per_cell", o.per_cell}, {"require_protein_match", o.require_match}};
    r.results["model_a"] = to_json(a);
    r.results["model_b"] = to_json(bm);
    r.results["line_a"] = line_summary(k.arith_a, k.geom_a);
    r.results["line_b"] = line_summary(k.arith_b, k.geom_b);
    r.results["verdict"] = to_json(k.verdict);
    r.results["mwu_arith"] = to_json(k.mwu_arith);
    r.results["mwu_geom"] = to_json(k.mwu_geom);

    std::string csv_text = csv_row({"line", "cell", "arith_mean", "geom_mean"});
    for (std::size_t i = 0; i < k.arith_a.size(); ++i) {
        csv_text += csv_row({"A", std::to_string(i), format_number(k.arith_a[i]), format_number(k.geom_a[i])});
    }
    for (std::size_t i = 0; i < k.arith_b.size(); ++i) {
        csv_text += csv_row({"B", std::to_string(i), format_number(k.arith_b[i]), format_number(k.geom_b[i])});
    }
    if (!o.cells_csv.empty()) write_text(csv_text, o.cells_csv, out);
    emit(o.out, r, csv_text, out);
    return kExitOk;
}

// ---------------------------------------------------------------- surface

struct SurfaceOptions {
    OutputOptions out{"", "csv"};
    std::string m_grid;
    std::string big_m_grid;
};

int cmd_surface(const SurfaceOptions& o, std::ostream& out) {
    const auto ms = csv::parse_list(o.m_grid);
    const auto big_ms = csv::parse_list(o.big_m_grid);
    if (ms.empty() || big_ms.empty()) throw UsageError("--m-grid and --M-grid need at least one value");
    const auto d = d_surface(ms, big_ms);

    std::string csv_text = "m\\M";
    for (double v : big_ms) csv_text += "," + format_number(v);
    csv_text += "\n";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        csv_text += format_number(ms[i]);
        for (double v : d[i]) csv_text += "," + format_number(v);
        csv_text += "\n";
    }

    ExperimentReport r;
    r.command = "surface";
    r.params = {{"m_grid", o.m_grid}, {"M_grid", o.big_m_grid}};
    r.results = {{"m_grid", ms}, {"M_grid", big_ms}, {"d", d}};
    emit(o.out, r, csv_text, out);
    return kExitOk;
}

} // namespace

std::vector<double> moving_average(const std::vector<double>& v, std::size_t window) {
    if (window == 0) window = 1;
    std::vector<double> out(v.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        sum += v[i];
        if (i >= window) sum -= v[i - window];
        out[i] = sum / static_cast<double>(std::min(i + 1, window));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetic vs geometric mean paradox toolkit", "logparadox"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    SummaryOptions so;
    auto* summary = app.add_subcommand("summary", "Mean summary and log-base diagnostics of a CSV column");
    summary->add_option("input", so.input, "Input CSV")->required();
    summary->add_option("--column,-c", so.column, "Column name or 0-based index")->capture_default_str();
    summary->add_option("--base", so.base, "Logarithm base")->check(CLI::PositiveNumber)->capture_default_str();
    summary->add_option("--offset", so.offset, "Shift c for the offset log transform");
    add_output_options(summary, so.out);

    DiffOptions dopt;
    auto* diff = app.add_subcommand("diff", "Finite differences of both means under a perturbation");
    diff->add_option("input", dopt.input, "Input CSV")->required();
    diff->add_option("--column,-c", dopt.column, "Column name or 0-based index")->capture_default_str();
    diff->add_option("--op", dopt.op, "Perturbation")
        ->required()
        ->check(CLI::IsMember({"concat", "delete", "replace"}));
    diff->add_option("--y", dopt.y, "Comma-separated Y (added / deleted)")->required();
    diff->add_option("--z", dopt.z, "Comma-separated Z (removed, replace only)");
    add_output_options(diff, dopt.out);

    InduceOptions io;
    auto* induce = app.add_subcommand("induce", "Iterate a paradox-inducing heuristic and record the trajectory");
    induce->add_option("input", io.input, "Input CSV (default: generated exponential dataset)");
    induce->add_option("--column,-c", io.column, "Column name or 0-based index")->capture_default_str();
    induce->add_option("--mode", io.mode, "Heuristic")
        ->check(CLI::IsMember({"insert", "replace-minmax", "replace-random"}))
        ->capture_default_str();
    induce->add_option("--steps", io.steps, "Number of heuristic steps")->check(CLI::PositiveNumber)->required();
    induce->add_option("--seed", io.seed, "64-bit seed");
    induce->add_option("--n", io.n, "Size of the generated dataset")->check(CLI::PositiveNumber)->capture_default_str();
    induce->add_option("--trajectory", io.trajectory, "Also write the trajectory CSV here");
    add_output_options(induce, io.out);

    SweepOptions sw;
    auto* sweep = app.add_subcommand("bootstrap-sweep", "Random replacement sweep with bootstrap + Mann-Whitney U");
    sweep->add_option("input", sw.input, "Input CSV (default: generated exponential dataset)");
    sweep->add_option("--column,-c", sw.column, "Column name or 0-based index")->capture_default_str();
    sweep->add_option("--n", sw.n, "Size of the generated dataset")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--sample-sizes", sw.sample_sizes, "Bootstrap sample sizes S")->capture_default_str();
    sweep->add_option("--resamples", sw.resamples, "Resamples per distribution N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--max-fraction", sw.max_fraction, "Largest replaced fraction of A")->capture_default_str();
    sweep->add_option("--step", sw.step, "Replacement count increment")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--smooth-window", sw.smooth_window, "Moving-average window for plot columns")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--alternative", sw.alternative, "Mann-Whitney alternative")
        ->check(CLI::IsMember({"two-sided", "greater", "less"}))
        ->capture_default_str();
    sweep->add_option("--seed", sw.seed, "64-bit seed");
    sweep->add_option("--plot-csv", sw.plot_csv, "Also write the plot CSV here");
    add_output_options(sweep, sw.out);

    MarkovOptions mo;
    auto* markov = app.add_subcommand("markov", "k-mer cell simulation for two structure-count models");
    markov->add_option("--model-a", mo.model_a, "Structure counts of line A")->capture_default_str();
    markov->add_option("--model-b", mo.model_b, "Structure counts of line B")->capture_default_str();
    markov->add_option("--states", mo.states, "Proteins per structure for each state")->capture_default_str();
    markov->add_option("--cells", mo.cells, "Cells per line")->check(CLI::PositiveNumber)->capture_default_str();
    markov->add_option("--per-cell", mo.per_cell, "Structures per cell")->check(CLI::PositiveNumber)->capture_default_str();
    markov->add_flag("--require-protein-match", mo.require_match, "Fail unless both models hold equal protein totals");
    markov->add_option("--seed", mo.seed, "64-bit seed");
    markov->add_option("--cells-csv", mo.cells_csv, "Also write per-cell means CSV here");
    add_output_options(markov, mo.out);

    SurfaceOptions su;
    auto* surface = app.add_subcommand("surface", "d(m, M) susceptibility matrix");
    surface->add_option("--m-grid", su.m_grid, "Comma-separated minima")->required();
    surface->add_option("--M-grid", su.big_m_grid, "Comma-separated maxima")->required();
    add_output_options(surface, su.out);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (summary->parsed()) return cmd_summary(so, out, err);
        if (diff->parsed()) return cmd_diff(dopt, out);
        if (induce->parsed()) return cmd_induce(io, out);
        if (sweep->parsed()) return cmd_bootstrap_sweep(sw, out);
        if (markov->parsed()) return cmd_markov(mo, out);
        if (surface->parsed()) return cmd_surface(su, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}

} // namespace logparadox::cli
