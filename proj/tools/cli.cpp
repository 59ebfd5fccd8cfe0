#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "equidist/equidist.hpp"

namespace equidist::cli {

namespace {

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};

unsigned threads_from_env(const char* value) {
    if (value == nullptr || *value == '\0') return 1;
    unsigned t = 0;
    const char* end = value + std::char_traits<char>::length(value);
    auto [ptr, ec] = std::from_chars(value, end, t);
    if (ec != std::errc{} || ptr != end || t == 0) {
        throw UsageError(std::string(kThreadsEnv) + " must be a positive integer, got '" + value + "'");
    }
    return t;
}

Family read_family(const RunConfig& config, std::istream& in) {
    const std::string path = config.input_path.value_or("-");
    if (path == "-") return parse_family(in);
    std::ifstream file(path);
    if (!file) throw InvalidInput("cannot open " + path);
    return parse_family(file);
}

std::optional<std::chrono::milliseconds> time_budget(const Limits& limits) {
    if (!limits.time_limit_seconds) return std::nullopt;
    return std::chrono::milliseconds(static_cast<std::int64_t>(*limits.time_limit_seconds * 1000.0));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

void print_bound_text(std::ostream& out, const BoundReport& r, const std::string& prefix = "") {
    out << prefix << "bound: " << r.bound << '\n'
        << prefix << "source: " << to_string(r.source) << '\n'
        << prefix << "exceptional: " << yes_no(r.exceptional) << '\n'
        << prefix << "excluded_value: " << (r.excluded_value ? to_string(*r.excluded_value) : "none") << '\n'
        << prefix << "conjectural: " << yes_no(r.conjectural) << '\n';
}

int do_verify(const RunConfig& config, std::istream& in, std::ostream& out) {
    const Family f = read_family(config, in);
    const EquidistanceCheck check = check_equidistant(f);
    const auto* cert = std::get_if<EquidistanceCertificate>(&check);

    Json j = to_json(f, check);
    bool isometry_ok = true;
    if (config.seed && cert) {
        std::mt19937_64 rng(*config.seed);
        const Family image = apply_isometry(Isometry::random(f.n(), f.q(), rng), f);
        const auto image_check = check_equidistant(image);
        const auto* image_cert = std::get_if<EquidistanceCertificate>(&image_check);
        isometry_ok = image_cert && image_cert->lambda == cert->lambda;
        j["isometry_check"] = Json{{"seed", *config.seed},
                                   {"lambda", image_cert ? image_cert->lambda : 0},
                                   {"preserved", isometry_ok}};
    }

    if (config.output_format == OutputFormat::json) {
        print_json(out, j);
    } else if (cert) {
        out << "equidistant: yes\n"
            << "n: " << f.n() << "\nq: " << f.q() << "\nm: " << f.size() << '\n'
            << "lambda: " << cert->lambda << "\npairs: " << cert->pair_count << '\n';
        if (config.seed) out << "isometry_check: " << (isometry_ok ? "preserved" : "BROKEN") << " (seed " << *config.seed << ")\n";
    } else {
        out << "equidistant: no\n"
            << "violation: " << describe(f, std::get<EquidistanceViolation>(check)) << '\n';
    }
    return (cert && isometry_ok) ? kSuccess : kClaimViolated;
}

int do_bound(const RunConfig& config, std::ostream& out) {
    const BoundReport r = conjecture_bound(config.n, config.q, config.lambda);
    if (config.output_format == OutputFormat::json) {
        print_json(out, to_json(r));
    } else {
        print_bound_text(out, r);
    }
    return kSuccess;
}

int do_certify(const RunConfig& config, std::istream& in, std::ostream& out) {
    const Family f = read_family(config, in);
    const GramCertificate c = gram_certificate(f);
    if (config.output_format == OutputFormat::json) {
        print_json(out, to_json(c));
    } else {
        out << "m: " << c.m << "\nn: " << c.n << "\nlambda: " << c.lambda << '\n'
            << "det_value: " << c.det_value << "\nrank_value: " << c.rank_value << '\n'
            << "pd: " << yes_no(c.pd) << "\ngram_matches_structure: " << yes_no(c.gram_matches_structure) << '\n'
            << "conclusion: " << to_string(c.conclusion) << '\n';
    }
    return kSuccess;
}

int do_construct(const RunConfig& config, std::ostream& out) {
    const HadamardMatrix h = hadamard_of_order(config.order);
    if (config.as_family) {
        const Family f = hadamard_to_family(h);
        if (config.output_format == OutputFormat::json) {
            print_json(out, to_json(f));
        } else {
            out << "# rows of a Hadamard matrix of order " << h.order() << " as 0/1 words\n" << serialize_family(f);
        }
        return kSuccess;
    }
    if (config.output_format == OutputFormat::json) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < h.order(); ++r) {
            Json row = Json::array();
            for (auto e : h.row(r)) row.push_back(static_cast<int>(e));
            rows.push_back(std::move(row));
        }
        print_json(out, Json{{"order", h.order()}, {"rows", std::move(rows)}});
    } else {
        for (std::size_t r = 0; r < h.order(); ++r) {
            const auto row = h.row(r);
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << static_cast<int>(row[c]);
            out << '\n';
        }
    }
    return kSuccess;
}

int do_search(const RunConfig& config, std::ostream& out) {
    SearchProblem problem;
    problem.n = config.n;
    problem.q = config.q;
    problem.lambda = config.lambda;
    problem.node_budget = config.limits.node_budget;
    problem.time_budget = time_budget(config.limits);
    problem.thread_count = config.limits.threads;
    problem.max_vertices = config.limits.max_vertices;
    const SearchResult r = max_equidistant(problem);

    if (config.output_format == OutputFormat::json) {
        print_json(out, to_json(r));
    } else {
        // Comment lines keep the output a valid family file.
        out << "# max_size: " << r.max_size << '\n'
            << "# complete: " << yes_no(r.complete) << '\n'
            << "# nodes_explored: " << r.nodes_explored << '\n';
        print_bound_text(out, r.bound_comparison, "# ");
        out << serialize_family(r.witness);
    }
    return r.complete ? kSuccess : kResourceExhausted;
}

int do_sweep(const RunConfig& config, std::ostream& out) {
    SweepOptions options;
    options.thread_count = config.limits.threads;
    options.node_budget = config.limits.node_budget;
    options.time_budget = time_budget(config.limits);
    options.max_vertices = config.limits.max_vertices;
    if (config.resume_dir) options.resume_dir = *config.resume_dir;

    const SweepReport report =
        config.q == 2 ? sweep_theorem(config.max_n, options) : sweep_conjecture(config.q, config.max_n, options);

    switch (config.output_format) {
        case OutputFormat::json: print_json(out, to_json(report)); break;
        case OutputFormat::csv: out << to_csv(report); break;
        case OutputFormat::text: {
            out << std::setw(4) << "n" << std::setw(4) << "q" << std::setw(8) << "lambda" << std::setw(10) << "max_size"
                << std::setw(8) << "bound" << std::setw(13) << "exceptional" << std::setw(10) << "complete"
                << std::setw(12) << "nodes" << '\n';
            for (const auto& row : report.rows) {
                out << std::setw(4) << row.n << std::setw(4) << row.q << std::setw(8) << row.lambda << std::setw(10)
                    << row.max_size << std::setw(8) << row.bound << std::setw(13) << yes_no(row.exceptional)
                    << std::setw(10) << yes_no(row.complete) << std::setw(12) << row.nodes << '\n';
            }
            out << "counterexample_flag: " << yes_no(report.counterexample_flag) << '\n';
            if (report.counterexample_flag) out << "COUNTEREXAMPLE: a complete row exceeds its bound\n";
            break;
        }
    }
    if (report.counterexample_flag) return kClaimViolated;
    for (const auto& row : report.rows)
        if (!row.complete) return kResourceExhausted;
    return kSuccess;
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, const char* default_threads,
                                    std::ostream& out) {
    RunConfig config;
    config.limits.threads = threads_from_env(default_threads);

    CLI::App app{"Exact verification, bounds, constructions and exhaustive search for equidistant codes", "equidist"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--seed", config.seed, "Seed for randomized checks (verify: random isometry re-check)");

    auto* verify = app.add_subcommand("verify", "Check that a family is equidistant");
    verify->add_option("file", config.input_path, "Family file, '-' for standard input")->required();

    auto* bound = app.add_subcommand("bound", "Print the single-distance bound for (n, q, lambda)");
    bound->add_option("--n", config.n, "Vector length")->required();
    bound->add_option("--q", config.q, "Alphabet size")->required();
    bound->add_option("--lambda", config.lambda, "Common distance")->required();

    auto* certify = app.add_subcommand("certify", "Gram-matrix certificate for a binary equidistant family");
    certify->add_option("file", config.input_path, "Family file, '-' for standard input")->required();

    auto* construct = app.add_subcommand("construct", "Build extremal objects");
    construct->require_subcommand(1);
    auto* hadamard = construct->add_subcommand("hadamard", "Hadamard matrix of the given order");
    hadamard->add_option("--order", config.order, "Matrix order")->required();
    hadamard->add_flag("--as-family", config.as_family, "Emit the rows as a 0/1 family");

    auto add_limits = [&](CLI::App* sub) {
        sub->add_option("--budget", config.limits.node_budget, "Search node budget");
        sub->add_option("--threads", config.limits.threads, "Worker threads (default from EQUIDIST_THREADS)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--time-limit", config.limits.time_limit_seconds, "Wall-clock limit in seconds")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-vertices", config.limits.max_vertices, "Override the q^n enumeration limit")
            ->check(CLI::PositiveNumber);
    };

    auto* search = app.add_subcommand("search", "Maximum equidistant family by exhaustive search");
    search->add_option("--n", config.n, "Vector length")->required();
    search->add_option("--q", config.q, "Alphabet size")->required();
    search->add_option("--lambda", config.lambda, "Common distance")->required();
    add_limits(search);

    auto* sweep = app.add_subcommand("sweep", "Search every (n, lambda) up to max-n and compare with the bounds");
    sweep->add_option("--q", config.q, "Alphabet size")->required();
    sweep->add_option("--max-n", config.max_n, "Largest vector length")->required();
    sweep->add_option("--resume", config.resume_dir, "Directory persisting per-row results");
    add_limits(sweep);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + "\n" + app.help());
    }

    config.output_format = kFormats.at(format);
    if (*verify) config.subcommand = Subcommand::verify;
    else if (*bound) config.subcommand = Subcommand::bound;
    else if (*certify) config.subcommand = Subcommand::certify;
    else if (*construct) config.subcommand = Subcommand::construct;
    else if (*search) config.subcommand = Subcommand::search;
    else config.subcommand = Subcommand::sweep;

    if (config.output_format == OutputFormat::csv && config.subcommand != Subcommand::sweep) {
        throw UsageError("--format csv is only available for sweep");
    }
    return config;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (config.subcommand) {
            case Subcommand::verify: return do_verify(config, in, out);
            case Subcommand::bound: return do_bound(config, out);
            case Subcommand::certify: return do_certify(config, in, out);
            case Subcommand::construct: return do_construct(config, out);
            case Subcommand::search: return do_search(config, out);
            case Subcommand::sweep: return do_sweep(config, out);
        }
    } catch (const NotEquidistant& e) {
        err << "not equidistant: " << e.what() << '\n';
        return kClaimViolated;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceExhausted;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::logic_error& e) {
        err << "verification failed: " << e.what() << '\n';
        return kClaimViolated;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> config;
    try {
        config = parse_args(args, std::getenv(kThreadsEnv), out);
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return kUsageError;
    }
    if (!config) return kSuccess;
    return run(*config, in, out, err);
}

}  // namespace equidist::cli
