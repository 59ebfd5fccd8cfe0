#include "equidist/sweep.hpp"

#include <fstream>
#include <string>

#include "equidist/error.hpp"
#include "equidist/report_json.hpp"

namespace equidist {

namespace {

std::filesystem::path row_path(const std::filesystem::path& dir, int q, int n, int lambda) {
    return dir / ("row_q" + std::to_string(q) + "_n" + std::to_string(n) + "_lambda" + std::to_string(lambda) + ".json");
}

std::optional<SweepRow> load_row(const std::filesystem::path& path, int q, int n, int lambda) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return std::nullopt;
    SweepRow row;
    try {
        row = sweep_row_from_json(j);
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
    if (row.q != q || row.n != n || row.lambda != lambda || !row.complete) return std::nullopt;
    return row;
}

void store_row(const std::filesystem::path& path, const SweepRow& row) {
    const auto tmp = std::filesystem::path(path).concat(".tmp");
    {
        std::ofstream out(tmp);
        if (!out) throw InvalidInput("cannot write resume file " + tmp.string());
        out << to_json(row).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

SweepRow run_row(int n, int q, int lambda, const SweepOptions& options) {
    SearchProblem problem;
    problem.n = n;
    problem.q = q;
    problem.lambda = lambda;
    problem.node_budget = options.node_budget;
    problem.time_budget = options.time_budget;
    problem.thread_count = options.thread_count;
    problem.max_vertices = options.max_vertices;

    SweepRow row;
    row.n = n;
    row.q = q;
    row.lambda = lambda;
    SearchResult result;
    try {
        result = max_equidistant(problem);
    } catch (const ResourceLimit&) {
        const BoundReport bound = conjecture_bound(n, q, lambda);
        row.bound = bound.bound;
        row.exceptional = bound.exceptional;
        return row;
    }
    row.max_size = result.max_size;
    row.bound = result.bound_comparison.bound;
    row.exceptional = result.bound_comparison.exceptional;
    row.complete = result.complete;
    row.nodes = result.nodes_explored;
    return row;
}

SweepReport sweep(int q, int max_n, const SweepOptions& options) {
    if (max_n < 1) throw InvalidInput("max_n must be positive, got " + std::to_string(max_n));
    if (options.resume_dir) std::filesystem::create_directories(*options.resume_dir);

    SweepReport report;
    for (int n = 1; n <= max_n; ++n) {
        for (int lambda = 1; lambda <= n; ++lambda) {
            std::optional<SweepRow> row;
            if (options.resume_dir) row = load_row(row_path(*options.resume_dir, q, n, lambda), q, n, lambda);
            if (!row) {
                row = run_row(n, q, lambda, options);
                if (options.resume_dir) store_row(row_path(*options.resume_dir, q, n, lambda), *row);
            }
            // Incomplete rows carry no evidence either way.
            if (row->complete && !row->exceptional && BigInt(row->max_size) > row->bound) {
                report.counterexample_flag = true;
            }
            report.rows.push_back(*row);
        }
    }
    return report;
}

}  // namespace

SweepReport sweep_theorem(int max_n, const SweepOptions& options) { return sweep(2, max_n, options); }

SweepReport sweep_conjecture(int q, int max_n, const SweepOptions& options) {
    if (q < 3) throw InvalidInput("conjecture sweep needs q >= 3 (q = 2 is sweep_theorem), got " + std::to_string(q));
    return sweep(q, max_n, options);
}

}  // namespace equidist
