#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "equidist/bounds.hpp"
#include "equidist/search.hpp"

namespace equidist {

struct SweepRow {
    int n = 0;
    int q = 2;
    int lambda = 0;
    std::size_t max_size = 0;
    BigInt bound;
    bool exceptional = false;
    bool complete = false;
    std::uint64_t nodes = 0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    /// Set iff a complete, non-exceptional row has max_size above its bound.
    bool counterexample_flag = false;
};

struct SweepOptions {
    unsigned thread_count = 1;
    std::optional<std::uint64_t> node_budget;  // per row
    std::optional<std::chrono::milliseconds> time_budget;  // per row
    std::uint64_t max_vertices = kDefaultMaxVertices;
    /// When set, each finished row is stored here and complete rows found
    /// there are reused instead of searched again.
    std::optional<std::filesystem::path> resume_dir;
};

/// Binary rows for every 1 <= lambda <= n <= max_n, each compared against
/// bound_single_distance.
SweepReport sweep_theorem(int max_n, const SweepOptions& options = {});

/// q-ary rows (q >= 3) for every 1 <= lambda <= n <= max_n, compared against
/// conjecture_bound.
SweepReport sweep_conjecture(int q, int max_n, const SweepOptions& options = {});

}  // namespace equidist
