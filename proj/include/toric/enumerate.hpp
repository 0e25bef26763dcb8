#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

struct EnumOptions {
    int n = 1;
    /// Emit only the lexicographically least code of each translation orbit.
    bool symmetry_reduce = false;
    /// Forced leading tiles of the first row, as base-11 digits.
    std::string prefix;
};

/// Depth-first search over suitably connected toric mosaics in row-major
/// order; codes arrive in increasing lexicographic order.
void enumerate(const EnumOptions& opts, const std::function<void(std::string_view)>& emit);

/// Splits the search by first-row prefixes and runs them on `jobs` threads.
/// The result is sorted and independent of `jobs`.
std::vector<std::string> enumerate_codes(const EnumOptions& opts, int jobs = 1);

std::uint64_t count(const EnumOptions& opts, int jobs = 1);

/// True when no torus translation of the n x n code is lexicographically smaller.
bool is_canonical(std::string_view code, int n);

/// First-row prefixes extending opts.prefix by up to `extra` tiles, in
/// lexicographic order; together they cover the search exactly once.
std::vector<std::string> partition_prefixes(const EnumOptions& opts, int extra);

/// Runs `work(task, worker)` for task in [0, tasks) on up to `jobs` threads;
/// worker is the index of the thread running the task, below `jobs`.
void parallel_for(int tasks, int jobs, const std::function<void(int, int)>& work);

int default_jobs();

}  // namespace toric
