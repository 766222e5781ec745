#ifndef NODALJAC_BENCH_HPP
#define NODALJAC_BENCH_HPP

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "nodaljac/nodal.hpp"

namespace nodaljac {

/// Sweep configuration. Per degree, one random curve and one random
/// element are generated deterministically from (seed, degree) and shared
/// by both timed paths.
struct BenchConfig {
    std::uint64_t p = 4294967311ull;
    std::vector<int> degrees = {5,  11, 23,  47,  53,  63,  71, 83,
                                95, 110, 130, 145, 150, 165, 193};
    mpz_class scalar = mpz_class(static_cast<unsigned long>(4294967311ull));
    int repetitions = 5;
    std::uint64_t seed = 1;
};

struct BenchRow {
    int degree = 0;
    double nodal_seconds = 0.0;
    double cantor_seconds = 0.0;
    double ratio = 0.0; // cantor_seconds / nodal_seconds
};

struct BenchWorkload {
    NodalCurve curve;
    JacElement q;
};

/// The deterministic per-degree workload: a random monic irreducible f of
/// the requested degree and a random element, both drawn from a stream
/// seeded with (cfg.seed, degree).
BenchWorkload bench_workload(const BenchConfig& cfg, int degree);

/// Times scalar*Q through the single-polynomial group law and through
/// double-and-add over full divisor addition (compose + reduce) on the
/// embedded pair, reporting the median of cfg.repetitions runs on a
/// monotonic clock. Before timing, both paths are checked to agree via a
/// compose-only ladder. A failing degree is reported on `progress` and
/// skipped; the sweep continues.
std::vector<BenchRow> run_benchmark(const BenchConfig& cfg,
                                    std::ostream* progress = nullptr);

/// Writes the CSV (header `degree,nodal_seconds,cantor_seconds,ratio`,
/// one row per degree, six decimal places) to csv_path, and a
/// whitespace-separated plot-data file with `#` metadata comments next to
/// it at csv_path with extension `.dat`. Throws std::invalid_argument on
/// empty rows, IoError on write failure.
void write_report(const std::vector<BenchRow>& rows, const BenchConfig& cfg,
                  const std::filesystem::path& csv_path);

/// Spearman rank correlation between degree and ratio across rows.
double degree_ratio_rank_correlation(const std::vector<BenchRow>& rows);

} // namespace nodaljac

#endif
