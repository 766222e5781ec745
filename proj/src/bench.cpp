#include "nodaljac/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>

#include <sys/utsname.h>

#include "nodaljac/io.hpp"

namespace nodaljac {

namespace {

void check_config(const BenchConfig& cfg) {
    if (cfg.degrees.empty())
        throw std::invalid_argument("benchmark config: no degrees");
    for (int d : cfg.degrees)
        if (d < 1) throw std::invalid_argument("benchmark config: degrees must be positive");
    if (cfg.repetitions < 1)
        throw std::invalid_argument("benchmark config: repetitions must be >= 1");
    if (sgn(cfg.scalar) <= 0)
        throw std::invalid_argument("benchmark config: scalar must be positive");
}

// Same ladder shape as the nodal scalar multiplication, over divisor pairs.
MumfordDivisor cantor_ladder(const HyperCurve& H, const mpz_class& e,
                             const MumfordDivisor& q, bool reduce) {
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    MumfordDivisor acc = q;
    for (std::size_t i = bits - 1; i-- > 0;) {
        acc = cantor_add(H, acc, acc, reduce);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = cantor_add(H, acc, q, reduce);
    }
    return acc;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    if (n % 2 == 1) return xs[n / 2];
    return (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

template <typename F>
double time_seconds(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

std::string host_description() {
    struct utsname u {};
    if (uname(&u) != 0) return "unknown";
    return std::string(u.sysname) + " " + u.release + " " + u.machine;
}

} // namespace

BenchWorkload bench_workload(const BenchConfig& cfg, int degree) {
    PrimeModulus m(cfg.p);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(degree)};
    std::mt19937_64 rng(seq);
    Poly f = random_irreducible(m, degree, rng);
    NodalCurve curve(m, std::move(f));
    JacElement q = random_element(curve, rng);
    return {std::move(curve), std::move(q)};
}

std::vector<BenchRow> run_benchmark(const BenchConfig& cfg, std::ostream* progress) {
    check_config(cfg);
    std::vector<BenchRow> rows;
    rows.reserve(cfg.degrees.size());

    for (int d : cfg.degrees) {
        try {
            BenchWorkload w = bench_workload(cfg, d);
            const HyperCurve H = hyper_model(w.curve);
            const MumfordDivisor q_emb = to_mumford(w.curve, w.q);

            // Cross-check the two paths before timing anything: the
            // compose-only ladder stays in embedded form and must equal
            // the embedding of the single-polynomial result exactly.
            const JacElement expected = scalar_mul(w.curve, cfg.scalar, w.q);
            const MumfordDivisor oracle = cantor_ladder(H, cfg.scalar, q_emb, false);
            if (oracle != to_mumford(w.curve, expected))
                throw std::logic_error("path disagreement at degree " + std::to_string(d));

            std::vector<double> nodal_times, cantor_times;
            for (int r = 0; r < cfg.repetitions; ++r) {
                JacElement got = JacElement::identity();
                nodal_times.push_back(time_seconds(
                    [&] { got = scalar_mul(w.curve, cfg.scalar, w.q); }));
                if (got != expected)
                    throw std::logic_error("nodal path not deterministic");
            }
            MumfordDivisor first{Poly(cfg.p), Poly(cfg.p)};
            for (int r = 0; r < cfg.repetitions; ++r) {
                MumfordDivisor got = divisor_identity(w.curve.prime());
                cantor_times.push_back(time_seconds(
                    [&] { got = cantor_ladder(H, cfg.scalar, q_emb, true); }));
                if (r == 0) first = got;
                else if (got != first)
                    throw std::logic_error("baseline path not deterministic");
            }

            BenchRow row;
            row.degree = d;
            row.nodal_seconds = median(nodal_times);
            row.cantor_seconds = median(cantor_times);
            row.ratio = row.cantor_seconds / row.nodal_seconds;
            rows.push_back(row);

            if (progress)
                *progress << "degree " << d << ": nodal " << row.nodal_seconds
                          << " s, cantor " << row.cantor_seconds << " s, ratio "
                          << row.ratio << "\n";
        } catch (const std::exception& ex) {
            if (progress) *progress << "degree " << d << " failed: " << ex.what() << "\n";
        }
    }
    return rows;
}

void write_report(const std::vector<BenchRow>& rows, const BenchConfig& cfg,
                  const std::filesystem::path& csv_path) {
    if (rows.empty()) throw std::invalid_argument("empty benchmark report");

    std::ofstream csv(csv_path);
    if (!csv) throw IoError("cannot open for writing: " + csv_path.string());
    csv << "degree,nodal_seconds,cantor_seconds,ratio\n";
    char buf[160];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f\n", r.degree,
                      r.nodal_seconds, r.cantor_seconds, r.ratio);
        csv << buf;
    }
    if (!csv) throw IoError("write failed: " + csv_path.string());

    std::filesystem::path dat_path = csv_path;
    dat_path.replace_extension(".dat");
    std::ofstream dat(dat_path);
    if (!dat) throw IoError("cannot open for writing: " + dat_path.string());
    dat << "# scalar multiplication timings: single-polynomial group law vs"
           " divisor-pair baseline (compose + reduce)\n";
    dat << "# p=" << cfg.p << " scalar=" << cfg.scalar.get_str()
        << " seed=" << cfg.seed << " repetitions=" << cfg.repetitions
        << " host=" << host_description() << "\n";
    dat << "# columns: degree nodal_seconds cantor_seconds\n";
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%d %.6f %.6f\n", r.degree,
                      r.nodal_seconds, r.cantor_seconds);
        dat << buf;
    }
    if (!dat) throw IoError("write failed: " + dat_path.string());
}

double degree_ratio_rank_correlation(const std::vector<BenchRow>& rows) {
    const std::size_t n = rows.size();
    if (n < 2) throw std::invalid_argument("rank correlation needs >= 2 rows");

    auto ranks = [n](auto key) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), key);
        std::vector<double> rank(n);
        for (std::size_t i = 0; i < n; ++i) rank[idx[i]] = static_cast<double>(i);
        return rank;
    };
    std::vector<double> rd = ranks([&rows](std::size_t a, std::size_t b) {
        return rows[a].degree < rows[b].degree;
    });
    std::vector<double> rr = ranks([&rows](std::size_t a, std::size_t b) {
        return rows[a].ratio < rows[b].ratio;
    });

    double sum_sq = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double diff = rd[i] - rr[i];
        sum_sq += diff * diff;
    }
    const double nn = static_cast<double>(n);
    return 1.0 - 6.0 * sum_sq / (nn * (nn * nn - 1.0));
}

} // namespace nodaljac
