#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "hofa/rational.hpp"

namespace hofa {

/// Seedable generator with a stable cross-platform stream (splitmix64).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n), n >= 1. Multiply-shift; platform independent.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    double uniform01() { return (next() >> 11) * 0x1.0p-53; }
    /// Child stream, decorrelated from this one.
    Rng fork() { return Rng(next() ^ 0xA3EC647659359ACDULL); }

  private:
    std::uint64_t state_;
};

/// All tunable constants in one record. Defaults are the documented values;
/// a config file (key = value lines) can override any of them.
struct Config {
    std::uint64_t seed = 1;
    long N = 31;
    int d = 2;
    double delta = 0.1;
    std::string output_dir = "out";
    std::string format = "csv";
    int threads = 0;  // 0 = hardware default; HOFA_THREADS / --threads cap it

    // rbpl
    long rbpl_small_n_cutoff = 10;
    int rbpl_max_iterations = 64;
    long rbpl_search_box_start = 4;
    long rbpl_search_box_limit = 4096;
    double rbpl_min_class_density = 1e-4;
    int rbpl_max_lower_order_terms = 512;

    // equidist
    long equidist_small_n_cutoff = 100;
    double equidist_vdc_fraction = 0.5;  // keep h with correlation >= fraction * delta^2

    // fourier
    int fourier_cutoff_order = 3;
    int fourier_start_radius = 8;
    int fourier_max_radius = 4096;
    long fourier_small_n_cutoff = 4;
    int fourier_grid = 4096;

    // additive
    int bohr_regular_grid_points = 32;
    int bohr_regular_candidates = 64;
    long quadruple_max_n = 128;
    long freiman_cap = 2000000;

    // gowers
    long gowers_naive_oracle_max_n = 24;
    double tol_norm_rel = 1e-9;
    double tol_identity_abs = 1e-10;
    double tol_dft = 1e-12;

    static Config load(const std::string& path);
    void set(const std::string& key, const std::string& value);
    std::map<std::string, std::string> dump() const;
};

/// Effective worker count: --threads flag if set, else HOFA_THREADS, else
/// hardware concurrency.
int effective_threads(int flag_value);

/// Deterministic parallel map-reduce over [0, n): fixed chunking independent
/// of the worker count, partials combined in chunk order.
void parallel_for_chunks(long n, int threads,
                         const std::function<void(long, long, int)>& body);

}  // namespace hofa
