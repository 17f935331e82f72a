#include "hofa/config.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hofa {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
    auto as_long = [&] { return std::stol(value); };
    auto as_int = [&] { return std::stoi(value); };
    auto as_double = [&] { return std::stod(value); };
    if (key == "seed") seed = std::stoull(value);
    else if (key == "N") N = as_long();
    else if (key == "d") d = as_int();
    else if (key == "delta") delta = as_double();
    else if (key == "output_dir") output_dir = value;
    else if (key == "format") format = value;
    else if (key == "threads") threads = as_int();
    else if (key == "rbpl.small_n_cutoff") rbpl_small_n_cutoff = as_long();
    else if (key == "rbpl.max_iterations") rbpl_max_iterations = as_int();
    else if (key == "rbpl.search_box_start") rbpl_search_box_start = as_long();
    else if (key == "rbpl.search_box_limit") rbpl_search_box_limit = as_long();
    else if (key == "rbpl.min_class_density") rbpl_min_class_density = as_double();
    else if (key == "rbpl.max_lower_order_terms") rbpl_max_lower_order_terms = as_int();
    else if (key == "equidist.small_n_cutoff") equidist_small_n_cutoff = as_long();
    else if (key == "equidist.vdc_fraction") equidist_vdc_fraction = as_double();
    else if (key == "fourier.cutoff_order") fourier_cutoff_order = as_int();
    else if (key == "fourier.start_radius") fourier_start_radius = as_int();
    else if (key == "fourier.max_radius") fourier_max_radius = as_int();
    else if (key == "fourier.small_n_cutoff") fourier_small_n_cutoff = as_long();
    else if (key == "fourier.grid") fourier_grid = as_int();
    else if (key == "bohr.regular_grid_points") bohr_regular_grid_points = as_int();
    else if (key == "bohr.regular_candidates") bohr_regular_candidates = as_int();
    else if (key == "quadruples.max_n") quadruple_max_n = as_long();
    else if (key == "freiman.cap") freiman_cap = as_long();
    else if (key == "gowers.naive_oracle_max_n") gowers_naive_oracle_max_n = as_long();
    else if (key == "tol.norm_rel") tol_norm_rel = as_double();
    else if (key == "tol.identity_abs") tol_identity_abs = as_double();
    else if (key == "tol.dft") tol_dft = as_double();
    else throw std::invalid_argument("unknown config key: " + key);
}

std::map<std::string, std::string> Config::dump() const {
    std::map<std::string, std::string> m;
    auto put = [&](const std::string& k, auto v) {
        std::ostringstream os;
        os << v;
        m[k] = os.str();
    };
    put("seed", seed);
    put("N", N);
    put("d", d);
    put("delta", delta);
    m["output_dir"] = output_dir;
    m["format"] = format;
    put("threads", threads);
    put("rbpl.small_n_cutoff", rbpl_small_n_cutoff);
    put("rbpl.max_iterations", rbpl_max_iterations);
    put("rbpl.search_box_start", rbpl_search_box_start);
    put("rbpl.search_box_limit", rbpl_search_box_limit);
    put("rbpl.min_class_density", rbpl_min_class_density);
    put("rbpl.max_lower_order_terms", rbpl_max_lower_order_terms);
    put("equidist.small_n_cutoff", equidist_small_n_cutoff);
    put("equidist.vdc_fraction", equidist_vdc_fraction);
    put("fourier.cutoff_order", fourier_cutoff_order);
    put("fourier.start_radius", fourier_start_radius);
    put("fourier.max_radius", fourier_max_radius);
    put("fourier.small_n_cutoff", fourier_small_n_cutoff);
    put("fourier.grid", fourier_grid);
    put("bohr.regular_grid_points", bohr_regular_grid_points);
    put("bohr.regular_candidates", bohr_regular_candidates);
    put("quadruples.max_n", quadruple_max_n);
    put("freiman.cap", freiman_cap);
    put("gowers.naive_oracle_max_n", gowers_naive_oracle_max_n);
    put("tol.norm_rel", tol_norm_rel);
    put("tol.identity_abs", tol_identity_abs);
    put("tol.dft", tol_dft);
    return m;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key = value");
        cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

int effective_threads(int flag_value) {
    int n = flag_value;
    if (n <= 0) {
        if (const char* env = std::getenv("HOFA_THREADS")) n = std::atoi(env);
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return n;
}

void parallel_for_chunks(long n, int threads,
                         const std::function<void(long, long, int)>& body) {
    if (n <= 0) return;
    const int kChunks = 64;  // fixed so results do not depend on worker count
    long chunk = (n + kChunks - 1) / kChunks;
    std::vector<std::pair<long, long>> ranges;
    for (long b = 0; b < n; b += chunk) ranges.emplace_back(b, std::min(n, b + chunk));
    int workers = std::min<int>(threads, static_cast<int>(ranges.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < ranges.size(); ++i)
            body(ranges[i].first, ranges[i].second, static_cast<int>(i));
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= ranges.size()) break;
                body(ranges[i].first, ranges[i].second, static_cast<int>(i));
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hofa
