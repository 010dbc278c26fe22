#ifndef FRECHET_BENCH_HPP
#define FRECHET_BENCH_HPP

#include "frechet/approx.hpp"

#include <map>
#include <string>

namespace frechet {

enum class Mode { Exact, Approx, Discrete, DiscreteApprox };
Mode parse_mode(const std::string& s);
std::string mode_name(Mode m);

struct BenchConfig {
    std::vector<Mode> modes;
    std::vector<int> sizes;
    int reps = 3;
    std::uint64_t seed = 1;
    double eps = 0.5;
};

struct BenchCell {
    Mode mode;
    int size = 0;
    double median_work = 0;  // main-phase wavefront cells plus cover work, one decision
    double median_preprocess = 0;
    double median_wall = 0;  // seconds
};

struct BenchReport {
    std::vector<BenchCell> cells;
    std::map<std::string, double> slopes;  // mode name -> log-log slope of work against n*m
};

// Each rep draws two independent random walks of the given size and runs one
// decision at delta = the exact distance (continuous or discrete, per mode).
BenchReport run_bench(const BenchConfig& cfg);
std::string bench_json(const BenchReport& r, const BenchConfig& cfg);

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace frechet

#endif
