#include "frechet/bench.hpp"

#include "frechet/approx_discrete.hpp"
#include "frechet/wavefront.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>

namespace frechet {

Mode parse_mode(const std::string& s)
{
    if (s == "exact")
        return Mode::Exact;
    if (s == "approx")
        return Mode::Approx;
    if (s == "discrete")
        return Mode::Discrete;
    if (s == "discrete-approx")
        return Mode::DiscreteApprox;
    throw Error(ErrorCode::Input, "unknown mode: " + s);
}

std::string mode_name(Mode m)
{
    switch (m) {
    case Mode::Exact:
        return "exact";
    case Mode::Approx:
        return "approx";
    case Mode::Discrete:
        return "discrete";
    case Mode::DiscreteApprox:
        return "discrete-approx";
    }
    return "?";
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw Error(ErrorCode::Input, "slope needs at least two points");
    const double k = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(std::max(y[i], 1.0));
    }
    mx /= k;
    my /= k;
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(std::max(y[i], 1.0)) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

namespace {

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg)
{
    if (cfg.modes.empty() || cfg.sizes.size() < 2 || cfg.reps < 1)
        throw Error(ErrorCode::Input, "bench needs modes, at least two sizes and one rep");
    BenchReport rep;
    Params p;
    p.eps = cfg.eps;
    p.seed = cfg.seed;
    for (Mode mode : cfg.modes) {
        std::vector<double> xs, ys;
        for (int n : cfg.sizes) {
            if (n < 2)
                throw Error(ErrorCode::Input, "bench sizes must be at least 2");
            std::vector<double> work, pre, wall;
            for (int r = 0; r < cfg.reps; ++r) {
                const std::uint64_t s = cfg.seed * 1000003ULL + static_cast<std::uint64_t>(n) * 101ULL +
                                        static_cast<std::uint64_t>(r);
                Curve a = generate_synthetic(SyntheticKind::Walk, n, 2 * s, {1.0});
                Curve b = generate_synthetic(SyntheticKind::Walk, n, 2 * s + 1, {1.0});
                const bool disc = mode == Mode::Discrete || mode == Mode::DiscreteApprox;
                double delta;
                {
                    Counters scratch;
                    CounterScope quiet(&scratch);
                    delta = disc ? discrete_compute_exact(a, b) : compute_exact(a, b, 1e-6);
                }
                Counters c;
                auto t0 = std::chrono::steady_clock::now();
                {
                    CounterScope scope(&c);
                    switch (mode) {
                    case Mode::Exact:
                        decide_exact(a, b, delta);
                        break;
                    case Mode::Approx:
                        decide_approx(a, b, delta, p);
                        break;
                    case Mode::Discrete:
                        discrete_decide_exact(a, b, delta);
                        break;
                    case Mode::DiscreteApprox:
                        discrete_decide_approx(a, b, delta, p);
                        break;
                    }
                }
                wall.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
                work.push_back(static_cast<double>(c.wavefront_cells + c.cover_work));
                pre.push_back(static_cast<double>(c.preprocess_cells));
            }
            BenchCell cell{mode, n, median(work), median(pre), median(wall)};
            rep.cells.push_back(cell);
            xs.push_back(static_cast<double>(n) * n);
            ys.push_back(cell.median_work);
        }
        rep.slopes[mode_name(mode)] = loglog_slope(xs, ys);
    }
    return rep;
}

std::string bench_json(const BenchReport& r, const BenchConfig& cfg)
{
    nlohmann::json j;
    j["reps"] = cfg.reps;
    j["seed"] = cfg.seed;
    j["eps"] = cfg.eps;
    j["workload"] = "independent random walks, one decision at the exact distance";
    j["sizes"] = cfg.sizes;
    nlohmann::json cells = nlohmann::json::array();
    for (const BenchCell& c : r.cells)
        cells.push_back({{"mode", mode_name(c.mode)},
                         {"size", c.size},
                         {"median_work", c.median_work},
                         {"median_preprocess_cells", c.median_preprocess},
                         {"median_wall_seconds", c.median_wall}});
    j["cells"] = cells;
    j["slopes"] = r.slopes;
    return j.dump(2);
}

}  // namespace frechet
