#ifndef FRECHET_TESTS_SUPPORT_HPP
#define FRECHET_TESTS_SUPPORT_HPP

#include "frechet/geometry.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& g, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(Rng& g, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(g);
}

// random walk with steps in [-step, step]^dim; at least two distinct vertices
inline frechet::Curve random_walk(Rng& g, int n, double step = 1.0, int dim = 2)
{
    for (;;) {
        std::vector<double> xs(static_cast<size_t>(dim), 0.0);
        for (int d = 0; d < dim; ++d)
            xs[static_cast<size_t>(d)] = uniform(g, -1, 1);
        for (int i = 1; i < n; ++i)
            for (int d = 0; d < dim; ++d)
                xs.push_back(xs[xs.size() - static_cast<size_t>(dim)] + uniform(g, -step, step));
        frechet::Curve c(dim, xs);
        if (c.size() >= 2)
            return c;
    }
}

// points uniform in a box
inline frechet::Curve random_cloud_curve(Rng& g, int n, double side = 4.0, int dim = 2)
{
    for (;;) {
        std::vector<double> xs;
        for (int i = 0; i < n * dim; ++i)
            xs.push_back(uniform(g, 0, side));
        frechet::Curve c(dim, xs);
        if (c.size() >= 2)
            return c;
    }
}

// nearby copy of c with independent noise of the given size
inline frechet::Curve jitter(Rng& g, const frechet::Curve& c, double noise)
{
    std::vector<double> xs = c.data();
    for (double& x : xs)
        x += uniform(g, -noise, noise);
    return frechet::Curve(c.dim(), xs);
}

inline frechet::Curve segment(double x0, double y0, double x1, double y1)
{
    return frechet::Curve(2, {x0, y0, x1, y1});
}

inline frechet::Curve polyline(std::initializer_list<double> xs) { return frechet::Curve(2, std::vector<double>(xs)); }

// a random source array: each edge empty with probability 1/2, else a random subinterval
inline frechet::IntervalArray random_sources(Rng& g, int edges)
{
    frechet::IntervalArray S(static_cast<size_t>(edges));
    for (auto& iv : S) {
        if (uniform(g, 0, 1) < 0.5)
            continue;
        double a = uniform(g, 0, 1), b = uniform(g, 0, 1);
        iv = frechet::Interval::make(std::min(a, b), std::max(a, b));
    }
    return S;
}

inline std::vector<char> random_vertex_set(Rng& g, int n, double density = 0.4)
{
    std::vector<char> s(static_cast<size_t>(n), 0);
    for (auto& f : s)
        f = uniform(g, 0, 1) < density;
    return s;
}

// global parameter of an array point (edge e, t)
inline double param_of(int e, double t) { return e + t; }

}  // namespace testsupport

#endif
