#include "frechet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

namespace frechet {

double dist2(const double* p, const double* q, int dim)
{
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
        double d = p[k] - q[k];
        s += d * d;
    }
    return s;
}

double dist(const double* p, const double* q, int dim) { return std::sqrt(dist2(p, q, dim)); }

double dist(const Point& p, const Point& q)
{
    if (p.coords.size() != q.coords.size())
        throw Error(ErrorCode::Input, "dimension mismatch");
    return dist(p.coords.data(), q.coords.data(), static_cast<int>(p.coords.size()));
}

static void check_finite(const std::vector<double>& xs)
{
    for (double x : xs)
        if (!std::isfinite(x))
            throw Error(ErrorCode::Input, "non-finite coordinate");
}

Curve::Curve(int dim, std::vector<double> xs)
{
    if (dim < 1)
        throw Error(ErrorCode::Input, "dimension must be at least 1");
    if (xs.size() % static_cast<size_t>(dim) != 0)
        throw Error(ErrorCode::Input, "coordinate count not a multiple of the dimension");
    check_finite(xs);
    dim_ = dim;
    size_t n = xs.size() / dim;
    xs_.reserve(xs.size());
    for (size_t i = 0; i < n; ++i) {
        const double* p = xs.data() + i * dim;
        if (!xs_.empty() && std::equal(p, p + dim, xs_.end() - dim))
            continue;
        xs_.insert(xs_.end(), p, p + dim);
    }
}

Curve Curve::raw(int dim, std::vector<double> xs)
{
    if (dim < 1 || xs.size() % static_cast<size_t>(dim) != 0)
        throw Error(ErrorCode::Input, "bad raw curve data");
    check_finite(xs);
    Curve c;
    c.dim_ = dim;
    c.xs_ = std::move(xs);
    return c;
}

Curve Curve::from_points(const std::vector<Point>& pts)
{
    if (pts.empty())
        throw Error(ErrorCode::Input, "empty curve");
    int dim = static_cast<int>(pts[0].coords.size());
    std::vector<double> xs;
    for (const auto& p : pts) {
        if (static_cast<int>(p.coords.size()) != dim)
            throw Error(ErrorCode::Input, "dimension mismatch");
        xs.insert(xs.end(), p.coords.begin(), p.coords.end());
    }
    return Curve(dim, std::move(xs));
}

Point Curve::point(int i) const { return Point{std::vector<double>(pt(i), pt(i) + dim_)}; }

void Curve::eval(double s, double* out) const
{
    int ne = edges();
    if (ne == 0) {
        std::copy(pt(0), pt(0) + dim_, out);
        return;
    }
    s = std::clamp(s, 0.0, static_cast<double>(ne));
    int e = std::min(static_cast<int>(std::floor(s)), ne - 1);
    double t = s - e;
    const double* a = pt(e);
    const double* b = pt(e + 1);
    for (int k = 0; k < dim_; ++k)
        out[k] = t == 1.0 ? b[k] : a[k] + t * (b[k] - a[k]);
}

Point Curve::at(double s) const
{
    Point p;
    p.coords.resize(dim_);
    eval(s, p.coords.data());
    return p;
}

double Curve::length() const
{
    double s = 0.0;
    for (int e = 0; e < edges(); ++e)
        s += edge_length(e);
    return s;
}

Curve Curve::slice(int lo, int hi) const
{
    if (lo < 0 || hi >= size() || lo > hi)
        throw Error(ErrorCode::Input, "bad slice range");
    return Curve::raw(dim_, std::vector<double>(pt(lo), pt(hi) + dim_));
}

CurvePoint canonical_point(const Curve& c, double s)
{
    int ne = c.edges();
    if (ne == 0)
        return {0, 0.0};
    s = std::clamp(s, 0.0, static_cast<double>(ne));
    int e = std::min(static_cast<int>(std::floor(s)), ne - 1);
    return {e, s - e};
}

bool curve_point_le(const Curve& c, const CurvePoint& a, const CurvePoint& b)
{
    CurvePoint x = canonical_point(c, a.param());
    CurvePoint y = canonical_point(c, b.param());
    if (x.edge != y.edge)
        return x.edge < y.edge;
    return x.t <= y.t;
}

IntervalArray empty_array(int n) { return IntervalArray(static_cast<size_t>(std::max(n, 0))); }

bool all_empty(const IntervalArray& a)
{
    return std::all_of(a.begin(), a.end(), [](const Interval& i) { return i.empty; });
}

Interval clip_segment_to_ball(const double* p0, const double* p1, const double* c, double r, int dim)
{
    if (r < 0)
        throw Error(ErrorCode::Input, "negative radius");
    double A = 0, B = 0, C = 0;
    for (int k = 0; k < dim; ++k) {
        double d = p1[k] - p0[k];
        double f = p0[k] - c[k];
        A += d * d;
        B += 2 * f * d;
        C += f * f;
    }
    double r2 = r * r;
    C -= r2;
    bool in0 = C <= 0;
    bool in1 = dist2(p1, c, dim) <= r2;
    if (A == 0)
        return in0 ? Interval::make(0, 1) : Interval::Empty();
    double disc = B * B - 4 * A * C;
    if (disc < 0) {
        // roundoff near tangency; fall back to the closest point
        double tm = std::clamp(-B / (2 * A), 0.0, 1.0);
        if (A * tm * tm + B * tm + C <= 0)
            return Interval::make(tm, tm);
        return Interval::Empty();
    }
    double sq = std::sqrt(disc);
    // numerically stable roots
    double q = -0.5 * (B + (B >= 0 ? sq : -sq));
    double t1, t2;
    if (q != 0) {
        t1 = q / A;
        t2 = C / q;
    } else {
        t1 = t2 = 0;
    }
    if (t1 > t2)
        std::swap(t1, t2);
    double lo = in0 ? 0.0 : std::max(t1, 0.0);
    double hi = in1 ? 1.0 : std::min(t2, 1.0);
    if (lo > hi || hi < 0 || lo > 1)
        return Interval::Empty();
    return Interval::make(std::clamp(lo, 0.0, 1.0), std::clamp(hi, 0.0, 1.0));
}

Interval clip_segment_to_ball(const Point& p0, const Point& p1, const Point& c, double r)
{
    if (p0.coords.size() != p1.coords.size() || p0.coords.size() != c.coords.size())
        throw Error(ErrorCode::Input, "dimension mismatch");
    return clip_segment_to_ball(p0.coords.data(), p1.coords.data(), c.coords.data(), r,
                                static_cast<int>(c.coords.size()));
}

Curve subcurve_param(const Curve& c, double a, double b)
{
    if (a > b)
        throw Error(ErrorCode::Input, "subcurve endpoints out of order");
    int d = c.dim();
    std::vector<double> xs(d);
    c.eval(a, xs.data());
    int first = static_cast<int>(std::floor(a)) + 1;
    for (int v = std::max(first, 0); v < b && v < c.size(); ++v)
        if (v > a)
            xs.insert(xs.end(), c.pt(v), c.pt(v) + d);
    std::vector<double> end(d);
    c.eval(b, end.data());
    xs.insert(xs.end(), end.begin(), end.end());
    return Curve(d, std::move(xs));
}

Curve subcurve(const Curve& c, const CurvePoint& a, const CurvePoint& b)
{
    if (!curve_point_le(c, a, b))
        throw Error(ErrorCode::Input, "subcurve endpoints out of order");
    return subcurve_param(c, a.param(), b.param());
}

double bbox_diameter(const Curve& a, const Curve& b)
{
    int d = a.dim();
    std::vector<double> lo(d, INFINITY), hi(d, -INFINITY);
    for (const Curve* c : {&a, &b})
        for (int i = 0; i < c->size(); ++i)
            for (int k = 0; k < d; ++k) {
                lo[k] = std::min(lo[k], c->pt(i)[k]);
                hi[k] = std::max(hi[k], c->pt(i)[k]);
            }
    double s = 0;
    for (int k = 0; k < d; ++k)
        if (hi[k] >= lo[k])
            s += (hi[k] - lo[k]) * (hi[k] - lo[k]);
    return std::sqrt(s);
}

Curve parse_curve_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int dim = 0;
    std::vector<double> xs;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::vector<double> row;
        std::stringstream fields(line);
        std::string f;
        while (std::getline(fields, f, ',')) {
            char* endp = nullptr;
            double v = std::strtod(f.c_str(), &endp);
            while (endp && (*endp == ' ' || *endp == '\t'))
                ++endp;
            if (endp == f.c_str() || (endp && *endp != '\0') || !std::isfinite(v))
                throw Error(ErrorCode::Input, "malformed CSV at line " + std::to_string(lineno));
            row.push_back(v);
        }
        if (row.empty())
            throw Error(ErrorCode::Input, "malformed CSV at line " + std::to_string(lineno));
        if (dim == 0)
            dim = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != dim)
            throw Error(ErrorCode::Input, "dimension mismatch at line " + std::to_string(lineno));
        xs.insert(xs.end(), row.begin(), row.end());
    }
    if (dim == 0)
        throw Error(ErrorCode::Input, "curve file has no points");
    return Curve(dim, std::move(xs));
}

Curve read_curve_csv(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error(ErrorCode::Io, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_curve_csv(ss.str());
}

void write_curve_csv(const Curve& c, const std::string& path)
{
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorCode::Io, "cannot write " + path);
    f << std::setprecision(17);
    for (int i = 0; i < c.size(); ++i) {
        for (int k = 0; k < c.dim(); ++k)
            f << (k ? "," : "") << c.pt(i)[k];
        f << "\n";
    }
}

SyntheticKind parse_kind(const std::string& s)
{
    if (s == "walk")
        return SyntheticKind::Walk;
    if (s == "zigzag")
        return SyntheticKind::Zigzag;
    if (s == "circle")
        return SyntheticKind::Circle;
    if (s == "perturbed-copy")
        return SyntheticKind::PerturbedCopy;
    throw Error(ErrorCode::Input, "unknown curve kind: " + s);
}

Curve generate_synthetic(SyntheticKind kind, int n, std::uint64_t seed, const std::vector<double>& params,
                         const Curve* base, int dim)
{
    if (n < 2 && kind != SyntheticKind::PerturbedCopy)
        throw Error(ErrorCode::Input, "need at least 2 points");
    if ((kind == SyntheticKind::Zigzag || kind == SyntheticKind::Circle) && dim < 2)
        throw Error(ErrorCode::Input, "zigzag and circle need dimension >= 2");
    if (dim < 1)
        throw Error(ErrorCode::Input, "dimension must be at least 1");
    double p0 = params.empty() ? 1.0 : params[0];
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> xs;
    switch (kind) {
    case SyntheticKind::Walk: {
        std::vector<double> cur(dim, 0.0);
        for (int i = 0; i < n; ++i) {
            xs.insert(xs.end(), cur.begin(), cur.end());
            for (int k = 0; k < dim; ++k)
                cur[k] += p0 * gauss(rng);
        }
        break;
    }
    case SyntheticKind::Zigzag:
        for (int i = 0; i < n; ++i) {
            xs.push_back(i);
            xs.push_back(i % 2 == 0 ? p0 : -p0);
            for (int k = 2; k < dim; ++k)
                xs.push_back(0.0);
        }
        break;
    case SyntheticKind::Circle: {
        double phase = std::uniform_real_distribution<double>(0.0, 2 * M_PI)(rng);
        for (int i = 0; i < n; ++i) {
            double a = phase + 2 * M_PI * i / n;
            xs.push_back(p0 * std::cos(a));
            xs.push_back(p0 * std::sin(a));
            for (int k = 2; k < dim; ++k)
                xs.push_back(0.0);
        }
        break;
    }
    case SyntheticKind::PerturbedCopy: {
        if (!base)
            throw Error(ErrorCode::Input, "perturbed-copy needs a base curve");
        dim = base->dim();
        xs = base->data();
        if (p0 != 0.0)
            for (double& x : xs)
                x += p0 * gauss(rng);
        break;
    }
    }
    return Curve(dim, std::move(xs));
}

}  // namespace frechet
