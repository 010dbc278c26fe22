#ifndef FRECHET_GEOMETRY_HPP
#define FRECHET_GEOMETRY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace frechet {

enum class ErrorCode { Input = 1, Precondition = 2, Io = 3, Internal = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }
    // set for precondition failures of the matching builders
    double witness = -1.0;

private:
    ErrorCode code_;
};

struct Point {
    std::vector<double> coords;
};

double dist(const Point& p, const Point& q);
double dist(const double* p, const double* q, int dim);
double dist2(const double* p, const double* q, int dim);

// Vertices are 0-based; edge e joins vertex e and e+1.
class Curve {
public:
    Curve() = default;
    // collapses consecutive duplicate vertices
    Curve(int dim, std::vector<double> xs);
    static Curve from_points(const std::vector<Point>& pts);
    // keeps duplicates (used for discrete padding)
    static Curve raw(int dim, std::vector<double> xs);

    int dim() const { return dim_; }
    int size() const { return dim_ ? static_cast<int>(xs_.size()) / dim_ : 0; }
    int edges() const { return size() > 0 ? size() - 1 : 0; }
    const double* pt(int i) const { return xs_.data() + static_cast<size_t>(i) * dim_; }
    Point point(int i) const;
    const std::vector<double>& data() const { return xs_; }

    // location at global parameter s in [0, edges()]
    void eval(double s, double* out) const;
    Point at(double s) const;
    double edge_length(int e) const { return dist(pt(e), pt(e + 1), dim_); }
    double length() const;
    // vertices lo..hi inclusive
    Curve slice(int lo, int hi) const;

    bool operator==(const Curve& o) const { return dim_ == o.dim_ && xs_ == o.xs_; }

private:
    int dim_ = 0;
    std::vector<double> xs_;
};

// edge index plus position; canonical form keeps t < 1 except on the last edge
struct CurvePoint {
    int edge = 0;
    double t = 0.0;
    double param() const { return edge + t; }
};

CurvePoint canonical_point(const Curve& c, double s);
// lexicographic on (edge, t) after canonicalisation
bool curve_point_le(const Curve& c, const CurvePoint& a, const CurvePoint& b);

struct Interval {
    double lo = 1.0;
    double hi = 0.0;
    bool empty = true;

    static Interval Empty() { return {}; }
    static Interval make(double lo, double hi) { return {lo, hi, false}; }
    bool contains(double t, double tol = 0.0) const { return !empty && t >= lo - tol && t <= hi + tol; }
    bool operator==(const Interval& o) const
    {
        return empty == o.empty && (empty || (lo == o.lo && hi == o.hi));
    }
};

using IntervalArray = std::vector<Interval>;

IntervalArray empty_array(int n);
bool all_empty(const IntervalArray& a);

// parameter interval of points on p0p1 within distance r of c
Interval clip_segment_to_ball(const double* p0, const double* p1, const double* c, double r, int dim);
Interval clip_segment_to_ball(const Point& p0, const Point& p1, const Point& c, double r);

// subcurve from a to b; a must not come after b
Curve subcurve(const Curve& c, const CurvePoint& a, const CurvePoint& b);
Curve subcurve_param(const Curve& c, double a, double b);

double bbox_diameter(const Curve& a, const Curve& b);
inline double tolerance_eta(const Curve& a, const Curve& b) { return 1e-9 * bbox_diameter(a, b); }

Curve read_curve_csv(const std::string& path);
Curve parse_curve_csv(const std::string& text);
void write_curve_csv(const Curve& c, const std::string& path);

enum class SyntheticKind { Walk, Zigzag, Circle, PerturbedCopy };
SyntheticKind parse_kind(const std::string& s);

// params: walk {step}, zigzag {amplitude}, circle {radius}, perturbed-copy {noise}
Curve generate_synthetic(SyntheticKind kind, int n, std::uint64_t seed, const std::vector<double>& params,
                         const Curve* base = nullptr, int dim = 2);

}  // namespace frechet

#endif
