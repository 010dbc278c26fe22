#ifndef FRECHET_MATCHING_HPP
#define FRECHET_MATCHING_HPP

#include "frechet/geometry.hpp"

#include <utility>

namespace frechet {

// Monotone matching stored as a chain of anchor pairs (tau param, sigma param);
// consecutive anchors are joined linearly.
class Matching {
public:
    Matching() = default;
    Matching(std::vector<double> T, std::vector<double> S, double bound);

    double realized_bound() const { return bound_; }
    double tau_end() const { return T_.empty() ? 0.0 : T_.back(); }
    double sigma_end() const { return S_.empty() ? 0.0 : S_.back(); }
    const std::vector<double>& tau_anchors() const { return T_; }
    const std::vector<double>& sigma_anchors() const { return S_; }

    // Image of a tau parameter. A flat run resolves to its first point,
    // except at the far end where it resolves to the end of the other curve.
    double forward(double t) const;
    double backward(double s) const;
    // all sigma params matched to t (and the converse)
    std::pair<double, double> range(double t) const;
    std::pair<double, double> range_back(double s) const;

    CurvePoint tau_vertex_image(int i) const;
    CurvePoint sigma_vertex_image(int j) const;

private:
    std::vector<double> T_, S_;
    double bound_ = 0.0;
};

// Requires decide_exact(tau, sigma, delta); throws Error(Precondition) otherwise.
Matching build_matching(const Curve& tau, const Curve& sigma, double delta);
// explicit radius, no tolerance added
Matching build_matching_raw(const Curve& tau, const Curve& sigma, double radius);

CurvePoint matching_query(const Matching& M, const Curve& sigma, const CurvePoint& x);

// max distance over k evenly spaced positions along the anchor chain
double sample_matching_distance(const Matching& M, const Curve& tau, const Curve& sigma, int k);

}  // namespace frechet

#endif
