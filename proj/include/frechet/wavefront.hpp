#ifndef FRECHET_WAVEFRONT_HPP
#define FRECHET_WAVEFRONT_HPP

#include "frechet/geometry.hpp"

namespace frechet {

// per_tau_vertex[i] is W^{v_i} over the edges of sigma,
// per_sigma_vertex[j] is W^{w_j} over the edges of tau.
struct WaveFrontOutput {
    std::vector<IntervalArray> per_tau_vertex;
    std::vector<IntervalArray> per_sigma_vertex;
};

// Only the arrays of the last vertices; O(n+m) memory.
struct WaveFrontEnds {
    IntervalArray last_tau;    // W^{v_n} over sigma
    IntervalArray last_sigma;  // W^{w_m} over tau
};

// Radius delta is used as given (no tolerance added).
WaveFrontOutput wavefront(const Curve& tau, const Curve& sigma, double delta, const IntervalArray& S,
                          const IntervalArray& S2);
WaveFrontEnds wavefront_ends(const Curve& tau, const Curve& sigma, double delta, const IntervalArray& S,
                             const IntervalArray& S2);

// Array covering only the first vertex of a curve with `edges` edges.
IntervalArray first_vertex_source(int edges);

// d_F(tau, sigma) <= delta, with tolerance 1e-9 * bounding box diameter
bool decide_exact(const Curve& tau, const Curve& sigma, double delta);
// same but with an explicit radius and no added tolerance
bool decide_exact_raw(const Curve& tau, const Curve& sigma, double radius);

double compute_exact(const Curve& tau, const Curve& sigma, double rel_tol = 1e-9);

}  // namespace frechet

#endif
