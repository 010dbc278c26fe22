#ifndef FRECHET_DISCRETE_HPP
#define FRECHET_DISCRETE_HPP

#include "frechet/geometry.hpp"

#include <utility>

namespace frechet {

// membership flag per vertex
using VertexSet = std::vector<char>;

VertexSet single_vertex(int size, int v);
bool set_empty(const VertexSet& s);

struct DisWaveOutput {
    std::vector<VertexSet> per_tau_vertex;    // DW^{v_i}, sets of sigma vertices
    std::vector<VertexSet> per_sigma_vertex;  // DW^{w_j}, sets of tau vertices
};

struct DisWaveEnds {
    VertexSet last_tau;    // DW^{v_n}
    VertexSet last_sigma;  // DW^{w_m}
};

DisWaveOutput dis_wave(const Curve& tau, const Curve& sigma, double delta, const VertexSet& S,
                       const VertexSet& S2);
DisWaveEnds dis_wave_ends(const Curve& tau, const Curve& sigma, double delta, const VertexSet& S,
                          const VertexSet& S2);

bool discrete_decide_exact(const Curve& tau, const Curve& sigma, double delta);
double discrete_compute_exact(const Curve& tau, const Curve& sigma);

struct DiscreteMatching {
    std::vector<std::pair<int, int>> pairs;  // from (n-1, m-1) down to (0, 0)
    std::vector<int> tau_image;               // M(v_i), index into sigma
    std::vector<int> sigma_image;             // M(w_j), index into tau
    double bound = 0.0;
};

DiscreteMatching build_discrete_matching(const Curve& tau, const Curve& sigma, double delta);

}  // namespace frechet

#endif
