#ifndef FRECHET_ORACLES_HPP
#define FRECHET_ORACLES_HPP

#include "frechet/geometry.hpp"

#include <optional>

// Slow reference implementations used by the tests. They share only the Curve type
// and CSV helpers with the main library.
namespace frechet::oracle {

// points of p0p1 within r of c, by projecting c onto the supporting line
Interval free_interval(const double* p0, const double* p1, const double* c, double r, int dim);

struct Wave {
    std::vector<IntervalArray> cols;  // cols[i][j]: reachable part of {v_i} x edge j of sigma
    std::vector<IntervalArray> rows;  // rows[j][i]: reachable part of edge i of tau x {w_j}
};

// Row-major sweep over the free-space cells with explicit boundary sources.
Wave brute_wave(const Curve& tau, const Curve& sigma, double r, const IntervalArray& S, const IntervalArray& S2);

// radius used as given
bool brute_decide_raw(const Curve& tau, const Curve& sigma, double r);
// adds 1e-9 times the bounding box diameter
bool brute_decide(const Curve& tau, const Curve& sigma, double delta);
double brute_distance(const Curve& tau, const Curve& sigma, double rel_tol = 1e-9);

// True reachability from (v_1, w_1) restricted to one block pair:
// first = W^{v_{a1}} over sigma edges [b0, b1), second = W^{w_{b1}} over tau edges [a0, a1).
std::pair<IntervalArray, IntervalArray> brute_block_reach(const Curve& tau, const Curve& sigma, double r, int a0,
                                                          int a1, int b0, int b1);

// points y of the block with a covered x <= y and d_F(block[x, y], block[qx, qy]) <= r
IntervalArray brute_cover(const Curve& block, double qx, double qy, double r, const IntervalArray& S);

// edges e of the block crossed by some subcurve within r of sigma_prime
std::vector<char> brute_marked_edges(const Curve& block, const Curve& sigma_prime, double r);

// --- discrete ---------------------------------------------------------------

double brute_discrete_distance(const Curve& tau, const Curve& sigma);
// reach[i][j] from the sources by breadth-first search over the coupling graph
std::vector<std::vector<char>> brute_dis_reach(const Curve& tau, const Curve& sigma, double r,
                                               const std::vector<char>& S, const std::vector<char>& S2);
std::vector<char> brute_dis_cover(const Curve& block, int i1, int i2, double r, const std::vector<char>& S);
std::vector<char> brute_marked_vertices(const Curve& block, const Curve& sigma_prime, double r);
std::pair<std::vector<char>, std::vector<char>> brute_dis_block_reach(const Curve& tau, const Curve& sigma, double r,
                                                                      int a0, int a1, int b0, int b1);

// --- simplification ---------------------------------------------------------

// fewest vertices of a subsequence (endpoints kept) whose every shortcut is within r of its stretch
int min_vertex_restricted(const Curve& tau, double r);
// fewest vertices of a subsequence within discrete distance r of tau
int min_discrete_subsequence(const Curve& tau, double r);
// fewest vertices (up to kmax) of any curve with vertices on a grid of the given spacing within r of tau
std::optional<int> brute_min_simplification(const Curve& tau, double r, double spacing, int kmax);

}  // namespace frechet::oracle

#endif
