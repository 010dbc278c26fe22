#ifndef FRECHET_SIMPLIFY_HPP
#define FRECHET_SIMPLIFY_HPP

#include "frechet/discrete.hpp"
#include "frechet/geometry.hpp"
#include "frechet/matching.hpp"

#include <optional>

namespace frechet {

constexpr double kDefaultCSimp = 2.0;

// Shortcut graph over vertices lo..hi of a curve: v_p v_q is feasible when
// the segment is within `radius` of c[p..q]. Answers min-vertex paths for any sub-range.
class ContinuousSimplifier {
public:
    ContinuousSimplifier(const Curve& c, int lo, int hi, double radius);
    // vertex count of the best simplification of c[a..b]
    int count(int a, int b) const;
    // kept vertex indices (absolute), a and b included
    std::vector<int> kept(int a, int b) const;
    bool feasible(int p, int q) const { return feas_[idx(p, q)] != 0; }

private:
    size_t idx(int p, int q) const { return static_cast<size_t>(p - lo_) * w_ + static_cast<size_t>(q - lo_); }
    int lo_, hi_;
    size_t w_;
    std::vector<char> feas_;
    std::vector<int> cnt_, pred_;
};

// Minimum-size subsequences under the discrete distance, per start vertex (memoised).
class DiscreteSimplifier {
public:
    DiscreteSimplifier(const Curve& c, int lo, int hi, double radius);
    int count(int a, int b) const;
    std::vector<int> kept(int a, int b) const;

private:
    struct Table {
        std::vector<int> f;     // (i, p) -> count
        std::vector<int> pred;  // packed predecessor state
    };
    const Table& table(int a) const;
    const Curve& c_;
    int lo_, hi_;
    double radius_;
    mutable std::vector<std::optional<Table>> tables_;
};

struct Simplification {
    Curve simplified;
    std::vector<int> kept;  // vertex indices into the original
    double error_bound = 0.0;
    int budget_used = 0;
};

Curve curve_from_indices(const Curve& c, const std::vector<int>& idx);

std::optional<Simplification> simplify_continuous(const Curve& tau, double delta, int budget,
                                                  double c_simp = kDefaultCSimp);
std::optional<Simplification> simplify_discrete(const Curve& tau, double delta, int budget,
                                                double c_simp = kDefaultCSimp);

}  // namespace frechet

#endif
