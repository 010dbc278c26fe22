#ifndef FRECHET_APPROX_HPP
#define FRECHET_APPROX_HPP

#include "frechet/counters.hpp"
#include "frechet/geometry.hpp"
#include "frechet/matching.hpp"
#include "frechet/simplify.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>

namespace frechet {

struct Params {
    double eps = 0.5;
    double eps_inner = 0.0;  // 0 means eps / 10
    int mu1 = 0, mu2 = 0, mu3 = 0, omega = 0;  // 0 means the default schedule
    double sample_c = 1.0;
    double c_simp = kDefaultCSimp;
    std::uint64_t seed = 0;
    bool deterministic_fallback_only = false;
};

// Fills schedule defaults from m and validates; throws Error(Input) on bad values.
Params resolve_params(Params p, int m);

// Radii used by the pipeline, as multiples of delta.
struct Thresholds {
    double simp;       // simplification error
    double wave;       // wavefronts on simplified curves, surrogate tests, X/Y balls
    double surrogate;  // surrogate to sigma'
    double cover;      // Cover radius
    double bound;      // end-to-end ratio
};
Thresholds audited_thresholds(const Params& p);
Thresholds audited_thresholds_discrete(const Params& p);
double audited_ratio_bound(const Params& p);
double audited_ratio_bound_discrete(const Params& p);

// Pads so that mu1 | (n-1) and mu2 | (m-1). Continuous padding splits the final edge,
// discrete padding repeats the final vertex.
struct Partition {
    Curve tau, sigma;
    std::vector<int> a;  // tau block boundaries (0-based vertex indices)
    std::vector<int> b;  // sigma block boundaries
    int mu3 = 1;
    int tau_pad = 0, sigma_pad = 0;

    int tau_blocks() const { return static_cast<int>(a.size()) - 1; }
    int sigma_blocks() const { return static_cast<int>(b.size()) - 1; }
    // b_{l,r} = b_l + (r-1) mu3 + 1 below b_{l+1} (0-based l)
    std::vector<int> sub_block_starts(int l) const;
    // boundaries actually used: first sub-block extended back to b_l
    std::vector<int> sub_block_bounds(int l) const;
};

Partition partition(const Curve& tau, const Curve& sigma, const Params& p, bool discrete = false);
Curve pad_by_splitting(const Curve& c, int mu);
Curve pad_by_repeating(const Curve& c, int mu);

// A simplified piece of a block: covers block vertices [from, to], with a matching
// between block.slice(from, to) and `curve`.
struct SimpPiece {
    int from = 0, to = 0;
    Curve curve;
    Matching M;
};

class CoverIndex {
public:
    CoverIndex(const Curve& block, double delta_prime, double eps_inner);

    double delta_prime() const { return delta_prime_; }
    // stored entry D[i1, i2, i, b] with its Max; computed on first use
    struct Entry {
        IntervalArray arr;
        int max = -1;
    };
    const Entry& entry(int i1, int i2, int i, int b) const;
    // discretisation on edge i around vertex v_{i1}: C, spacing h (param units), count a
    struct Grid {
        Interval C;
        double h = 0;
        int a = 0;
    };
    Grid grid(int i1, int i) const;

    IntervalArray query(double x, double y, double delta_prime, const IntervalArray& S) const;

private:
    IntervalArray core(int i1, int i2, const IntervalArray& S1) const;
    const Curve& block_;
    double delta_prime_, eps_;
    mutable std::unordered_map<std::uint64_t, Entry> memo_;
};

class BlockIndex {
public:
    BlockIndex(Curve block, double delta, const Params& p, int budget);

    const Curve& block() const { return block_; }
    int edges() const { return block_.edges(); }
    const std::optional<Curve>& zeta() const { return zeta_; }
    const SimpPiece& pre() const { return pre_; }
    const SimpPiece& suf() const { return suf_; }
    int i_pre() const { return i_pre_; }
    int i_suf() const { return i_suf_; }
    const SimpPiece& bar(int i) const { return bar_[i]; }
    const SimpPiece& tilde(int i) const { return tilde_[i]; }
    const CoverIndex& cover() const { return *cover_; }
    double delta() const { return delta_; }
    const Thresholds& thresholds() const { return th_; }

    // Block-local parameter range of a subcurve close to sigma_prime, or nullopt
    // (then edge e is not marked by sigma_prime at delta).
    std::optional<std::pair<double, double>> find_surrogate(const Curve& sigma_prime, int e) const;

private:
    SimpPiece make_piece(int from, int to, const std::vector<int>& kept) const;

    Curve block_;
    double delta_;
    Params params_;
    Thresholds th_;
    int budget_;
    double simp_radius_;
    std::unique_ptr<ContinuousSimplifier> simp_;
    std::optional<Curve> zeta_;
    SimpPiece pre_, suf_;
    int i_pre_ = 0, i_suf_ = 0;
    std::vector<SimpPiece> bar_, tilde_;
    std::unique_ptr<CoverIndex> cover_;
};

struct ReachOutput {
    IntervalArray out_v;  // over sigma_l edges, for v_{a_{k+1}}
    IntervalArray out_w;  // over tau_k edges, for w_{b_{l+1}}
    // the four intermediate arrays (for tests)
    IntervalArray I1, I2, I3, I4;
};

// sigma: the whole (padded) sigma; sub-blocks of [bl, bl1] come from `bounds`.
ReachOutput reach(const BlockIndex& ix, const Curve& sigma, int bl, int bl1, const std::vector<int>& bounds,
                  const IntervalArray& Av, const IntervalArray& Aw, const Params& p, int k, int l,
                  int n_for_samples);

// ceil(2 c ln(n) mu1 / omega)
int sample_count(const Params& p, int n);

struct ApproxResult {
    double value = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double ratio_bound = 0.0;
    int decisions = 0;
    Counters counters;
};

bool decide_approx(const Curve& tau, const Curve& sigma, double delta, const Params& p,
                   Counters* counters = nullptr);
ApproxResult compute_approx(const Curve& tau, const Curve& sigma, const Params& p);

// exact reachability of a vertex along an entire curve from its start (the v_1 / w_1 arrays)
IntervalArray vertex_start_reach(const double* center, const Curve& c, double r);

}  // namespace frechet

#endif
