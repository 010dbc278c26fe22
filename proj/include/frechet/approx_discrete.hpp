#ifndef FRECHET_APPROX_DISCRETE_HPP
#define FRECHET_APPROX_DISCRETE_HPP

#include "frechet/approx.hpp"
#include "frechet/discrete.hpp"

namespace frechet {

struct DisPiece {
    int from = 0, to = 0;
    Curve curve;
    DiscreteMatching M;  // block.slice(from, to) against curve
};

// D[i1, i2, i] = DW^{v_{i2}} reached from the single source v_i along block[i1..i2]
class DisCoverIndex {
public:
    DisCoverIndex(const Curve& block, double delta_prime);
    double delta_prime() const { return delta_prime_; }
    struct Entry {
        VertexSet set;
        int max = -1;
    };
    const Entry& entry(int i1, int i2, int i) const;
    VertexSet query(int i1, int i2, double delta_prime, const VertexSet& S) const;

private:
    const Curve& block_;
    double delta_prime_;
    mutable std::unordered_map<std::uint64_t, Entry> memo_;
};

class DisBlockIndex {
public:
    DisBlockIndex(Curve block, double delta, const Params& p, int budget);

    const Curve& block() const { return block_; }
    const std::optional<Curve>& zeta() const { return zeta_; }
    const DisPiece& pre() const { return pre_; }
    const DisPiece& suf() const { return suf_; }
    const DisPiece& bar(int i) const { return bar_[static_cast<size_t>(i)]; }
    const DisPiece& tilde(int i) const { return tilde_[static_cast<size_t>(i)]; }
    const DisCoverIndex& cover() const { return *cover_; }
    double delta() const { return delta_; }
    const Thresholds& thresholds() const { return th_; }

    // vertex range [x, y] of the block close to sigma_prime, or nullopt (v not marked)
    std::optional<std::pair<int, int>> find_surrogate(const Curve& sigma_prime, int v) const;

private:
    DisPiece make_piece(const std::vector<int>& kept) const;

    Curve block_;
    double delta_;
    Thresholds th_;
    int budget_;
    std::unique_ptr<DiscreteSimplifier> simp_;
    std::optional<Curve> zeta_;
    DisPiece pre_, suf_;
    std::vector<DisPiece> bar_, tilde_;
    std::unique_ptr<DisCoverIndex> cover_;
};

struct DisReachOutput {
    VertexSet out_v;  // over sigma_l vertices, for v_{a_{k+1}}
    VertexSet out_w;  // over tau_k vertices, for w_{b_{l+1}}
    VertexSet I1, I2, I3, I4;
};

DisReachOutput dis_reach(const DisBlockIndex& ix, const Curve& sigma, int bl, int bl1,
                         const std::vector<int>& bounds, const VertexSet& Av, const VertexSet& Aw, const Params& p,
                         int k, int l, int n_for_samples);

bool discrete_decide_approx(const Curve& tau, const Curve& sigma, double delta, const Params& p,
                            Counters* counters = nullptr);
ApproxResult discrete_compute_approx(const Curve& tau, const Curve& sigma, const Params& p);

}  // namespace frechet

#endif
