#include "frechet/approx_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace frechet {

namespace {

VertexSet zero_set(int n) { return VertexSet(static_cast<size_t>(n), 0); }

Curve vertex_range(const Curve& c, int x, int y)
{
    std::vector<int> idx;
    for (int v = x; v <= y; ++v)
        idx.push_back(v);
    return curve_from_indices(c, idx);
}

}  // namespace

DisCoverIndex::DisCoverIndex(const Curve& block, double delta_prime) : block_(block), delta_prime_(delta_prime) {}

const DisCoverIndex::Entry& DisCoverIndex::entry(int i1, int i2, int i) const
{
    const int n = block_.size();
    if (i1 < 0 || i2 >= n || i1 > i2 || i < 0 || i >= n)
        throw Error(ErrorCode::Input, "cover index out of range");
    const std::uint64_t N = static_cast<std::uint64_t>(n);
    const std::uint64_t key = (static_cast<std::uint64_t>(i1) * N + static_cast<std::uint64_t>(i2)) * N +
                              static_cast<std::uint64_t>(i);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    PhaseScope phase(Phase::Preprocess);
    Entry en;
    en.set = dis_wave_ends(block_, vertex_range(block_, i1, i2), delta_prime_, single_vertex(n, i),
                           zero_set(i2 - i1 + 1))
                 .last_sigma;
    for (int v = n - 1; v >= 0; --v)
        if (en.set[static_cast<size_t>(v)]) {
            en.max = v;
            break;
        }
    return memo_.emplace(key, std::move(en)).first->second;
}

VertexSet DisCoverIndex::query(int i1, int i2, double delta_prime, const VertexSet& S) const
{
    if (delta_prime != delta_prime_)
        throw Error(ErrorCode::Input, "cover query radius differs from the index radius");
    const int n = block_.size();
    if (static_cast<int>(S.size()) != n)
        throw Error(ErrorCode::Input, "source set length mismatch");
    Counters* ctr = current_counters();
    if (ctr)
        ++ctr->cover_queries;
    VertexSet out = zero_set(n);
    std::uint64_t work = static_cast<std::uint64_t>(n);
    int covered_to = -1;
    for (int i = 0; i < n; ++i) {
        if (!S[static_cast<size_t>(i)])
            continue;
        const Entry& en = entry(i1, i2, i);
        if (en.max <= covered_to)
            continue;
        for (int v = std::max(i, covered_to + 1); v <= en.max; ++v)
            if (en.set[static_cast<size_t>(v)])
                out[static_cast<size_t>(v)] = 1;
        work += static_cast<std::uint64_t>(en.max - std::max(i, covered_to + 1) + 1);
        covered_to = en.max;
    }
    if (ctr)
        ctr->cover_work += work;
    return out;
}

// ---------------------------------------------------------------------------

DisBlockIndex::DisBlockIndex(Curve block, double delta, const Params& p, int budget)
    : block_(std::move(block)), delta_(delta), th_(audited_thresholds_discrete(p)), budget_(budget)
{
    PhaseScope phase(Phase::Preprocess);
    const int last = block_.size() - 1;
    if (last < 1)
        throw Error(ErrorCode::Input, "block needs an edge");
    simp_ = std::make_unique<DiscreteSimplifier>(block_, 0, last, th_.simp * delta_);
    count_cells(static_cast<std::uint64_t>(last + 1) * static_cast<std::uint64_t>(last + 1) *
                static_cast<std::uint64_t>(last + 1));
    if (simp_->count(0, last) <= budget_)
        zeta_ = curve_from_indices(block_, simp_->kept(0, last));
    int ip = 0;
    for (int i = last; i >= 0; --i)
        if (simp_->count(0, i) <= budget_) {
            ip = i;
            break;
        }
    pre_ = make_piece(simp_->kept(0, ip));
    int is = last;
    for (int i = 0; i <= last; ++i)
        if (simp_->count(i, last) <= budget_) {
            is = i;
            break;
        }
    suf_ = make_piece(simp_->kept(is, last));
    bar_.resize(static_cast<size_t>(last + 1));
    tilde_.resize(static_cast<size_t>(last + 1));
    for (int i = 0; i <= last; ++i) {
        int b = i;
        for (int c = 0; c <= i; ++c)
            if (simp_->count(c, i) <= budget_) {
                b = c;
                break;
            }
        bar_[static_cast<size_t>(i)] = make_piece(simp_->kept(b, i));
        int e = i;
        for (int c = last; c >= i; --c)
            if (simp_->count(i, c) <= budget_) {
                e = c;
                break;
            }
        tilde_[static_cast<size_t>(i)] = make_piece(simp_->kept(i, e));
    }
    cover_ = std::make_unique<DisCoverIndex>(block_, th_.cover * delta_);
}

DisPiece DisBlockIndex::make_piece(const std::vector<int>& kept) const
{
    DisPiece piece;
    piece.from = kept.front();
    piece.to = kept.back();
    piece.curve = curve_from_indices(block_, kept);
    try {
        piece.M = build_discrete_matching(block_.slice(piece.from, piece.to), piece.curve, th_.simp * delta_);
    } catch (const Error&) {
        throw Error(ErrorCode::Internal, "simplified piece failed its own distance check");
    }
    return piece;
}

std::optional<std::pair<int, int>> DisBlockIndex::find_surrogate(const Curve& sigma_prime, int v) const
{
    if (v < 0 || v >= block_.size())
        throw Error(ErrorCode::Input, "vertex index out of range");
    const DisPiece& B = bar(v);
    const DisPiece& T = tilde(v);
    const int d = block_.dim();
    std::vector<double> xs(B.curve.data());
    xs.insert(xs.end(), T.curve.data().begin() + d, T.curve.data().end());
    const Curve zp = Curve::raw(d, std::move(xs));
    const int nb = B.curve.size();
    const double r = th_.wave * delta_;
    std::vector<int> X, Y;
    for (int z = 0; z < zp.size(); ++z) {
        if (dist(zp.pt(z), sigma_prime.pt(0), d) <= r)
            X.push_back(z);
        if (dist(zp.pt(z), sigma_prime.pt(sigma_prime.size() - 1), d) <= r)
            Y.push_back(z);
    }
    std::reverse(Y.begin(), Y.end());
    Counters* ctr = current_counters();
    auto back = [&](int z) {
        if (z <= nb - 1)
            return B.from + B.M.sigma_image[static_cast<size_t>(z)];
        return T.from + T.M.sigma_image[static_cast<size_t>(z - (nb - 1))];
    };
    for (int x : X)
        for (int y : Y) {
            if (y < x)
                break;
            if (ctr)
                ++ctr->surrogate_tests;
            if (discrete_decide_exact(vertex_range(zp, x, y), sigma_prime, r))
                return std::make_pair(back(x), back(y));
        }
    return std::nullopt;
}

DisReachOutput dis_reach(const DisBlockIndex& ix, const Curve& sigma, int bl, int bl1,
                         const std::vector<int>& bounds, const VertexSet& Av, const VertexSet& Aw, const Params& p,
                         int k, int l, int n_for_samples)
{
    const Curve& block = ix.block();
    const int nb = block.size();
    const int F = bl1 - bl + 1;
    if (static_cast<int>(Av.size()) != F || static_cast<int>(Aw.size()) != nb)
        throw Error(ErrorCode::Input, "reach input length mismatch");
    Counters* ctr = current_counters();
    if (ctr)
        ++ctr->reach_calls;
    DisReachOutput R;
    R.I1 = R.I2 = zero_set(F);
    R.I3 = R.I4 = zero_set(nb);
    const bool av_any = !set_empty(Av);
    const bool aw_any = !set_empty(Aw);
    if (!av_any && !aw_any) {
        R.out_v = zero_set(F);
        R.out_w = zero_set(nb);
        return R;
    }
    const Curve sl = sigma.slice(bl, bl1);
    const double delta = ix.delta();
    const double r1 = ix.thresholds().wave * delta;

    if (av_any && ix.zeta()) {
        const Curve& z = *ix.zeta();
        R.I1 = dis_wave_ends(z, sl, r1, zero_set(z.size()), Av).last_tau;
    }
    if (aw_any) {
        const DisPiece& suf = ix.suf();
        VertexSet S = zero_set(suf.curve.size());
        bool any = false;
        for (int v = suf.from; v < nb; ++v)
            if (Aw[static_cast<size_t>(v)]) {
                S[static_cast<size_t>(suf.M.tau_image[static_cast<size_t>(v - suf.from)])] = 1;
                any = true;
            }
        if (any)
            R.I2 = dis_wave_ends(suf.curve, sl, r1, S, zero_set(F)).last_tau;
    }
    if (av_any) {
        const DisPiece& pre = ix.pre();
        VertexSet W = dis_wave_ends(pre.curve, sl, r1, zero_set(pre.curve.size()), Av).last_sigma;
        for (int v = 0; v <= pre.to; ++v)
            if (W[static_cast<size_t>(pre.M.tau_image[static_cast<size_t>(v)])])
                R.I3[static_cast<size_t>(v)] = 1;
    }
    if (aw_any) {
        const double dp = ix.cover().delta_prime();
        const int subs = static_cast<int>(bounds.size()) - 1;
        std::vector<std::pair<int, int>> found;
        int failed = p.deterministic_fallback_only ? 0 : -1;
        if (!p.deterministic_fallback_only) {
            const int K = sample_count(p, n_for_samples);
            for (int r = 0; r < subs && failed < 0; ++r) {
                const Curve sub = sigma.slice(bounds[static_cast<size_t>(r)], bounds[static_cast<size_t>(r) + 1]);
                std::seed_seq seq{static_cast<std::uint32_t>(p.seed), static_cast<std::uint32_t>(p.seed >> 32),
                                  static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l),
                                  static_cast<std::uint32_t>(r)};
                std::mt19937_64 rng(seq);
                std::uniform_int_distribution<int> pick(0, nb - 1);
                bool ok = false;
                for (int s = 0; s < K && !ok; ++s) {
                    int v = pick(rng);
                    if (ctr)
                        ++ctr->samples_drawn;
                    if (auto hit = ix.find_surrogate(sub, v)) {
                        found.push_back(*hit);
                        ok = true;
                    }
                }
                if (!ok)
                    failed = r;
            }
        }
        if (failed >= 0) {
            if (ctr)
                ++ctr->fallbacks_triggered;
            const int s0 = bounds[static_cast<size_t>(failed)];
            const Curve sub = sigma.slice(s0, bounds[static_cast<size_t>(failed) + 1]);
            VertexSet S = zero_set(nb);
            for (int v = 0; v < nb; ++v)
                S[static_cast<size_t>(v)] = dist(block.pt(v), sigma.pt(s0), block.dim()) <= delta;
            VertexSet marks = dis_wave_ends(block, sub, delta, S, zero_set(sub.size())).last_sigma;
            for (int v = 0; v < nb; ++v) {
                if (!marks[static_cast<size_t>(v)])
                    continue;
                if (auto hit = ix.find_surrogate(sl, v)) {
                    R.I4 = ix.cover().query(hit->first, hit->second, dp, Aw);
                    break;
                }
            }
        } else {
            VertexSet cur = Aw;
            for (auto [x, y] : found) {
                cur = ix.cover().query(x, y, dp, cur);
                if (set_empty(cur))
                    break;
            }
            R.I4 = cur;
        }
    }
    const int d = block.dim();
    R.out_v = zero_set(F);
    for (int j = 0; j < F; ++j)
        R.out_v[static_cast<size_t>(j)] = (R.I1[static_cast<size_t>(j)] || R.I2[static_cast<size_t>(j)]) &&
                                          dist(sl.pt(j), block.pt(nb - 1), d) <= delta;
    R.out_w = zero_set(nb);
    for (int i = 0; i < nb; ++i)
        R.out_w[static_cast<size_t>(i)] = (R.I3[static_cast<size_t>(i)] || R.I4[static_cast<size_t>(i)]) &&
                                          dist(block.pt(i), sl.pt(F - 1), d) <= delta;
    return R;
}

// ---------------------------------------------------------------------------

namespace {

VertexSet start_row(const double* center, const Curve& c, double r)
{
    VertexSet out = zero_set(c.size());
    for (int j = 0; j < c.size(); ++j) {
        if (j > 0 && !out[static_cast<size_t>(j - 1)])
            break;
        out[static_cast<size_t>(j)] = dist(center, c.pt(j), c.dim()) <= r;
    }
    return out;
}

bool decide_impl(const Curve& tau_in, const Curve& sigma_in, double delta, const Params& p_in)
{
    if (tau_in.size() < 2 || sigma_in.size() < 2)
        throw Error(ErrorCode::Input, "curves need at least two vertices");
    if (tau_in.dim() != sigma_in.dim())
        throw Error(ErrorCode::Input, "dimension mismatch");
    if (!(delta >= 0))
        throw Error(ErrorCode::Input, "delta must be non-negative");
    const bool swap = sigma_in.size() > tau_in.size();
    const Curve& tau = swap ? sigma_in : tau_in;
    const Curve& sigma = swap ? tau_in : sigma_in;
    Params p = resolve_params(p_in, sigma.size());
    if (Counters* c = current_counters())
        ++c->decision_calls;
    const int d = tau.dim();
    if (dist(tau.pt(0), sigma.pt(0), d) > delta ||
        dist(tau.pt(tau.size() - 1), sigma.pt(sigma.size() - 1), d) > delta)
        return false;

    Partition P = partition(tau, sigma, p, true);
    const int K = P.tau_blocks();
    const int L = P.sigma_blocks();
    const int budget = p.mu2 + 2;
    VertexSet row0 = start_row(P.tau.pt(0), P.sigma, delta);
    VertexSet col0 = start_row(P.sigma.pt(0), P.tau, delta);
    std::vector<VertexSet> Aw(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k)
        Aw[static_cast<size_t>(k)].assign(col0.begin() + P.a[static_cast<size_t>(k)],
                                         col0.begin() + P.a[static_cast<size_t>(k) + 1] + 1);
    std::vector<std::unique_ptr<DisBlockIndex>> idx(static_cast<size_t>(K));
    for (int l = 0; l < L; ++l) {
        const int bl = P.b[static_cast<size_t>(l)], bl1 = P.b[static_cast<size_t>(l) + 1];
        const std::vector<int> bounds = P.sub_block_bounds(l);
        VertexSet Av(row0.begin() + bl, row0.begin() + bl1 + 1);
        for (int k = 0; k < K; ++k) {
            VertexSet& aw = Aw[static_cast<size_t>(k)];
            if (set_empty(Av) && set_empty(aw)) {
                if (Counters* c = current_counters())
                    ++c->reach_calls;
                continue;
            }
            auto& ix = idx[static_cast<size_t>(k)];
            if (!ix)
                ix = std::make_unique<DisBlockIndex>(
                    P.tau.slice(P.a[static_cast<size_t>(k)], P.a[static_cast<size_t>(k) + 1]), delta, p, budget);
            DisReachOutput R = dis_reach(*ix, P.sigma, bl, bl1, bounds, Av, aw, p, k, l, tau.size());
            Av = std::move(R.out_v);
            aw = std::move(R.out_w);
        }
    }
    return Aw.back().back() != 0;
}

}  // namespace

bool discrete_decide_approx(const Curve& tau, const Curve& sigma, double delta, const Params& p, Counters* counters)
{
    if (counters) {
        CounterScope scope(counters);
        return decide_impl(tau, sigma, delta, p);
    }
    return decide_impl(tau, sigma, delta, p);
}

ApproxResult discrete_compute_approx(const Curve& tau, const Curve& sigma, const Params& p_in)
{
    if (tau.size() < 2 || sigma.size() < 2)
        throw Error(ErrorCode::Input, "curves need at least two vertices");
    Params p = resolve_params(p_in, std::min(tau.size(), sigma.size()));
    ApproxResult res;
    res.ratio_bound = audited_ratio_bound_discrete(p);
    CounterScope scope(&res.counters);
    auto decide = [&](double x) {
        ++res.decisions;
        return decide_impl(tau, sigma, x, p);
    };
    if (decide(0.0))
        return res;
    const int d = tau.dim();
    const double LB = std::max(dist(tau.pt(0), sigma.pt(0), d),
                               dist(tau.pt(tau.size() - 1), sigma.pt(sigma.size() - 1), d));
    double lo = 0, hi = 0;
    if (LB > 0 && decide(LB)) {
        lo = hi = LB;
    } else {
        // the discrete distance is at least the smallest non-zero vertex gap
        double x = LB;
        if (x <= 0) {
            x = INFINITY;
            for (int i = 0; i < tau.size(); ++i)
                for (int j = 0; j < sigma.size(); ++j) {
                    double g = dist(tau.pt(i), sigma.pt(j), d);
                    if (g > 0)
                        x = std::min(x, g);
                }
            if (decide(x)) {
                res.lower = x;
                res.upper = res.value = res.ratio_bound * x;
                return res;
            }
        }
        lo = x;
        hi = 2 * x;
        while (!decide(hi)) {
            lo = hi;
            hi *= 2;
        }
    }
    while (hi > lo * (1 + p.eps)) {
        double mid = std::sqrt(lo * hi);
        if (decide(mid))
            hi = mid;
        else
            lo = mid;
    }
    res.lower = lo;
    res.upper = res.value = res.ratio_bound * hi;
    return res;
}

}  // namespace frechet
