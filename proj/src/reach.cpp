#include "frechet/approx.hpp"

#include "frechet/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace frechet {

namespace {

void keep_min_start(Interval& into, double lo)
{
    if (into.empty || lo < into.lo)
        into = Interval::make(lo, lo);
}

// per edge: [max(p, F.lo), F.hi] where p is the minimum covered start and F the target ball clip
IntervalArray finish(const Curve& c, int first_edge, const IntervalArray& starts, const double* target, double r)
{
    IntervalArray out = empty_array(static_cast<int>(starts.size()));
    for (size_t e = 0; e < starts.size(); ++e) {
        if (starts[e].empty)
            continue;
        int g = first_edge + static_cast<int>(e);
        Interval F = clip_segment_to_ball(c.pt(g), c.pt(g + 1), target, r, c.dim());
        if (F.empty)
            continue;
        double lo = std::max(starts[e].lo, F.lo);
        if (lo <= F.hi)
            out[e] = Interval::make(lo, F.hi);
    }
    return out;
}

IntervalArray hull_on_edges(int edges, const std::vector<std::pair<double, double>>& ranges)
{
    IntervalArray out = empty_array(edges);
    for (auto [s0, s1] : ranges) {
        int e0 = std::clamp(static_cast<int>(std::floor(s0)), 0, edges - 1);
        int e1 = std::clamp(static_cast<int>(std::floor(s1)), 0, edges - 1);
        for (int e = e0; e <= e1; ++e) {
            double lo = std::clamp(s0 - e, 0.0, 1.0);
            double hi = std::clamp(s1 - e, 0.0, 1.0);
            if (lo > hi)
                continue;
            Interval& o = out[static_cast<size_t>(e)];
            if (o.empty)
                o = Interval::make(lo, hi);
            else
                o = Interval::make(std::min(o.lo, lo), std::max(o.hi, hi));
        }
    }
    return out;
}

}  // namespace

int sample_count(const Params& p, int n)
{
    double v = 2.0 * p.sample_c * std::log(static_cast<double>(std::max(n, 2))) * p.mu1 / p.omega;
    return std::max(1, static_cast<int>(std::ceil(v - 1e-12)));
}

IntervalArray vertex_start_reach(const double* center, const Curve& c, double r)
{
    IntervalArray out = empty_array(c.edges());
    for (int j = 0; j < c.edges(); ++j) {
        bool open = j == 0 ? dist2(center, c.pt(0), c.dim()) <= r * r
                           : (!out[static_cast<size_t>(j - 1)].empty && out[static_cast<size_t>(j - 1)].hi >= 1.0);
        if (!open)
            break;
        out[static_cast<size_t>(j)] = clip_segment_to_ball(c.pt(j), c.pt(j + 1), center, r, c.dim());
    }
    return out;
}

ReachOutput reach(const BlockIndex& ix, const Curve& sigma, int bl, int bl1, const std::vector<int>& bounds,
                  const IntervalArray& Av, const IntervalArray& Aw, const Params& p, int k, int l, int n_for_samples)
{
    const Curve& block = ix.block();
    const int E = block.edges();
    const int F = bl1 - bl;
    if (static_cast<int>(Av.size()) != F || static_cast<int>(Aw.size()) != E)
        throw Error(ErrorCode::Input, "reach input length mismatch");
    Counters* ctr = current_counters();
    if (ctr)
        ++ctr->reach_calls;

    ReachOutput R;
    R.I1 = empty_array(F);
    R.I2 = empty_array(F);
    R.I3 = empty_array(E);
    R.I4 = empty_array(E);
    const bool av_any = !all_empty(Av);
    const bool aw_any = !all_empty(Aw);
    if (!av_any && !aw_any) {
        R.out_v = empty_array(F);
        R.out_w = empty_array(E);
        return R;
    }
    const Curve sl = sigma.slice(bl, bl1);
    const Thresholds& th = ix.thresholds();
    const double delta = ix.delta();
    const double r1 = th.wave * delta;

    // I1: through the whole simplified block
    if (av_any && ix.zeta()) {
        const Curve& z = *ix.zeta();
        R.I1 = wavefront_ends(z, sl, r1, empty_array(z.edges()), Av).last_tau;
    }
    // I2: from A_w through the simplified suffix
    if (aw_any) {
        const SimpPiece& suf = ix.suf();
        std::vector<std::pair<double, double>> ranges;
        for (int i = suf.from; i < E; ++i) {
            const Interval& a = Aw[static_cast<size_t>(i)];
            if (a.empty)
                continue;
            double t0 = i + a.lo - suf.from, t1 = i + a.hi - suf.from;
            ranges.emplace_back(suf.M.range(t0).first, suf.M.range(t1).second);
        }
        if (!ranges.empty()) {
            IntervalArray S = hull_on_edges(suf.curve.edges(), ranges);
            R.I2 = wavefront_ends(suf.curve, sl, r1, S, empty_array(F)).last_tau;
        }
    }
    // I3: from A_v through the simplified prefix, mapped back onto the block
    if (av_any) {
        const SimpPiece& pre = ix.pre();
        IntervalArray W = wavefront_ends(pre.curve, sl, r1, empty_array(pre.curve.edges()), Av).last_sigma;
        std::vector<std::pair<double, double>> ranges;
        for (int e = 0; e < static_cast<int>(W.size()); ++e) {
            const Interval& a = W[static_cast<size_t>(e)];
            if (a.empty)
                continue;
            ranges.emplace_back(pre.from + pre.M.range_back(e + a.lo).first,
                                pre.from + pre.M.range_back(e + a.hi).second);
        }
        R.I3 = hull_on_edges(E, ranges);
    }
    // I4: chain Cover queries over surrogates of the sub-blocks
    if (aw_any) {
        const double dp = ix.cover().delta_prime();
        const int subs = static_cast<int>(bounds.size()) - 1;
        std::vector<std::pair<double, double>> found;
        int failed = p.deterministic_fallback_only ? 0 : -1;
        if (!p.deterministic_fallback_only) {
            const int K = sample_count(p, n_for_samples);
            for (int r = 0; r < subs && failed < 0; ++r) {
                const Curve sub = sigma.slice(bounds[static_cast<size_t>(r)], bounds[static_cast<size_t>(r) + 1]);
                std::seed_seq seq{static_cast<std::uint32_t>(p.seed), static_cast<std::uint32_t>(p.seed >> 32),
                                  static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l),
                                  static_cast<std::uint32_t>(r)};
                std::mt19937_64 rng(seq);
                std::uniform_int_distribution<int> pick(0, E - 1);
                bool ok = false;
                for (int s = 0; s < K && !ok; ++s) {
                    int e = pick(rng);
                    if (ctr)
                        ++ctr->samples_drawn;
                    if (auto hit = ix.find_surrogate(sub, e)) {
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
            IntervalArray S = empty_array(E);
            for (int i = 0; i < E; ++i)
                S[static_cast<size_t>(i)] =
                    clip_segment_to_ball(block.pt(i), block.pt(i + 1), sigma.pt(s0), delta, block.dim());
            IntervalArray marks = wavefront_ends(block, sub, delta, S, empty_array(sub.edges())).last_sigma;
            IntervalArray cur = empty_array(E);
            for (int e = 0; e < E; ++e) {
                if (marks[static_cast<size_t>(e)].empty)
                    continue;
                if (auto hit = ix.find_surrogate(sl, e)) {
                    cur = ix.cover().query(hit->first, hit->second, dp, Aw);
                    break;
                }
            }
            R.I4 = cur;
        } else {
            IntervalArray cur = Aw;
            for (auto [x, y] : found) {
                cur = ix.cover().query(x, y, dp, cur);
                if (all_empty(cur))
                    break;
            }
            R.I4 = cur;
        }
    }

    IntervalArray sv = empty_array(F), sw = empty_array(E);
    for (int j = 0; j < F; ++j)
        for (const IntervalArray* I : {&R.I1, &R.I2})
            if (!(*I)[static_cast<size_t>(j)].empty)
                keep_min_start(sv[static_cast<size_t>(j)], (*I)[static_cast<size_t>(j)].lo);
    for (int i = 0; i < E; ++i)
        for (const IntervalArray* I : {&R.I3, &R.I4})
            if (!(*I)[static_cast<size_t>(i)].empty)
                keep_min_start(sw[static_cast<size_t>(i)], (*I)[static_cast<size_t>(i)].lo);
    R.out_v = finish(sigma, bl, sv, block.pt(E), delta);
    R.out_w = finish(block, 0, sw, sigma.pt(bl1), delta);
    return R;
}

// ---------------------------------------------------------------------------

namespace {

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

    const double de = delta + tolerance_eta(tau, sigma);
    const int d = tau.dim();
    if (dist2(tau.pt(0), sigma.pt(0), d) > de * de ||
        dist2(tau.pt(tau.size() - 1), sigma.pt(sigma.size() - 1), d) > de * de)
        return false;

    Partition P = partition(tau, sigma, p);
    const int K = P.tau_blocks();
    const int L = P.sigma_blocks();
    const int budget = 2 * p.mu2 + 2;
    IntervalArray row0 = vertex_start_reach(P.tau.pt(0), P.sigma, de);
    IntervalArray col0 = vertex_start_reach(P.sigma.pt(0), P.tau, de);

    std::vector<IntervalArray> Aw(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k)
        Aw[static_cast<size_t>(k)].assign(col0.begin() + P.a[static_cast<size_t>(k)],
                                         col0.begin() + P.a[static_cast<size_t>(k) + 1]);
    std::vector<std::unique_ptr<BlockIndex>> idx(static_cast<size_t>(K));
    for (int l = 0; l < L; ++l) {
        const int bl = P.b[static_cast<size_t>(l)], bl1 = P.b[static_cast<size_t>(l) + 1];
        const std::vector<int> bounds = P.sub_block_bounds(l);
        IntervalArray Av(row0.begin() + bl, row0.begin() + bl1);
        for (int k = 0; k < K; ++k) {
            IntervalArray& aw = Aw[static_cast<size_t>(k)];
            if (all_empty(Av) && all_empty(aw)) {
                if (Counters* c = current_counters())
                    ++c->reach_calls;
                continue;
            }
            auto& ix = idx[static_cast<size_t>(k)];
            if (!ix)
                ix = std::make_unique<BlockIndex>(
                    P.tau.slice(P.a[static_cast<size_t>(k)], P.a[static_cast<size_t>(k) + 1]), de, p, budget);
            ReachOutput R = reach(*ix, P.sigma, bl, bl1, bounds, Av, aw, p, k, l, tau.size());
            Av = std::move(R.out_v);
            aw = std::move(R.out_w);
        }
    }
    const Interval& last = Aw.back().back();
    return !last.empty && last.hi >= 1.0;
}

}  // namespace

bool decide_approx(const Curve& tau, const Curve& sigma, double delta, const Params& p, Counters* counters)
{
    if (counters) {
        CounterScope scope(counters);
        return decide_impl(tau, sigma, delta, p);
    }
    return decide_impl(tau, sigma, delta, p);
}

ApproxResult compute_approx(const Curve& tau, const Curve& sigma, const Params& p_in)
{
    if (tau.size() < 2 || sigma.size() < 2)
        throw Error(ErrorCode::Input, "curves need at least two vertices");
    Params p = resolve_params(p_in, std::min(tau.size(), sigma.size()));
    ApproxResult res;
    res.ratio_bound = audited_ratio_bound(p);
    CounterScope scope(&res.counters);
    auto decide = [&](double x) {
        ++res.decisions;
        return decide_impl(tau, sigma, x, p);
    };
    if (decide(0.0)) {
        res.value = res.lower = res.upper = 0.0;
        return res;
    }
    const int d = tau.dim();
    const double LB = std::max(dist(tau.pt(0), sigma.pt(0), d),
                               dist(tau.pt(tau.size() - 1), sigma.pt(sigma.size() - 1), d));
    const double diam = bbox_diameter(tau, sigma);
    double lo, hi;
    bool lo_certified = true;
    if (LB > 0) {
        if (decide(LB)) {
            lo = LB;
            hi = LB;
        } else {
            lo = LB;
            hi = 2 * LB;
            while (!decide(hi)) {
                lo = hi;
                hi *= 2;
            }
        }
    } else {
        // no endpoint gap: bracket from a small fraction of the diameter in both directions
        double x = std::max(diam, 1e-300) * 1e-3;
        if (decide(x)) {
            hi = x;
            lo = x / 2;
            while (decide(lo)) {
                hi = lo;
                lo /= 2;
                if (lo <= 1e-12 * diam) {
                    lo_certified = false;
                    break;
                }
            }
        } else {
            lo = x;
            hi = 2 * x;
            while (!decide(hi)) {
                lo = hi;
                hi *= 2;
            }
        }
    }
    while (hi > lo * (1 + p.eps)) {
        double mid = std::sqrt(lo * hi);
        if (decide(mid))
            hi = mid;
        else
            lo = mid;
    }
    res.upper = res.ratio_bound * hi;
    res.lower = lo_certified ? lo : 0.0;
    res.value = res.upper;
    return res;
}

}  // namespace frechet
