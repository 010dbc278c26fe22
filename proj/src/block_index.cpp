#include "frechet/approx.hpp"

#include "frechet/wavefront.hpp"

#include <algorithm>
#include <cmath>

namespace frechet {

Params resolve_params(Params p, int m)
{
    if (!(p.eps > 0 && p.eps < 1))
        throw Error(ErrorCode::Input, "eps must lie in (0,1)");
    if (p.eps_inner <= 0)
        p.eps_inner = p.eps / 10.0;
    const double mm = std::max(m, 2);
    if (p.mu1 <= 0)
        p.mu1 = std::max(2, static_cast<int>(std::lround(std::pow(mm, 0.24))));
    if (p.mu2 <= 0)
        p.mu2 = std::max(2, static_cast<int>(std::lround(std::pow(mm, 0.02))));
    if (p.mu3 <= 0)
        p.mu3 = std::max(1, static_cast<int>(std::lround(std::pow(mm, 0.01))));
    if (p.omega <= 0)
        p.omega = std::max(1, static_cast<int>(std::lround(std::pow(mm, 0.12))));
    if (!(p.mu3 <= p.mu2 && p.mu2 <= p.mu1))
        throw Error(ErrorCode::Input, "need mu3 <= mu2 <= mu1");
    if (!(p.sample_c > 0))
        throw Error(ErrorCode::Input, "sample constant must be positive");
    if (!(p.c_simp >= 1))
        throw Error(ErrorCode::Input, "simplification factor must be at least 1");
    return p;
}

Thresholds audited_thresholds(const Params& p)
{
    const double s = p.c_simp;
    const double ei = p.eps_inner > 0 ? p.eps_inner : p.eps / 10.0;
    Thresholds t;
    t.simp = s;
    t.wave = 1 + s;
    t.surrogate = 1 + 2 * s;
    t.cover = 2 + 2 * s;
    // the I4 chain dominates I1..I3 (each at most 1+2s)
    t.bound = (1 + ei) * t.cover + t.surrogate;
    return t;
}

Thresholds audited_thresholds_discrete(const Params& p)
{
    Thresholds t = audited_thresholds(p);
    t.bound = t.cover + t.surrogate;
    return t;
}

double audited_ratio_bound(const Params& p) { return audited_thresholds(p).bound; }
double audited_ratio_bound_discrete(const Params& p) { return audited_thresholds_discrete(p).bound; }

Curve pad_by_splitting(const Curve& c, int mu)
{
    int e = c.edges();
    int extra = (mu - e % mu) % mu;
    if (extra == 0 || e == 0)
        return c;
    const int d = c.dim();
    std::vector<double> xs(c.data().begin(), c.data().end() - d);
    const double* p = c.pt(e - 1);
    const double* q = c.pt(e);
    const int parts = extra + 1;
    for (int k = 1; k <= parts; ++k) {
        double t = static_cast<double>(k) / parts;
        for (int a = 0; a < d; ++a)
            xs.push_back(k == parts ? q[a] : p[a] + t * (q[a] - p[a]));
    }
    return Curve::raw(d, std::move(xs));
}

Curve pad_by_repeating(const Curve& c, int mu)
{
    int e = c.edges();
    int extra = (mu - e % mu) % mu;
    if (extra == 0 || e == 0)
        return c;
    std::vector<double> xs = c.data();
    for (int k = 0; k < extra; ++k)
        xs.insert(xs.end(), c.pt(c.size() - 1), c.pt(c.size() - 1) + c.dim());
    return Curve::raw(c.dim(), std::move(xs));
}

Partition partition(const Curve& tau, const Curve& sigma, const Params& p, bool discrete)
{
    if (tau.size() < 2 || sigma.size() < 2)
        throw Error(ErrorCode::Input, "curves need at least two vertices");
    if (p.mu1 < 1 || p.mu2 < 1 || p.mu3 < 1)
        throw Error(ErrorCode::Input, "block sizes must be positive");
    Partition P;
    P.tau = discrete ? pad_by_repeating(tau, p.mu1) : pad_by_splitting(tau, p.mu1);
    P.sigma = discrete ? pad_by_repeating(sigma, p.mu2) : pad_by_splitting(sigma, p.mu2);
    P.tau_pad = P.tau.size() - tau.size();
    P.sigma_pad = P.sigma.size() - sigma.size();
    P.mu3 = p.mu3;
    for (int v = 0; v <= P.tau.edges(); v += p.mu1)
        P.a.push_back(v);
    for (int v = 0; v <= P.sigma.edges(); v += p.mu2)
        P.b.push_back(v);
    return P;
}

std::vector<int> Partition::sub_block_starts(int l) const
{
    std::vector<int> out;
    for (int r = 1;; ++r) {
        int v = b[l] + (r - 1) * mu3 + 1;
        if (v > b[l + 1])
            break;
        out.push_back(v);
    }
    return out;
}

std::vector<int> Partition::sub_block_bounds(int l) const
{
    std::vector<int> out{b[l]};
    for (int v : sub_block_starts(l))
        if (v > b[l] + 1 && v < b[l + 1])
            out.push_back(v);
    out.push_back(b[l + 1]);
    return out;
}

// ---------------------------------------------------------------------------

BlockIndex::BlockIndex(Curve block, double delta, const Params& p, int budget)
    : block_(std::move(block)), delta_(delta), params_(p), th_(audited_thresholds(p)), budget_(budget)
{
    PhaseScope phase(Phase::Preprocess);
    const int last = block_.size() - 1;
    if (last < 1)
        throw Error(ErrorCode::Input, "block needs an edge");
    simp_radius_ = th_.simp * delta_;
    simp_ = std::make_unique<ContinuousSimplifier>(block_, 0, last, simp_radius_);

    if (simp_->count(0, last) <= budget_)
        zeta_ = curve_from_indices(block_, simp_->kept(0, last));

    // prefix: furthest end within budget, then one exact edge more
    i_pre_ = 1;
    for (int i = last; i >= 1; --i)
        if (simp_->count(0, i) <= budget_) {
            i_pre_ = i;
            break;
        }
    {
        std::vector<int> kept = simp_->kept(0, i_pre_);
        int to = std::min(i_pre_ + 1, last);
        if (to > i_pre_)
            kept.push_back(to);
        pre_ = make_piece(0, to, kept);
    }
    // suffix: earliest start within budget, then one exact edge before it
    i_suf_ = last - 1;
    for (int i = 0; i < last; ++i)
        if (simp_->count(i, last) <= budget_) {
            i_suf_ = i;
            break;
        }
    {
        std::vector<int> kept = simp_->kept(i_suf_, last);
        int from = std::max(i_suf_ - 1, 0);
        if (from < i_suf_)
            kept.insert(kept.begin(), from);
        suf_ = make_piece(from, last, kept);
    }

    bar_.resize(static_cast<size_t>(last + 1));
    tilde_.resize(static_cast<size_t>(last + 1));
    for (int i = 0; i <= last; ++i) {
        int b = i;
        for (int c = 0; c <= i; ++c)
            if (simp_->count(c, i) <= budget_) {
                b = c;
                break;
            }
        std::vector<int> kept = simp_->kept(b, i);
        int from = std::max(b - 1, 0);
        if (from < b)
            kept.insert(kept.begin(), from);
        bar_[static_cast<size_t>(i)] = make_piece(from, i, kept);

        int e = i;
        for (int c = last; c >= i; --c)
            if (simp_->count(i, c) <= budget_) {
                e = c;
                break;
            }
        kept = simp_->kept(i, e);
        int to = std::min(e + 1, last);
        if (to > e)
            kept.push_back(to);
        tilde_[static_cast<size_t>(i)] = make_piece(i, to, kept);
    }
    cover_ = std::make_unique<CoverIndex>(block_, th_.cover * delta_, params_.eps_inner);
}

SimpPiece BlockIndex::make_piece(int from, int to, const std::vector<int>& kept) const
{
    SimpPiece piece;
    piece.from = from;
    piece.to = to;
    piece.curve = curve_from_indices(block_, kept);
    Curve slice = block_.slice(from, to);
    // the concatenated shortcuts pass at simp_radius_; allow for rounding in the joint test
    double r = simp_radius_;
    double slack = 1e-12 * (1.0 + r) + 1e-9 * bbox_diameter(slice, slice);
    for (int attempt = 0;; ++attempt) {
        try {
            piece.M = build_matching_raw(slice, piece.curve, r);
            break;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Precondition || attempt == 3)
                throw Error(ErrorCode::Internal, "simplified piece failed its own distance check");
            r += slack;
            slack *= 10;
        }
    }
    return piece;
}

std::optional<std::pair<double, double>> BlockIndex::find_surrogate(const Curve& sigma_prime, int e) const
{
    if (e < 0 || e >= edges())
        throw Error(ErrorCode::Input, "edge index out of range");
    const SimpPiece& B = bar_[static_cast<size_t>(e)];
    const SimpPiece& T = tilde_[static_cast<size_t>(e + 1)];
    const int d = block_.dim();
    std::vector<double> xs(B.curve.data());
    xs.insert(xs.end(), T.curve.data().begin(), T.curve.data().end());
    const Curve zp = Curve::raw(d, std::move(xs));
    const int nb = B.curve.size();

    const double r = th_.wave * delta_;
    const double* first = sigma_prime.pt(0);
    const double* lastv = sigma_prime.pt(sigma_prime.size() - 1);
    std::vector<double> X, Y;
    for (int q = 0; q < zp.edges(); ++q) {
        Interval a = clip_segment_to_ball(zp.pt(q), zp.pt(q + 1), first, r, d);
        if (!a.empty)
            X.push_back(q + a.lo);
        Interval b = clip_segment_to_ball(zp.pt(q), zp.pt(q + 1), lastv, r, d);
        if (!b.empty)
            Y.push_back(q + b.hi);
    }
    if (X.empty() || Y.empty())
        return std::nullopt;
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    std::sort(Y.begin(), Y.end(), std::greater<>());
    Y.erase(std::unique(Y.begin(), Y.end()), Y.end());

    // candidates sit on the ball boundary, so the endpoint test needs rounding slack
    const double rt = r * (1.0 + 1e-12);
    Counters* ctr = current_counters();
    for (double x : X)
        for (double y : Y) {
            if (y < x)
                break;
            if (ctr)
                ++ctr->surrogate_tests;
            if (!decide_exact_raw(subcurve_param(zp, x, y), sigma_prime, rt))
                continue;
            auto back = [&](double z, bool low) {
                if (z <= nb - 1) {
                    auto rg = B.M.range_back(z);
                    return B.from + (low ? rg.first : rg.second);
                }
                if (z >= nb) {
                    auto rg = T.M.range_back(z - nb);
                    return T.from + (low ? rg.first : rg.second);
                }
                return e + (z - (nb - 1));
            };
            double a = back(x, true);
            double b = back(y, false);
            return std::make_pair(std::min(a, b), b);
        }
    return std::nullopt;
}

}  // namespace frechet
