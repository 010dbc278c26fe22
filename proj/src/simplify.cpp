#include "frechet/simplify.hpp"

#include "frechet/wavefront.hpp"

#include <algorithm>
#include <climits>

namespace frechet {

namespace {
constexpr int kInf = INT_MAX / 4;
}

Curve curve_from_indices(const Curve& c, const std::vector<int>& idx)
{
    std::vector<double> xs;
    xs.reserve(idx.size() * c.dim());
    for (int i : idx)
        xs.insert(xs.end(), c.pt(i), c.pt(i) + c.dim());
    return Curve::raw(c.dim(), std::move(xs));
}

ContinuousSimplifier::ContinuousSimplifier(const Curve& c, int lo, int hi, double radius)
    : lo_(lo), hi_(hi), w_(static_cast<size_t>(hi - lo + 1))
{
    if (lo < 0 || hi >= c.size() || lo > hi)
        throw Error(ErrorCode::Input, "bad simplifier range");
    feas_.assign(w_ * w_, 0);
    for (int p = lo; p <= hi; ++p)
        for (int q = p + 1; q <= hi; ++q) {
            Curve seg = c.slice(p, q);
            Curve shortcut = curve_from_indices(c, {p, q});
            feas_[idx(p, q)] = q == p + 1 || decide_exact_raw(shortcut, seg, radius);
        }
    cnt_.assign(w_ * w_, kInf);
    pred_.assign(w_ * w_, -1);
    for (int a = lo; a <= hi; ++a) {
        cnt_[idx(a, a)] = 1;
        for (int b = a + 1; b <= hi; ++b) {
            int best = kInf, arg = -1;
            for (int m = a; m < b; ++m) {
                if (!feas_[idx(m, b)] || cnt_[idx(a, m)] >= kInf)
                    continue;
                if (cnt_[idx(a, m)] + 1 < best) {
                    best = cnt_[idx(a, m)] + 1;
                    arg = m;
                }
            }
            cnt_[idx(a, b)] = best;
            pred_[idx(a, b)] = arg;
        }
    }
}

int ContinuousSimplifier::count(int a, int b) const
{
    if (a < lo_ || b > hi_ || a > b)
        throw Error(ErrorCode::Input, "bad simplification range");
    return cnt_[idx(a, b)];
}

std::vector<int> ContinuousSimplifier::kept(int a, int b) const
{
    count(a, b);
    std::vector<int> out;
    int cur = b;
    while (cur != a) {
        out.push_back(cur);
        cur = pred_[idx(a, cur)];
    }
    out.push_back(a);
    std::reverse(out.begin(), out.end());
    return out;
}

DiscreteSimplifier::DiscreteSimplifier(const Curve& c, int lo, int hi, double radius)
    : c_(c), lo_(lo), hi_(hi), radius_(radius), tables_(static_cast<size_t>(hi - lo + 1))
{
    if (lo < 0 || hi >= c.size() || lo > hi)
        throw Error(ErrorCode::Input, "bad simplifier range");
}

const DiscreteSimplifier::Table& DiscreteSimplifier::table(int a) const
{
    auto& slot = tables_[static_cast<size_t>(a - lo_)];
    if (slot)
        return *slot;
    const int L = hi_ - a + 1;
    const int d = c_.dim();
    Table t;
    t.f.assign(static_cast<size_t>(L) * L, kInf);
    t.pred.assign(static_cast<size_t>(L) * L, -1);
    auto at = [L](int i, int p) { return static_cast<size_t>(i) * L + static_cast<size_t>(p); };
    auto close = [&](int i, int p) { return dist(c_.pt(a + i), c_.pt(a + p), d) <= radius_; };
    t.f[at(0, 0)] = 1;
    auto relax = [&](int i, int p, int val, int from) {
        if (val < t.f[at(i, p)]) {
            t.f[at(i, p)] = val;
            t.pred[at(i, p)] = from;
        }
    };
    for (int i = 0; i < L; ++i)
        for (int p = 0; p < L; ++p) {
            int f = t.f[at(i, p)];
            if (f >= kInf)
                continue;
            int self = static_cast<int>(at(i, p));
            if (i + 1 < L && close(i + 1, p))
                relax(i + 1, p, f, self);
            for (int q = p + 1; q < L; ++q) {
                if (close(i, q))
                    relax(i, q, f + 1, self);
                if (i + 1 < L && close(i + 1, q))
                    relax(i + 1, q, f + 1, self);
            }
        }
    slot = std::move(t);
    return *slot;
}

int DiscreteSimplifier::count(int a, int b) const
{
    if (a < lo_ || b > hi_ || a > b)
        throw Error(ErrorCode::Input, "bad simplification range");
    const Table& t = table(a);
    const int L = hi_ - a + 1;
    return t.f[static_cast<size_t>(b - a) * L + static_cast<size_t>(b - a)];
}

std::vector<int> DiscreteSimplifier::kept(int a, int b) const
{
    if (count(a, b) >= kInf)
        return {};
    const Table& t = table(a);
    const int L = hi_ - a + 1;
    std::vector<int> out;
    int state = (b - a) * L + (b - a);
    int last_p = -1;
    while (state >= 0) {
        int p = state % L;
        if (p != last_p)
            out.push_back(a + p);
        last_p = p;
        state = t.pred[static_cast<size_t>(state)];
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<Simplification> simplify_continuous(const Curve& tau, double delta, int budget, double c_simp)
{
    if (delta < 0 || budget < 2)
        throw Error(ErrorCode::Input, "simplification needs delta >= 0 and budget >= 2");
    if (tau.size() == 1)
        return Simplification{tau, {0}, 0.0, 1};
    double radius = c_simp * delta + tolerance_eta(tau, tau);
    ContinuousSimplifier s(tau, 0, tau.size() - 1, radius);
    int k = s.count(0, tau.size() - 1);
    if (k > budget)
        return std::nullopt;
    Simplification out;
    out.kept = s.kept(0, tau.size() - 1);
    out.simplified = curve_from_indices(tau, out.kept);
    out.error_bound = c_simp * delta;
    out.budget_used = k;
    return out;
}

std::optional<Simplification> simplify_discrete(const Curve& tau, double delta, int budget, double c_simp)
{
    if (delta < 0 || budget < 2)
        throw Error(ErrorCode::Input, "simplification needs delta >= 0 and budget >= 2");
    if (tau.size() == 1)
        return Simplification{tau, {0}, 0.0, 1};
    DiscreteSimplifier s(tau, 0, tau.size() - 1, c_simp * delta);
    int k = s.count(0, tau.size() - 1);
    if (k > budget)
        return std::nullopt;
    Simplification out;
    out.kept = s.kept(0, tau.size() - 1);
    out.simplified = curve_from_indices(tau, out.kept);
    out.error_bound = c_simp * delta;
    out.budget_used = k;
    return out;
}

}  // namespace frechet
