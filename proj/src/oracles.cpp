#include "frechet/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>

namespace frechet::oracle {

namespace {

double sq(double x) { return x * x; }

double gap(const double* p, const double* q, int dim)
{
    double s = 0;
    for (int k = 0; k < dim; ++k)
        s += sq(p[k] - q[k]);
    return std::sqrt(s);
}

double diameter(const Curve& a, const Curve& b)
{
    const int d = a.dim();
    double s = 0;
    for (int k = 0; k < d; ++k) {
        double lo = INFINITY, hi = -INFINITY;
        for (const Curve* c : {&a, &b})
            for (int i = 0; i < c->size(); ++i) {
                lo = std::min(lo, c->pt(i)[k]);
                hi = std::max(hi, c->pt(i)[k]);
            }
        s += sq(hi - lo);
    }
    return std::sqrt(s);
}

Interval start_from(double from, const Interval& F)
{
    if (F.empty)
        return {};
    double lo = std::max(from, F.lo);
    if (lo > F.hi)
        return {};
    return Interval::make(lo, F.hi);
}

// reachable part of a boundary line starting at a corner, fed by corner reachability and by sources
IntervalArray boundary_line(const std::vector<Interval>& free, bool corner, const IntervalArray& src)
{
    IntervalArray out(free.size());
    bool open = corner;
    for (size_t e = 0; e < free.size(); ++e) {
        const Interval& F = free[e];
        double best = INFINITY;
        if (open && !F.empty && F.lo == 0.0)
            best = 0.0;
        const Interval& s = src[e];
        if (!s.empty && !F.empty && std::max(s.lo, F.lo) <= std::min(s.hi, F.hi))
            best = std::min(best, std::max(s.lo, F.lo));
        out[e] = std::isfinite(best) ? start_from(best, F) : Interval{};
        open = !out[e].empty && out[e].hi >= 1.0;
    }
    return out;
}

double point_to_segment(const double* p0, const double* p1, const double* c, int dim)
{
    double dd = 0, dc = 0;
    for (int k = 0; k < dim; ++k) {
        dd += sq(p1[k] - p0[k]);
        dc += (c[k] - p0[k]) * (p1[k] - p0[k]);
    }
    double t = dd > 0 ? std::clamp(dc / dd, 0.0, 1.0) : 0.0;
    double s = 0;
    for (int k = 0; k < dim; ++k)
        s += sq(p0[k] + t * (p1[k] - p0[k]) - c[k]);
    return std::sqrt(s);
}

Curve pick(const Curve& c, int lo, int hi)
{
    std::vector<double> xs;
    for (int v = lo; v <= hi; ++v)
        xs.insert(xs.end(), c.pt(v), c.pt(v) + c.dim());
    return Curve::raw(c.dim(), std::move(xs));
}

Curve pick(const Curve& c, const std::vector<int>& idx)
{
    std::vector<double> xs;
    for (int v : idx)
        xs.insert(xs.end(), c.pt(v), c.pt(v) + c.dim());
    return Curve::raw(c.dim(), std::move(xs));
}

// all subsets of {1..n-2} of size s, endpoints added, in lexicographic order
bool any_subsequence(int n, int s, const std::function<bool(const std::vector<int>&)>& ok)
{
    std::vector<int> comb(static_cast<size_t>(s));
    for (int k = 0; k < s; ++k)
        comb[static_cast<size_t>(k)] = k + 1;
    while (true) {
        std::vector<int> idx{0};
        idx.insert(idx.end(), comb.begin(), comb.end());
        idx.push_back(n - 1);
        if (ok(idx))
            return true;
        int k = s - 1;
        while (k >= 0 && comb[static_cast<size_t>(k)] == n - 2 - (s - 1 - k))
            --k;
        if (k < 0)
            return false;
        ++comb[static_cast<size_t>(k)];
        for (int q = k + 1; q < s; ++q)
            comb[static_cast<size_t>(q)] = comb[static_cast<size_t>(q) - 1] + 1;
    }
}

}  // namespace

Interval free_interval(const double* p0, const double* p1, const double* c, double r, int dim)
{
    double dd = 0, proj = 0, cc = 0;
    for (int k = 0; k < dim; ++k) {
        double u = p1[k] - p0[k];
        double w = c[k] - p0[k];
        dd += u * u;
        proj += u * w;
        cc += w * w;
    }
    if (dd == 0)
        return cc <= r * r ? Interval::make(0.0, 1.0) : Interval{};
    double tc = proj / dd;
    double line2 = std::max(0.0, cc - proj * proj / dd);
    if (line2 > r * r)
        return {};
    double half = std::sqrt((r * r - line2) / dd);
    double lo = std::max(0.0, tc - half);
    double hi = std::min(1.0, tc + half);
    // endpoints inside the ball are exact
    double c0 = 0, c1 = 0;
    for (int k = 0; k < dim; ++k) {
        c0 += sq(p0[k] - c[k]);
        c1 += sq(p1[k] - c[k]);
    }
    if (c0 <= r * r)
        lo = 0.0;
    if (c1 <= r * r)
        hi = 1.0;
    if (lo > hi)
        return {};
    return Interval::make(lo, hi);
}

Wave brute_wave(const Curve& tau, const Curve& sigma, double r, const IntervalArray& S, const IntervalArray& S2)
{
    const int n = tau.size(), m = sigma.size(), d = tau.dim();
    if (static_cast<int>(S.size()) != n - 1 || static_cast<int>(S2.size()) != m - 1)
        throw Error(ErrorCode::Input, "oracle: source sizes");
    auto free_on_sigma = [&](int i, int j) { return free_interval(sigma.pt(j), sigma.pt(j + 1), tau.pt(i), r, d); };
    auto free_on_tau = [&](int j, int i) { return free_interval(tau.pt(i), tau.pt(i + 1), sigma.pt(j), r, d); };
    const bool origin_free = gap(tau.pt(0), sigma.pt(0), d) <= r;
    const bool origin_src = (n > 1 && S[0].contains(0.0)) || (m > 1 && S2[0].contains(0.0));

    Wave w;
    w.cols.assign(static_cast<size_t>(n), IntervalArray(static_cast<size_t>(m - 1)));
    w.rows.assign(static_cast<size_t>(m), IntervalArray(static_cast<size_t>(n - 1)));
    std::vector<Interval> fs(static_cast<size_t>(m - 1)), ft(static_cast<size_t>(n - 1));
    for (int j = 0; j < m - 1; ++j)
        fs[static_cast<size_t>(j)] = free_on_sigma(0, j);
    for (int i = 0; i < n - 1; ++i)
        ft[static_cast<size_t>(i)] = free_on_tau(0, i);
    w.cols[0] = boundary_line(fs, origin_free && origin_src, S2);
    w.rows[0] = boundary_line(ft, origin_free && origin_src, S);

    for (int j = 0; j < m - 1; ++j)
        for (int i = 0; i < n - 1; ++i) {
            const Interval left = w.cols[static_cast<size_t>(i)][static_cast<size_t>(j)];
            const Interval bottom = w.rows[static_cast<size_t>(j)][static_cast<size_t>(i)];
            Interval right, top;
            if (!bottom.empty)
                right = free_on_sigma(i + 1, j);
            else if (!left.empty)
                right = start_from(left.lo, free_on_sigma(i + 1, j));
            if (!left.empty)
                top = free_on_tau(j + 1, i);
            else if (!bottom.empty)
                top = start_from(bottom.lo, free_on_tau(j + 1, i));
            w.cols[static_cast<size_t>(i) + 1][static_cast<size_t>(j)] = right;
            w.rows[static_cast<size_t>(j) + 1][static_cast<size_t>(i)] = top;
        }
    return w;
}

bool brute_decide_raw(const Curve& tau, const Curve& sigma, double r)
{
    const int n = tau.size(), m = sigma.size(), d = tau.dim();
    if (n == 1 || m == 1) {
        const Curve& pt = n == 1 ? tau : sigma;
        const Curve& other = n == 1 ? sigma : tau;
        for (int v = 0; v < other.size(); ++v)
            if (gap(pt.pt(0), other.pt(v), d) > r)
                return false;
        return true;
    }
    if (gap(tau.pt(0), sigma.pt(0), d) > r || gap(tau.pt(n - 1), sigma.pt(m - 1), d) > r)
        return false;
    IntervalArray S(static_cast<size_t>(n - 1)), S2(static_cast<size_t>(m - 1));
    S[0] = Interval::make(0, 0);
    S2[0] = Interval::make(0, 0);
    Wave w = brute_wave(tau, sigma, r, S, S2);
    const Interval& last = w.rows.back().back();
    return !last.empty && last.hi >= 1.0;
}

bool brute_decide(const Curve& tau, const Curve& sigma, double delta)
{
    return brute_decide_raw(tau, sigma, delta + 1e-9 * diameter(tau, sigma));
}

double brute_distance(const Curve& tau, const Curve& sigma, double rel_tol)
{
    double lo = 0, hi = diameter(tau, sigma) + 1.0;
    while (hi - lo > rel_tol * hi) {
        double mid = 0.5 * (lo + hi);
        (brute_decide(tau, sigma, mid) ? hi : lo) = mid;
    }
    return hi;
}

std::pair<IntervalArray, IntervalArray> brute_block_reach(const Curve& tau, const Curve& sigma, double r, int a0,
                                                          int a1, int b0, int b1)
{
    const int n = tau.size(), m = sigma.size();
    IntervalArray S(static_cast<size_t>(n - 1)), S2(static_cast<size_t>(m - 1));
    S[0] = Interval::make(0, 0);
    S2[0] = Interval::make(0, 0);
    Wave w = brute_wave(tau, sigma, r, S, S2);
    const auto& col = w.cols[static_cast<size_t>(a1)];
    const auto& row = w.rows[static_cast<size_t>(b1)];
    return {IntervalArray(col.begin() + b0, col.begin() + b1), IntervalArray(row.begin() + a0, row.begin() + a1)};
}

IntervalArray brute_cover(const Curve& block, double qx, double qy, double r, const IntervalArray& S)
{
    Curve sub = subcurve_param(block, qx, qy);
    Wave w = brute_wave(block, sub, r, S, IntervalArray(static_cast<size_t>(sub.edges())));
    return w.rows.back();
}

std::vector<char> brute_marked_edges(const Curve& block, const Curve& sigma_prime, double r)
{
    const int E = block.edges();
    std::vector<char> marked(static_cast<size_t>(E), 0);
    for (int i = 0; i < E; ++i) {
        IntervalArray S(static_cast<size_t>(E));
        S[static_cast<size_t>(i)] = free_interval(block.pt(i), block.pt(i + 1), sigma_prime.pt(0), r, block.dim());
        if (S[static_cast<size_t>(i)].empty)
            continue;
        Wave w = brute_wave(block, sigma_prime, r, S, IntervalArray(static_cast<size_t>(sigma_prime.edges())));
        int last = -1;
        for (int e = 0; e < E; ++e)
            if (!w.rows.back()[static_cast<size_t>(e)].empty)
                last = e;
        for (int e = i; e <= last; ++e)
            marked[static_cast<size_t>(e)] = 1;
    }
    return marked;
}

// ---------------------------------------------------------------------------

double brute_discrete_distance(const Curve& tau, const Curve& sigma)
{
    const int n = tau.size(), m = sigma.size(), d = tau.dim();
    std::map<std::pair<int, int>, double> memo;
    std::function<double(int, int)> c = [&](int i, int j) -> double {
        auto key = std::make_pair(i, j);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        double here = gap(tau.pt(i), sigma.pt(j), d);
        double v;
        if (i == 0 && j == 0)
            v = here;
        else if (i == 0)
            v = std::max(c(0, j - 1), here);
        else if (j == 0)
            v = std::max(c(i - 1, 0), here);
        else
            v = std::max(std::min({c(i - 1, j), c(i - 1, j - 1), c(i, j - 1)}), here);
        memo[key] = v;
        return v;
    };
    return c(n - 1, m - 1);
}

std::vector<std::vector<char>> brute_dis_reach(const Curve& tau, const Curve& sigma, double r,
                                               const std::vector<char>& S, const std::vector<char>& S2)
{
    const int n = tau.size(), m = sigma.size(), d = tau.dim();
    std::vector<std::vector<char>> seen(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(m), 0));
    std::deque<std::pair<int, int>> q;
    auto push = [&](int i, int j) {
        if (i >= n || j >= m || seen[static_cast<size_t>(i)][static_cast<size_t>(j)])
            return;
        if (gap(tau.pt(i), sigma.pt(j), d) > r)
            return;
        seen[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        q.emplace_back(i, j);
    };
    for (int i = 0; i < n; ++i)
        if (S[static_cast<size_t>(i)])
            push(i, 0);
    for (int j = 0; j < m; ++j)
        if (S2[static_cast<size_t>(j)])
            push(0, j);
    while (!q.empty()) {
        auto [i, j] = q.front();
        q.pop_front();
        push(i + 1, j);
        push(i, j + 1);
        push(i + 1, j + 1);
    }
    return seen;
}

std::vector<char> brute_dis_cover(const Curve& block, int i1, int i2, double r, const std::vector<char>& S)
{
    Curve sub = pick(block, i1, i2);
    auto R = brute_dis_reach(block, sub, r, S, std::vector<char>(static_cast<size_t>(sub.size()), 0));
    std::vector<char> out(static_cast<size_t>(block.size()));
    for (int i = 0; i < block.size(); ++i)
        out[static_cast<size_t>(i)] = R[static_cast<size_t>(i)].back();
    return out;
}

std::vector<char> brute_marked_vertices(const Curve& block, const Curve& sigma_prime, double r)
{
    const int n = block.size();
    std::vector<char> marked(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::vector<char> S(static_cast<size_t>(n), 0);
        S[static_cast<size_t>(i)] = 1;
        auto R = brute_dis_reach(block, sigma_prime, r, S, std::vector<char>(static_cast<size_t>(sigma_prime.size()), 0));
        int last = -1;
        for (int y = 0; y < n; ++y)
            if (R[static_cast<size_t>(y)].back())
                last = y;
        for (int v = i; v <= last; ++v)
            marked[static_cast<size_t>(v)] = 1;
    }
    return marked;
}

std::pair<std::vector<char>, std::vector<char>> brute_dis_block_reach(const Curve& tau, const Curve& sigma, double r,
                                                                      int a0, int a1, int b0, int b1)
{
    std::vector<char> S(static_cast<size_t>(tau.size()), 0), S2(static_cast<size_t>(sigma.size()), 0);
    S[0] = 1;
    S2[0] = 1;
    auto R = brute_dis_reach(tau, sigma, r, S, S2);
    std::vector<char> v(R[static_cast<size_t>(a1)].begin() + b0, R[static_cast<size_t>(a1)].begin() + b1 + 1);
    std::vector<char> w;
    for (int i = a0; i <= a1; ++i)
        w.push_back(R[static_cast<size_t>(i)][static_cast<size_t>(b1)]);
    return {v, w};
}

// ---------------------------------------------------------------------------

int min_vertex_restricted(const Curve& tau, double r)
{
    const int n = tau.size();
    if (n <= 2)
        return n;
    if (n > 18)
        throw Error(ErrorCode::Input, "oracle: curve too long for exhaustive search");
    std::vector<std::vector<int>> ok(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    auto shortcut_ok = [&](int p, int q) {
        int& slot = ok[static_cast<size_t>(p)][static_cast<size_t>(q)];
        if (slot < 0)
            slot = q == p + 1 || brute_decide_raw(pick(tau, {p, q}), pick(tau, p, q), r);
        return slot == 1;
    };
    for (int s = 0; s <= n - 2; ++s) {
        bool found = any_subsequence(n, s, [&](const std::vector<int>& idx) {
            for (size_t k = 0; k + 1 < idx.size(); ++k)
                if (!shortcut_ok(idx[k], idx[k + 1]))
                    return false;
            return true;
        });
        if (found)
            return s + 2;
    }
    return n;
}

int min_discrete_subsequence(const Curve& tau, double r)
{
    const int n = tau.size();
    if (n == 1)
        return 1;
    if (n > 16)
        throw Error(ErrorCode::Input, "oracle: curve too long for exhaustive search");
    for (int s = 0; s <= n - 2; ++s)
        if (any_subsequence(n, s, [&](const std::vector<int>& idx) {
                return brute_discrete_distance(tau, pick(tau, idx)) <= r;
            }))
            return s + 2;
    return n;
}

std::optional<int> brute_min_simplification(const Curve& tau, double r, double spacing, int kmax)
{
    const int d = tau.dim();
    if (!(spacing > 0))
        throw Error(ErrorCode::Input, "oracle: spacing must be positive");
    std::vector<double> lo(static_cast<size_t>(d), INFINITY), hi(static_cast<size_t>(d), -INFINITY);
    for (int v = 0; v < tau.size(); ++v)
        for (int k = 0; k < d; ++k) {
            lo[static_cast<size_t>(k)] = std::min(lo[static_cast<size_t>(k)], tau.pt(v)[k] - r);
            hi[static_cast<size_t>(k)] = std::max(hi[static_cast<size_t>(k)], tau.pt(v)[k] + r);
        }
    std::vector<std::vector<double>> cand;
    std::vector<int> steps(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
        steps[static_cast<size_t>(k)] =
            static_cast<int>(std::floor((hi[static_cast<size_t>(k)] - lo[static_cast<size_t>(k)]) / spacing)) + 1;
    std::vector<int> at(static_cast<size_t>(d), 0);
    while (true) {
        std::vector<double> p(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k)
            p[static_cast<size_t>(k)] = lo[static_cast<size_t>(k)] + at[static_cast<size_t>(k)] * spacing;
        double best = INFINITY;
        for (int e = 0; e < std::max(tau.edges(), 1); ++e)
            best = std::min(best, tau.edges() ? point_to_segment(tau.pt(e), tau.pt(e + 1), p.data(), d)
                                              : gap(tau.pt(0), p.data(), d));
        if (best <= r)
            cand.push_back(p);
        int k = 0;
        while (k < d && ++at[static_cast<size_t>(k)] == steps[static_cast<size_t>(k)])
            at[static_cast<size_t>(k++)] = 0;
        if (k == d)
            break;
    }
    std::vector<int> first, last;
    for (int c = 0; c < static_cast<int>(cand.size()); ++c) {
        if (gap(cand[static_cast<size_t>(c)].data(), tau.pt(0), d) <= r)
            first.push_back(c);
        if (gap(cand[static_cast<size_t>(c)].data(), tau.pt(tau.size() - 1), d) <= r)
            last.push_back(c);
    }
    auto build = [&](const std::vector<int>& idx) {
        std::vector<double> xs;
        for (int c : idx)
            xs.insert(xs.end(), cand[static_cast<size_t>(c)].begin(), cand[static_cast<size_t>(c)].end());
        return Curve::raw(d, std::move(xs));
    };
    for (int c : first)
        if (brute_decide_raw(build({c}), tau, r))
            return 1;
    const double N = static_cast<double>(cand.size());
    for (int k = 2; k <= kmax; ++k) {
        if (static_cast<double>(first.size()) * static_cast<double>(last.size()) * std::pow(N, k - 2) > 5e6)
            return std::nullopt;
        std::vector<int> mid(static_cast<size_t>(k - 2), 0);
        for (int f : first)
            for (int l : last) {
                std::fill(mid.begin(), mid.end(), 0);
                while (true) {
                    std::vector<int> idx{f};
                    idx.insert(idx.end(), mid.begin(), mid.end());
                    idx.push_back(l);
                    if (brute_decide_raw(build(idx), tau, r))
                        return k;
                    int q = 0;
                    while (q < k - 2 && ++mid[static_cast<size_t>(q)] == static_cast<int>(N))
                        mid[static_cast<size_t>(q++)] = 0;
                    if (q == k - 2)
                        break;
                }
            }
    }
    return std::nullopt;
}

}  // namespace frechet::oracle
