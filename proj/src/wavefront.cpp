#include "frechet/wavefront.hpp"

#include "frechet/counters.hpp"

#include <algorithm>

namespace frechet {

namespace {

// start of the part of I inside F, propagated to the end of F
inline Interval from_source(const Interval& I, const Interval& F)
{
    if (I.empty || F.empty)
        return Interval::Empty();
    double lo = std::max(I.lo, F.lo);
    if (lo > std::min(I.hi, F.hi))
        return Interval::Empty();
    return Interval::make(lo, F.hi);
}

inline Interval from_start(double start, const Interval& F)
{
    if (F.empty)
        return Interval::Empty();
    double lo = std::max(start, F.lo);
    if (lo > F.hi)
        return Interval::Empty();
    return Interval::make(lo, F.hi);
}

struct Sink {
    std::vector<IntervalArray>* cols = nullptr;  // per tau vertex
    std::vector<IntervalArray>* rows = nullptr;  // per sigma vertex
};

void run(const Curve& tau, const Curve& sigma, double r, const IntervalArray& S, const IntervalArray& S2,
         IntervalArray& col, IntervalArray& row, Sink sink)
{
    const int n = tau.size();
    const int m = sigma.size();
    const int d = tau.dim();
    if (tau.dim() != sigma.dim())
        throw Error(ErrorCode::Input, "dimension mismatch");
    if (static_cast<int>(S.size()) != n - 1 || static_cast<int>(S2.size()) != m - 1)
        throw Error(ErrorCode::Input, "source array length mismatch");

    auto ball_on_sigma = [&](int i, int j) { return clip_segment_to_ball(sigma.pt(j), sigma.pt(j + 1), tau.pt(i), r, d); };
    auto ball_on_tau = [&](int j, int i) { return clip_segment_to_ball(tau.pt(i), tau.pt(i + 1), sigma.pt(j), r, d); };

    const bool corner = dist2(tau.pt(0), sigma.pt(0), d) <= r * r;

    // W^{v_1} over sigma
    col.assign(static_cast<size_t>(m - 1), Interval::Empty());
    for (int j = 0; j < m - 1; ++j) {
        Interval F = ball_on_sigma(0, j);
        bool full = j == 0 ? (corner && n > 1 && !S[0].empty && S[0].lo == 0.0)
                           : (!col[j - 1].empty && col[j - 1].hi >= 1.0);
        col[j] = full ? F : from_source(S2[j], F);
    }
    // W^{w_1} over tau
    row.assign(static_cast<size_t>(n - 1), Interval::Empty());
    for (int i = 0; i < n - 1; ++i) {
        Interval F = ball_on_tau(0, i);
        bool full = i == 0 ? (corner && m > 1 && !S2[0].empty && S2[0].lo == 0.0)
                           : (!row[i - 1].empty && row[i - 1].hi >= 1.0);
        row[i] = full ? F : from_source(S[i], F);
    }
    count_cells(static_cast<std::uint64_t>(n - 1) + static_cast<std::uint64_t>(m - 1));

    if (sink.cols) {
        sink.cols->assign(static_cast<size_t>(n), IntervalArray());
        (*sink.cols)[0] = col;
    }
    if (sink.rows) {
        sink.rows->assign(static_cast<size_t>(m), IntervalArray(static_cast<size_t>(n - 1)));
        (*sink.rows)[0] = row;
    }

    // i over tau edges (outer), j over sigma edges (inner).
    // col holds W^{v_i} and becomes W^{v_{i+1}}; row[i] holds W^{w_j}_{v_i} and becomes W^{w_m}_{v_i}.
    for (int i = 0; i < n - 1; ++i) {
        Interval bottom = row[i];
        for (int j = 0; j < m - 1; ++j) {
            const Interval L = col[j];
            const Interval B = bottom;
            Interval right, top;
            if (!(L.empty && B.empty)) {
                Interval Fr = ball_on_sigma(i + 1, j);
                right = !B.empty ? Fr : from_start(L.lo, Fr);
                Interval Ft = ball_on_tau(j + 1, i);
                top = !L.empty ? Ft : from_start(B.lo, Ft);
            }
            col[j] = right;
            bottom = top;
            if (sink.rows)
                (*sink.rows)[j + 1][i] = top;
        }
        row[i] = bottom;
        if (sink.cols)
            (*sink.cols)[i + 1] = col;
    }
    count_cells(static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(m - 1));
}

}  // namespace

WaveFrontOutput wavefront(const Curve& tau, const Curve& sigma, double delta, const IntervalArray& S,
                          const IntervalArray& S2)
{
    if (delta < 0)
        throw Error(ErrorCode::Input, "negative delta");
    WaveFrontOutput out;
    IntervalArray col, row;
    run(tau, sigma, delta, S, S2, col, row, Sink{&out.per_tau_vertex, &out.per_sigma_vertex});
    return out;
}

WaveFrontEnds wavefront_ends(const Curve& tau, const Curve& sigma, double delta, const IntervalArray& S,
                             const IntervalArray& S2)
{
    if (delta < 0)
        throw Error(ErrorCode::Input, "negative delta");
    WaveFrontEnds out;
    run(tau, sigma, delta, S, S2, out.last_tau, out.last_sigma, Sink{});
    return out;
}

IntervalArray first_vertex_source(int edges)
{
    IntervalArray a = empty_array(edges);
    if (edges > 0)
        a[0] = Interval::make(0.0, 0.0);
    return a;
}

bool decide_exact_raw(const Curve& tau, const Curve& sigma, double radius)
{
    const int n = tau.size();
    const int m = sigma.size();
    if (n == 0 || m == 0)
        throw Error(ErrorCode::Input, "empty curve");
    if (n == 1 && m == 1)
        return dist2(tau.pt(0), sigma.pt(0), tau.dim()) <= radius * radius;
    if (dist2(tau.pt(0), sigma.pt(0), tau.dim()) > radius * radius ||
        dist2(tau.pt(n - 1), sigma.pt(m - 1), tau.dim()) > radius * radius)
        return false;
    WaveFrontEnds w =
        wavefront_ends(tau, sigma, radius, first_vertex_source(n - 1), first_vertex_source(m - 1));
    if (m >= 2) {
        const Interval& last = w.last_tau.back();
        return !last.empty && last.hi >= 1.0;
    }
    const Interval& last = w.last_sigma.back();
    return !last.empty && last.hi >= 1.0;
}

bool decide_exact(const Curve& tau, const Curve& sigma, double delta)
{
    if (delta < 0)
        throw Error(ErrorCode::Input, "negative delta");
    return decide_exact_raw(tau, sigma, delta + tolerance_eta(tau, sigma));
}

double compute_exact(const Curve& tau, const Curve& sigma, double rel_tol)
{
    if (!(rel_tol > 0))
        throw Error(ErrorCode::Input, "rel_tol must be positive");
    const int d = tau.dim();
    double lo = std::max(dist(tau.pt(0), sigma.pt(0), d),
                         dist(tau.pt(tau.size() - 1), sigma.pt(sigma.size() - 1), d));
    if (decide_exact(tau, sigma, lo))
        return lo;
    double hi = lo + tau.length() + sigma.length();
    while (hi - lo > rel_tol * hi) {
        double mid = 0.5 * (lo + hi);
        if (decide_exact(tau, sigma, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace frechet
