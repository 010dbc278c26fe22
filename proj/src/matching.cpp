#include "frechet/matching.hpp"

#include "frechet/wavefront.hpp"

#include <algorithm>
#include <cmath>

namespace frechet {

namespace {

double interp(const std::vector<double>& X, const std::vector<double>& Y, size_t k, double x)
{
    double dx = X[k + 1] - X[k];
    if (dx <= 0)
        return Y[k];
    return Y[k] + (x - X[k]) / dx * (Y[k + 1] - Y[k]);
}

// smallest y paired with x along the chain
double lowest(const std::vector<double>& X, const std::vector<double>& Y, double x)
{
    if (X.empty())
        return 0.0;
    if (x <= X.front())
        return Y.front();
    if (x >= X.back()) {
        auto k = static_cast<size_t>(std::lower_bound(X.begin(), X.end(), X.back()) - X.begin());
        return Y[k];
    }
    auto k = static_cast<size_t>(std::lower_bound(X.begin(), X.end(), x) - X.begin());
    if (X[k] == x)
        return Y[k];
    return interp(X, Y, k - 1, x);
}

double highest(const std::vector<double>& X, const std::vector<double>& Y, double x)
{
    if (X.empty())
        return 0.0;
    if (x >= X.back())
        return Y.back();
    if (x <= X.front()) {
        auto k = static_cast<size_t>(std::upper_bound(X.begin(), X.end(), X.front()) - X.begin()) - 1;
        return Y[k];
    }
    auto k = static_cast<size_t>(std::upper_bound(X.begin(), X.end(), x) - X.begin()) - 1;
    if (X[k] == x)
        return Y[k];
    return interp(X, Y, k, x);
}

}  // namespace

Matching::Matching(std::vector<double> T, std::vector<double> S, double bound)
    : T_(std::move(T)), S_(std::move(S)), bound_(bound)
{
}

double Matching::forward(double t) const
{
    if (!T_.empty() && t >= T_.back())
        return S_.back();
    return lowest(T_, S_, t);
}

double Matching::backward(double s) const
{
    if (!S_.empty() && s >= S_.back())
        return T_.back();
    return lowest(S_, T_, s);
}

std::pair<double, double> Matching::range(double t) const { return {lowest(T_, S_, t), highest(T_, S_, t)}; }

std::pair<double, double> Matching::range_back(double s) const
{
    return {lowest(S_, T_, s), highest(S_, T_, s)};
}

CurvePoint Matching::tau_vertex_image(int i) const
{
    double s = forward(i);
    int e = static_cast<int>(std::floor(s));
    int last = std::max(static_cast<int>(std::ceil(sigma_end())) - 1, 0);
    e = std::clamp(e, 0, last);
    return {e, s - e};
}

CurvePoint Matching::sigma_vertex_image(int j) const
{
    double t = backward(j);
    int e = static_cast<int>(std::floor(t));
    int last = std::max(static_cast<int>(std::ceil(tau_end())) - 1, 0);
    e = std::clamp(e, 0, last);
    return {e, t - e};
}

Matching build_matching_raw(const Curve& tau, const Curve& sigma, double r)
{
    const int n = tau.size();
    const int m = sigma.size();
    auto fail = [&]() {
        Error e(ErrorCode::Precondition, "curves are not within the requested distance");
        e.witness = r;
        return e;
    };
    if (!decide_exact_raw(tau, sigma, r))
        throw fail();
    std::vector<double> T, S;
    if (n == 1 || m == 1) {
        T = {0.0, static_cast<double>(n - 1)};
        S = {0.0, static_cast<double>(m - 1)};
        return Matching(T, S, r);
    }
    WaveFrontOutput W =
        wavefront(tau, sigma, r, first_vertex_source(n - 1), first_vertex_source(m - 1));
    const auto& cols = W.per_tau_vertex;
    const auto& rows = W.per_sigma_vertex;

    // Right: point (v_i, j + t) on the right side of cell (i-1, j).
    // Top: point (i + t, w_j) on the top side of cell (i, j-1).
    enum Kind { Right, Top };
    Kind kind = Right;
    int i = n - 1, j = m - 2;
    double t = 1.0;
    T.push_back(n - 1);
    S.push_back(m - 1);
    while (true) {
        if (kind == Right) {
            if (i == 0)
                break;
            const Interval& L = cols[i - 1][j];
            const Interval& B = rows[j][i - 1];
            if (!B.empty) {
                kind = Top;
                i = i - 1;
                t = B.lo;
            } else if (!L.empty) {
                i = i - 1;
                t = L.lo;
            } else {
                throw Error(ErrorCode::Internal, "matching backtrack lost the path");
            }
        } else {
            if (j == 0)
                break;
            const Interval& L = cols[i][j - 1];
            const Interval& B = rows[j - 1][i];
            if (!L.empty) {
                kind = Right;
                j = j - 1;
                t = L.lo;
            } else if (!B.empty) {
                j = j - 1;
                t = B.lo;
            } else {
                throw Error(ErrorCode::Internal, "matching backtrack lost the path");
            }
        }
        if (kind == Right) {
            T.push_back(i);
            S.push_back(j + t);
        } else {
            T.push_back(i + t);
            S.push_back(j);
        }
    }
    if (T.back() != 0.0 || S.back() != 0.0) {
        T.push_back(0.0);
        S.push_back(0.0);
    }
    std::reverse(T.begin(), T.end());
    std::reverse(S.begin(), S.end());
    // drop repeated anchors
    std::vector<double> T2, S2;
    for (size_t k = 0; k < T.size(); ++k) {
        if (!T2.empty() && T2.back() == T[k] && S2.back() == S[k])
            continue;
        T2.push_back(T[k]);
        S2.push_back(S[k]);
    }
    return Matching(std::move(T2), std::move(S2), r);
}

Matching build_matching(const Curve& tau, const Curve& sigma, double delta)
{
    if (delta < 0)
        throw Error(ErrorCode::Input, "negative delta");
    Matching M = build_matching_raw(tau, sigma, delta + tolerance_eta(tau, sigma));
    return Matching(M.tau_anchors(), M.sigma_anchors(), delta);
}

CurvePoint matching_query(const Matching& M, const Curve& sigma, const CurvePoint& x)
{
    return canonical_point(sigma, M.forward(x.param()));
}

double sample_matching_distance(const Matching& M, const Curve& tau, const Curve& sigma, int k)
{
    const auto& T = M.tau_anchors();
    const auto& S = M.sigma_anchors();
    if (T.empty())
        return 0.0;
    std::vector<double> cum(T.size(), 0.0);
    for (size_t a = 1; a < T.size(); ++a)
        cum[a] = cum[a - 1] + std::hypot(T[a] - T[a - 1], S[a] - S[a - 1]);
    const int d = tau.dim();
    std::vector<double> p(d), q(d);
    double worst = 0.0;
    auto probe = [&](double t, double s) {
        tau.eval(t, p.data());
        sigma.eval(s, q.data());
        worst = std::max(worst, dist(p.data(), q.data(), d));
    };
    for (size_t a = 0; a < T.size(); ++a)
        probe(T[a], S[a]);
    double total = cum.back();
    if (total <= 0 || k < 2)
        return worst;
    size_t a = 0;
    for (int s = 0; s < k; ++s) {
        double u = total * s / (k - 1);
        while (a + 2 < cum.size() && cum[a + 1] < u)
            ++a;
        double seg = cum[a + 1] - cum[a];
        double f = seg > 0 ? std::clamp((u - cum[a]) / seg, 0.0, 1.0) : 0.0;
        probe(T[a] + f * (T[a + 1] - T[a]), S[a] + f * (S[a + 1] - S[a]));
    }
    return worst;
}

}  // namespace frechet
