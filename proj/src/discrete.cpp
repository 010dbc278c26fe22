#include "frechet/discrete.hpp"

#include "frechet/counters.hpp"

#include <algorithm>

namespace frechet {

VertexSet single_vertex(int size, int v)
{
    VertexSet s(static_cast<size_t>(size), 0);
    if (v >= 0 && v < size)
        s[v] = 1;
    return s;
}

bool set_empty(const VertexSet& s)
{
    return std::none_of(s.begin(), s.end(), [](char c) { return c != 0; });
}

namespace {

// rows[i] = DW^{v_i}; keep_all=false keeps only the last row
void run(const Curve& tau, const Curve& sigma, double delta, const VertexSet& S, const VertexSet& S2,
         std::vector<VertexSet>* all, VertexSet& last_row, VertexSet& last_col)
{
    const int n = tau.size();
    const int m = sigma.size();
    const int d = tau.dim();
    if (tau.dim() != sigma.dim())
        throw Error(ErrorCode::Input, "dimension mismatch");
    if (static_cast<int>(S.size()) != n || static_cast<int>(S2.size()) != m)
        throw Error(ErrorCode::Input, "vertex set size mismatch");
    auto close = [&](int i, int j) { return dist(tau.pt(i), sigma.pt(j), d) <= delta; };

    VertexSet prev(static_cast<size_t>(m), 0), cur(static_cast<size_t>(m), 0);
    last_col.assign(static_cast<size_t>(n), 0);
    if (all)
        all->assign(static_cast<size_t>(n), VertexSet());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            bool reach = false;
            if (i == 0 && S2[j])
                reach = true;
            if (j == 0 && S[i])
                reach = true;
            if (i > 0 && prev[j])
                reach = true;
            if (j > 0 && cur[j - 1])
                reach = true;
            if (i > 0 && j > 0 && prev[j - 1])
                reach = true;
            cur[j] = reach && close(i, j);
        }
        last_col[i] = cur[m - 1];
        if (all)
            (*all)[i] = cur;
        std::swap(prev, cur);
    }
    last_row = prev;
    count_cells(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m));
}

}  // namespace

DisWaveOutput dis_wave(const Curve& tau, const Curve& sigma, double delta, const VertexSet& S,
                       const VertexSet& S2)
{
    DisWaveOutput out;
    VertexSet lr, lc;
    run(tau, sigma, delta, S, S2, &out.per_tau_vertex, lr, lc);
    const int n = tau.size();
    const int m = sigma.size();
    out.per_sigma_vertex.assign(static_cast<size_t>(m), VertexSet(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            out.per_sigma_vertex[j][i] = out.per_tau_vertex[i][j];
    return out;
}

DisWaveEnds dis_wave_ends(const Curve& tau, const Curve& sigma, double delta, const VertexSet& S,
                          const VertexSet& S2)
{
    DisWaveEnds out;
    run(tau, sigma, delta, S, S2, nullptr, out.last_tau, out.last_sigma);
    return out;
}

bool discrete_decide_exact(const Curve& tau, const Curve& sigma, double delta)
{
    DisWaveEnds w = dis_wave_ends(tau, sigma, delta, single_vertex(tau.size(), 0), single_vertex(sigma.size(), 0));
    return w.last_tau.back() != 0;
}

double discrete_compute_exact(const Curve& tau, const Curve& sigma)
{
    const int d = tau.dim();
    std::vector<double> ds;
    ds.reserve(static_cast<size_t>(tau.size()) * sigma.size());
    for (int i = 0; i < tau.size(); ++i)
        for (int j = 0; j < sigma.size(); ++j)
            ds.push_back(dist(tau.pt(i), sigma.pt(j), d));
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    size_t lo = 0, hi = ds.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (discrete_decide_exact(tau, sigma, ds[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return ds[lo];
}

DiscreteMatching build_discrete_matching(const Curve& tau, const Curve& sigma, double delta)
{
    const int n = tau.size();
    const int m = sigma.size();
    DisWaveOutput W = dis_wave(tau, sigma, delta, single_vertex(n, 0), single_vertex(m, 0));
    const auto& R = W.per_tau_vertex;
    if (!R[n - 1][m - 1]) {
        Error e(ErrorCode::Precondition, "sequences are not within the requested discrete distance");
        e.witness = delta;
        throw e;
    }
    DiscreteMatching M;
    M.bound = delta;
    int i = n - 1, j = m - 1;
    M.pairs.emplace_back(i, j);
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 && R[i - 1][j - 1]) {
            --i;
            --j;
        } else if (i > 0 && R[i - 1][j]) {
            --i;
        } else if (j > 0 && R[i][j - 1]) {
            --j;
        } else {
            throw Error(ErrorCode::Internal, "discrete backtrack lost the path");
        }
        M.pairs.emplace_back(i, j);
    }
    M.tau_image.assign(static_cast<size_t>(n), -1);
    M.sigma_image.assign(static_cast<size_t>(m), -1);
    for (auto [a, b] : M.pairs) {
        if (M.tau_image[a] < 0)
            M.tau_image[a] = b;
        if (M.sigma_image[b] < 0)
            M.sigma_image[b] = a;
    }
    return M;
}

}  // namespace frechet
