#include "frechet/approx.hpp"

#include "frechet/wavefront.hpp"

#include <algorithm>
#include <cmath>

namespace frechet {

CoverIndex::CoverIndex(const Curve& block, double delta_prime, double eps_inner)
    : block_(block), delta_prime_(delta_prime), eps_(eps_inner)
{
    if (!(eps_inner > 0))
        throw Error(ErrorCode::Input, "eps_inner must be positive");
}

CoverIndex::Grid CoverIndex::grid(int i1, int i) const
{
    Grid g;
    g.C = clip_segment_to_ball(block_.pt(i), block_.pt(i + 1), block_.pt(i1), delta_prime_, block_.dim());
    if (g.C.empty)
        return g;
    double len = block_.edge_length(i);
    g.h = len > 0 ? eps_ * delta_prime_ / len : 1.0;
    if (!(g.h > 0))
        g.h = 1.0;
    g.a = static_cast<int>(std::floor((g.C.hi - g.C.lo) / g.h)) + 1;
    return g;
}

const CoverIndex::Entry& CoverIndex::entry(int i1, int i2, int i, int b) const
{
    const std::uint64_t E = static_cast<std::uint64_t>(block_.edges()) + 1;
    const std::uint64_t key = ((static_cast<std::uint64_t>(i1) * E + static_cast<std::uint64_t>(i2)) * E +
                               static_cast<std::uint64_t>(i)) * (std::uint64_t{1} << 32) +
                              static_cast<std::uint64_t>(b);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    PhaseScope phase(Phase::Preprocess);
    Grid g = grid(i1, i);
    if (b < 0 || b >= g.a)
        throw Error(ErrorCode::Input, "discretisation index out of range");
    IntervalArray S = empty_array(block_.edges());
    S[static_cast<size_t>(i)] = Interval::make(g.C.lo + b * g.h, g.C.hi);
    Entry en;
    en.arr = wavefront_ends(block_, block_.slice(i1, i2), delta_prime_, S, empty_array(i2 - i1)).last_sigma;
    for (int e = block_.edges() - 1; e >= 0; --e)
        if (!en.arr[static_cast<size_t>(e)].empty) {
            en.max = e;
            break;
        }
    return memo_.emplace(key, std::move(en)).first->second;
}

namespace {

void merge_min_start(Interval& into, const Interval& x)
{
    if (x.empty)
        return;
    if (into.empty || x.lo < into.lo)
        into = Interval::make(x.lo, std::max(x.hi, into.empty ? x.hi : into.hi));
    else
        into.hi = std::max(into.hi, x.hi);
}

}  // namespace

IntervalArray CoverIndex::core(int i1, int i2, const IntervalArray& S1) const
{
    const int E = block_.edges();
    IntervalArray out = empty_array(E);
    Counters* ctr = current_counters();
    std::uint64_t work = static_cast<std::uint64_t>(E);
    int cursor = 0;
    for (int i = 0; i < E; ++i) {
        const Interval& s = S1[static_cast<size_t>(i)];
        if (s.empty)
            continue;
        Grid g = grid(i1, i);
        if (g.C.empty)
            continue;
        double ell = std::max(s.lo, g.C.lo);
        if (ell > std::min(s.hi, g.C.hi))
            continue;
        int b = std::clamp(static_cast<int>(std::floor((ell - g.C.lo) / g.h)), 0, g.a - 1);
        const Entry& en = entry(i1, i2, i, b);
        int start = std::max(i, cursor - 1);
        if (en.max < start)
            continue;
        for (int e = start; e <= en.max; ++e) {
            Interval x = en.arr[static_cast<size_t>(e)];
            if (e == i && !x.empty) {
                // points of the source edge before ell have no covered start behind them
                x.lo = std::max(x.lo, ell);
                if (x.lo > x.hi)
                    x = Interval::Empty();
            }
            merge_min_start(out[static_cast<size_t>(e)], x);
        }
        work += static_cast<std::uint64_t>(en.max - start + 1);
        cursor = en.max + 1;
    }
    if (ctr)
        ctr->cover_work += work;
    return out;
}

IntervalArray CoverIndex::query(double x, double y, double delta_prime, const IntervalArray& S) const
{
    if (delta_prime != delta_prime_)
        throw Error(ErrorCode::Input, "cover query radius differs from the index radius");
    const int E = block_.edges();
    if (static_cast<int>(S.size()) != E)
        throw Error(ErrorCode::Input, "source array length mismatch");
    if (x < 0 || y > E || x > y)
        throw Error(ErrorCode::Input, "cover query range outside the block");
    Counters* ctr = current_counters();
    if (ctr)
        ++ctr->cover_queries;
    if (all_empty(S))
        return empty_array(E);

    const int i1 = static_cast<int>(std::ceil(x));
    const int i2 = static_cast<int>(std::floor(y));
    auto direct = [&](double a, double b, const IntervalArray& src) {
        Curve piece = subcurve_param(block_, a, b);
        return wavefront_ends(block_, piece, delta_prime_, src, empty_array(piece.edges())).last_sigma;
    };
    const int pieces = (i2 - i1) + (x < i1 ? 1 : 0) + (y > i2 ? 1 : 0);
    if (i1 >= i2 || pieces <= 2)
        return direct(x, y, S);
    IntervalArray S1 = x < i1 ? direct(x, i1, S) : S;
    if (all_empty(S1))
        return S1;
    IntervalArray S2 = core(i1, i2, S1);
    if (y > i2 && !all_empty(S2))
        return direct(i2, y, S2);
    return S2;
}

}  // namespace frechet
