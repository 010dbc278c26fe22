#include "frechet_c.h"

#include "frechet/approx.hpp"
#include "frechet/approx_discrete.hpp"
#include "frechet/bench.hpp"
#include "frechet/plot.hpp"
#include "frechet/wavefront.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

struct frechet_curve {
    frechet::Curve c;
};

namespace {

thread_local std::string g_error;

template <class F>
frechet_status guard(F&& f)
{
    try {
        f();
        g_error.clear();
        return FRECHET_OK;
    } catch (const frechet::Error& e) {
        g_error = e.what();
        return static_cast<frechet_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        g_error = "out of memory";
        return FRECHET_E_INTERNAL;
    } catch (const std::exception& e) {
        g_error = e.what();
        return FRECHET_E_INTERNAL;
    }
}

void need(const void* p, const char* what)
{
    if (!p)
        throw frechet::Error(frechet::ErrorCode::Input, std::string("null ") + what);
}

frechet::Params to_params(const frechet_params* p)
{
    frechet::Params q;
    if (!p)
        return q;
    q.eps = p->eps;
    q.mu1 = p->mu1;
    q.mu2 = p->mu2;
    q.mu3 = p->mu3;
    q.omega = p->omega;
    q.sample_c = p->sample_c;
    q.seed = p->seed;
    q.deterministic_fallback_only = p->deterministic_fallback != 0;
    return q;
}

void copy_counters(const frechet::Counters& c, frechet_counters* o)
{
    o->wavefront_cells = c.wavefront_cells;
    o->preprocess_cells = c.preprocess_cells;
    o->cover_work = c.cover_work;
    o->cover_queries = c.cover_queries;
    o->surrogate_tests = c.surrogate_tests;
    o->samples_drawn = c.samples_drawn;
    o->fallbacks_triggered = c.fallbacks_triggered;
    o->reach_calls = c.reach_calls;
    o->decision_calls = c.decision_calls;
}

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

void frechet_params_default(frechet_params* p)
{
    if (!p)
        return;
    frechet::Params d;
    p->eps = d.eps;
    p->mu1 = p->mu2 = p->mu3 = p->omega = 0;
    p->sample_c = d.sample_c;
    p->seed = d.seed;
    p->deterministic_fallback = 0;
}

const char* frechet_last_error(void) { return g_error.c_str(); }

frechet_status frechet_curve_new(int dim, const double* xs, size_t npoints, frechet_curve** out)
{
    return guard([&] {
        need(out, "output");
        need(xs, "coordinates");
        if (dim < 1 || npoints < 1)
            throw frechet::Error(frechet::ErrorCode::Input, "curve needs dim >= 1 and a point");
        std::vector<double> v(xs, xs + npoints * static_cast<size_t>(dim));
        *out = new frechet_curve{frechet::Curve(dim, std::move(v))};
    });
}

frechet_status frechet_curve_read_csv(const char* path, frechet_curve** out)
{
    return guard([&] {
        need(out, "output");
        need(path, "path");
        *out = new frechet_curve{frechet::read_curve_csv(path)};
    });
}

frechet_status frechet_curve_write_csv(const frechet_curve* c, const char* path)
{
    return guard([&] {
        need(c, "curve");
        need(path, "path");
        frechet::write_curve_csv(c->c, path);
    });
}

frechet_status frechet_curve_generate(const char* kind, int n, uint64_t seed, double param,
                                      const frechet_curve* base, int dim, frechet_curve** out)
{
    return guard([&] {
        need(out, "output");
        need(kind, "kind");
        auto k = frechet::parse_kind(kind);
        *out = new frechet_curve{
            frechet::generate_synthetic(k, n, seed, {param}, base ? &base->c : nullptr, dim)};
    });
}

void frechet_curve_free(frechet_curve* c) { delete c; }
int frechet_curve_size(const frechet_curve* c) { return c ? c->c.size() : 0; }
int frechet_curve_dim(const frechet_curve* c) { return c ? c->c.dim() : 0; }
const double* frechet_curve_data(const frechet_curve* c) { return c ? c->c.data().data() : nullptr; }

frechet_status frechet_mode_parse(const char* s, frechet_mode* out)
{
    return guard([&] {
        need(s, "mode");
        need(out, "output");
        *out = static_cast<frechet_mode>(static_cast<int>(frechet::parse_mode(s)));
    });
}

frechet_status frechet_decide(const frechet_curve* a, const frechet_curve* b, frechet_mode mode, double delta,
                              const frechet_params* p, int* answer, frechet_counters* counters)
{
    return guard([&] {
        need(a, "curve");
        need(b, "curve");
        need(answer, "answer");
        if (!(delta >= 0))
            throw frechet::Error(frechet::ErrorCode::Input, "delta must be non-negative");
        if (a->c.dim() != b->c.dim())
            throw frechet::Error(frechet::ErrorCode::Input, "dimension mismatch");
        frechet::Counters c;
        bool yes = false;
        {
            frechet::CounterScope scope(&c);
            switch (mode) {
            case FRECHET_MODE_EXACT:
                yes = frechet::decide_exact(a->c, b->c, delta);
                break;
            case FRECHET_MODE_APPROX:
                yes = frechet::decide_approx(a->c, b->c, delta, to_params(p));
                break;
            case FRECHET_MODE_DISCRETE:
                yes = frechet::discrete_decide_exact(a->c, b->c, delta);
                break;
            case FRECHET_MODE_DISCRETE_APPROX:
                yes = frechet::discrete_decide_approx(a->c, b->c, delta, to_params(p));
                break;
            default:
                throw frechet::Error(frechet::ErrorCode::Input, "unknown mode");
            }
        }
        *answer = yes ? 1 : 0;
        if (counters)
            copy_counters(c, counters);
    });
}

frechet_status frechet_compute(const frechet_curve* a, const frechet_curve* b, frechet_mode mode,
                               const frechet_params* p, frechet_result* out)
{
    return guard([&] {
        need(a, "curve");
        need(b, "curve");
        need(out, "result");
        if (a->c.dim() != b->c.dim())
            throw frechet::Error(frechet::ErrorCode::Input, "dimension mismatch");
        frechet::ApproxResult r;
        switch (mode) {
        case FRECHET_MODE_EXACT: {
            frechet::CounterScope scope(&r.counters);
            r.value = r.lower = r.upper = frechet::compute_exact(a->c, b->c);
            r.ratio_bound = 1.0;
            break;
        }
        case FRECHET_MODE_DISCRETE: {
            frechet::CounterScope scope(&r.counters);
            r.value = r.lower = r.upper = frechet::discrete_compute_exact(a->c, b->c);
            r.ratio_bound = 1.0;
            break;
        }
        case FRECHET_MODE_APPROX:
            r = frechet::compute_approx(a->c, b->c, to_params(p));
            break;
        case FRECHET_MODE_DISCRETE_APPROX:
            r = frechet::discrete_compute_approx(a->c, b->c, to_params(p));
            break;
        default:
            throw frechet::Error(frechet::ErrorCode::Input, "unknown mode");
        }
        out->value = r.value;
        out->lower = r.lower;
        out->upper = r.upper;
        out->ratio_bound = r.ratio_bound;
        out->decisions = r.decisions;
        copy_counters(r.counters, &out->counters);
    });
}

frechet_status frechet_ratio_bound(const frechet_params* p, int discrete, int m, double* out)
{
    return guard([&] {
        need(out, "output");
        frechet::Params q = frechet::resolve_params(to_params(p), m);
        *out = discrete ? frechet::audited_ratio_bound_discrete(q) : frechet::audited_ratio_bound(q);
    });
}

frechet_status frechet_free_space_svg(const frechet_curve* a, const frechet_curve* b, double delta, char** svg)
{
    return guard([&] {
        need(a, "curve");
        need(b, "curve");
        need(svg, "output");
        *svg = dup_string(frechet::free_space_svg(a->c, b->c, delta));
    });
}

frechet_status frechet_bench_json(const char* modes, const int* sizes, int nsizes, int reps, uint64_t seed,
                                  double eps, char** json)
{
    return guard([&] {
        need(modes, "modes");
        need(sizes, "sizes");
        need(json, "output");
        frechet::BenchConfig cfg;
        std::stringstream ss(modes);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty())
                cfg.modes.push_back(frechet::parse_mode(tok));
        cfg.sizes.assign(sizes, sizes + std::max(nsizes, 0));
        cfg.reps = reps;
        cfg.seed = seed;
        cfg.eps = eps;
        *json = dup_string(frechet::bench_json(frechet::run_bench(cfg), cfg));
    });
}

void frechet_string_free(char* s) { std::free(s); }

}  // extern "C"
