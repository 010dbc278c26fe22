#include "frechet_c.h"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Failure {
    std::string msg;
};

void check(frechet_status s, const std::string& what)
{
    if (s != FRECHET_OK)
        throw Failure{what + ": " + frechet_last_error()};
}

using CurvePtr = std::unique_ptr<frechet_curve, decltype(&frechet_curve_free)>;

CurvePtr load(const std::string& path)
{
    frechet_curve* c = nullptr;
    check(frechet_curve_read_csv(path.c_str(), &c), "reading " + path);
    return CurvePtr(c, &frechet_curve_free);
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f)
        throw Failure{"cannot write " + out};
    f << text;
}

nlohmann::json counters_json(const frechet_counters& c)
{
    return {{"wavefront_cells", c.wavefront_cells},   {"preprocess_cells", c.preprocess_cells},
            {"cover_work", c.cover_work},             {"cover_queries", c.cover_queries},
            {"surrogate_tests", c.surrogate_tests},   {"samples_drawn", c.samples_drawn},
            {"fallbacks_triggered", c.fallbacks_triggered}, {"reach_calls", c.reach_calls},
            {"decision_calls", c.decision_calls}};
}

void setup_logging()
{
    const char* lvl = std::getenv("FRECHET_LOG");
    std::string v = lvl ? lvl : "error";
    if (v == "debug")
        spdlog::set_level(spdlog::level::debug);
    else if (v == "info")
        spdlog::set_level(spdlog::level::info);
    else
        spdlog::set_level(spdlog::level::err);
}

struct RunOpts {
    std::string a, b, mode = "exact", out;
    double delta = -1, eps = 0.5;
    uint64_t seed = 0;
    int mu1 = 0, mu2 = 0, mu3 = 0, omega = 0;
    bool det = false, json = false, timing = false;
};

void add_run_flags(CLI::App* sub, RunOpts& o, bool with_delta)
{
    sub->add_option("--curve-a", o.a, "first curve (CSV)")->required();
    sub->add_option("--curve-b", o.b, "second curve (CSV)")->required();
    sub->add_option("--mode", o.mode, "exact | approx | discrete | discrete-approx");
    if (with_delta)
        sub->add_option("--delta", o.delta, "distance threshold")->required();
    sub->add_option("--eps", o.eps, "approximation parameter in (0,1)");
    sub->add_option("--seed", o.seed, "sampling seed");
    sub->add_option("--mu1", o.mu1);
    sub->add_option("--mu2", o.mu2);
    sub->add_option("--mu3", o.mu3);
    sub->add_option("--omega", o.omega);
    sub->add_flag("--deterministic-fallback", o.det, "skip sampling, always enumerate marked edges");
    sub->add_flag("--json", o.json, "print JSON");
    sub->add_option("--out", o.out, "write output to this file");
}

frechet_params params_of(const RunOpts& o)
{
    frechet_params p;
    frechet_params_default(&p);
    p.eps = o.eps;
    p.seed = o.seed;
    p.mu1 = o.mu1;
    p.mu2 = o.mu2;
    p.mu3 = o.mu3;
    p.omega = o.omega;
    p.deterministic_fallback = o.det ? 1 : 0;
    return p;
}

frechet_mode mode_of(const std::string& s)
{
    frechet_mode m;
    check(frechet_mode_parse(s.c_str(), &m), "mode");
    return m;
}

void validate_params(const RunOpts& o, frechet_mode mode, int m)
{
    if (mode == FRECHET_MODE_EXACT || mode == FRECHET_MODE_DISCRETE)
        return;
    frechet_params p = params_of(o);
    double b;
    check(frechet_ratio_bound(&p, mode == FRECHET_MODE_DISCRETE_APPROX, m, &b), "parameters");
}

int run_decide(const RunOpts& o)
{
    auto a = load(o.a);
    auto b = load(o.b);
    frechet_mode mode = mode_of(o.mode);
    validate_params(o, mode, std::min(frechet_curve_size(a.get()), frechet_curve_size(b.get())));
    frechet_params p = params_of(o);
    int ans = 0;
    frechet_counters c{};
    check(frechet_decide(a.get(), b.get(), mode, o.delta, &p, &ans, &c), "decide");
    spdlog::info("decide mode={} delta={} answer={}", o.mode, o.delta, ans);
    if (o.json) {
        nlohmann::json j{{"mode", o.mode}, {"delta", o.delta}, {"decision", ans == 1}, {"seed", o.seed},
                         {"counters", counters_json(c)}};
        emit(j.dump(2) + "\n", o.out);
    } else {
        emit(std::string(ans ? "yes" : "no") + "\n", o.out);
    }
    return ans ? kExitYes : kExitNo;
}

int run_compute(const RunOpts& o)
{
    auto a = load(o.a);
    auto b = load(o.b);
    frechet_mode mode = mode_of(o.mode);
    validate_params(o, mode, std::min(frechet_curve_size(a.get()), frechet_curve_size(b.get())));
    frechet_params p = params_of(o);
    frechet_result r{};
    auto t0 = std::chrono::steady_clock::now();
    check(frechet_compute(a.get(), b.get(), mode, &p, &r), "compute");
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    spdlog::info("compute mode={} value={} decisions={} wall={}s", o.mode, r.value, r.decisions, wall);
    nlohmann::json j{{"mode", o.mode},
                     {"value", r.value},
                     {"lower", r.lower},
                     {"upper", r.upper},
                     {"eps", o.eps},
                     {"ratio_bound", r.ratio_bound},
                     {"seed", o.seed},
                     {"decisions", r.decisions},
                     {"counters", counters_json(r.counters)},
                     {"wall_time", o.timing ? nlohmann::json(wall) : nlohmann::json(nullptr)}};
    if (o.json) {
        emit(j.dump(2) + "\n", o.out);
    } else {
        std::ostringstream s;
        s.precision(12);
        s << r.value << "\n";
        emit(s.str(), o.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    setup_logging();
    CLI::App app{"Frechet distance toolkit"};
    app.require_subcommand(1);

    RunOpts dec, comp;
    auto* sd = app.add_subcommand("decide", "is the distance at most delta (exit 0 yes, 1 no)");
    add_run_flags(sd, dec, true);
    auto* sc = app.add_subcommand("compute", "distance value");
    add_run_flags(sc, comp, false);
    sc->add_flag("--timing", comp.timing, "fill in wall_time (otherwise null, for reproducible output)");

    std::string kind = "walk", gen_out, base_path;
    int gen_n = 100, gen_dim = 2;
    uint64_t gen_seed = 0;
    double gen_param = 1.0;
    auto* sg = app.add_subcommand("gen", "generate a synthetic curve");
    sg->add_option("--kind", kind, "walk | zigzag | circle | perturbed-copy");
    sg->add_option("--n", gen_n, "number of vertices");
    sg->add_option("--seed", gen_seed);
    sg->add_option("--param", gen_param, "step, amplitude, radius or noise");
    sg->add_option("--dim", gen_dim);
    sg->add_option("--base", base_path, "base curve for perturbed-copy");
    sg->add_option("--out", gen_out)->required();

    std::string pa, pb, plot_out;
    double plot_delta = 0;
    auto* sp = app.add_subcommand("plot-freespace", "free-space diagram as SVG");
    sp->add_option("--curve-a", pa)->required();
    sp->add_option("--curve-b", pb)->required();
    sp->add_option("--delta", plot_delta)->required();
    sp->add_option("--out", plot_out)->required();

    std::string modes = "exact,approx", sizes_s = "128,256,512,1024", bench_out;
    int reps = 3;
    uint64_t bench_seed = 1;
    double bench_eps = 0.5;
    auto* sb = app.add_subcommand("bench", "work counters against n*m, with log-log slopes");
    sb->add_option("--modes", modes);
    sb->add_option("--sizes", sizes_s);
    sb->add_option("--reps", reps);
    sb->add_option("--seed", bench_seed);
    sb->add_option("--eps", bench_eps);
    sb->add_option("--out", bench_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (*sd)
            return run_decide(dec);
        if (*sc)
            return run_compute(comp);
        if (*sg) {
            CurvePtr base(nullptr, &frechet_curve_free);
            if (!base_path.empty())
                base = load(base_path);
            frechet_curve* c = nullptr;
            check(frechet_curve_generate(kind.c_str(), gen_n, gen_seed, gen_param, base.get(), gen_dim, &c), "gen");
            CurvePtr owned(c, &frechet_curve_free);
            check(frechet_curve_write_csv(c, gen_out.c_str()), "writing " + gen_out);
            return 0;
        }
        if (*sp) {
            auto a = load(pa);
            auto b = load(pb);
            char* svg = nullptr;
            check(frechet_free_space_svg(a.get(), b.get(), plot_delta, &svg), "plot");
            std::string text(svg);
            frechet_string_free(svg);
            emit(text, plot_out);
            return 0;
        }
        if (*sb) {
            std::vector<int> sizes;
            std::stringstream ss(sizes_s);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty())
                    sizes.push_back(std::stoi(tok));
            char* js = nullptr;
            check(frechet_bench_json(modes.c_str(), sizes.data(), static_cast<int>(sizes.size()), reps, bench_seed,
                                     bench_eps, &js),
                  "bench");
            std::string text(js);
            frechet_string_free(js);
            emit(text + "\n", bench_out);
            return 0;
        }
    } catch (const Failure& f) {
        spdlog::error("{}", f.msg);
        std::cerr << "error: " << f.msg << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
