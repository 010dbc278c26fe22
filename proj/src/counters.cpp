#include "frechet/counters.hpp"

namespace frechet {

namespace {
thread_local Counters* g_sink = nullptr;
thread_local Phase g_phase = Phase::Main;
}  // namespace

void Counters::add(const Counters& o)
{
    wavefront_cells += o.wavefront_cells;
    preprocess_cells += o.preprocess_cells;
    cover_work += o.cover_work;
    cover_queries += o.cover_queries;
    surrogate_tests += o.surrogate_tests;
    samples_drawn += o.samples_drawn;
    fallbacks_triggered += o.fallbacks_triggered;
    reach_calls += o.reach_calls;
    decision_calls += o.decision_calls;
}

CounterScope::CounterScope(Counters* c) : prev_(g_sink) { g_sink = c; }
CounterScope::~CounterScope() { g_sink = prev_; }

PhaseScope::PhaseScope(Phase p) : prev_(g_phase) { g_phase = p; }
PhaseScope::~PhaseScope() { g_phase = prev_; }

Counters* current_counters() { return g_sink; }

void count_cells(std::uint64_t n)
{
    if (!g_sink)
        return;
    if (g_phase == Phase::Preprocess)
        g_sink->preprocess_cells += n;
    else
        g_sink->wavefront_cells += n;
}

}  // namespace frechet
