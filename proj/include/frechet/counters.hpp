#ifndef FRECHET_COUNTERS_HPP
#define FRECHET_COUNTERS_HPP

#include <cstdint>

namespace frechet {

struct Counters {
    std::uint64_t wavefront_cells = 0;
    std::uint64_t preprocess_cells = 0;
    std::uint64_t cover_work = 0;
    std::uint64_t cover_queries = 0;
    std::uint64_t surrogate_tests = 0;
    std::uint64_t samples_drawn = 0;
    std::uint64_t fallbacks_triggered = 0;
    std::uint64_t reach_calls = 0;
    std::uint64_t decision_calls = 0;

    void add(const Counters& o);
};

enum class Phase { Main, Preprocess };

// Installs a sink for the current thread; nested scopes restore the previous one.
class CounterScope {
public:
    explicit CounterScope(Counters* c);
    ~CounterScope();
    CounterScope(const CounterScope&) = delete;
    CounterScope& operator=(const CounterScope&) = delete;

private:
    Counters* prev_;
};

// Cells counted while a PhaseScope(Preprocess) is alive go to preprocess_cells.
class PhaseScope {
public:
    explicit PhaseScope(Phase p);
    ~PhaseScope();
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;

private:
    Phase prev_;
};

Counters* current_counters();
void count_cells(std::uint64_t n);

}  // namespace frechet

#endif
