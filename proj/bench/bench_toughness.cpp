// Serial reference vs. the pruned OpenMP kernel on the join constructions.

#include <chrono>
#include <iostream>

#include <omp.h>

#include "tough/blocks.hpp"
#include "tough/oracles.hpp"
#include "tough/synth.hpp"

using namespace tough;

namespace {

template <typename F>
double time_ms(F&& f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main()
{
    struct Case {
        const char* name;
        Graph g;
    };
    std::vector<Case> cases = {
        {"G(L2,2,1)", g_construct(2, formula_blocks({Formula::l2, 2, 1}))},
        {"G(L2,2,2)", g_construct(2, formula_blocks({Formula::l2, 2, 2}))},
        {"l1_l2(2,1,1)", g_construct(2, formula_blocks({Formula::l1_l2, 2, 0, 1, 1}))},
        {"l1_l2_l3(2,1,1)", g_construct(2, formula_blocks({Formula::l1_l2_l3, 2, 0, 1, 1}))},
        {"case3 H(12,9)", case3_graph(12, 9)},
    };
    std::cout << "threads=" << omp_get_max_threads() << "\n";
    std::cout << "graph                n   tau      reference_ms  kernel_ms\n";
    for (auto& c : cases) {
        ToughnessResult ref, fast;
        double ref_ms = -1;
        if (c.g.n() <= 22)
            ref_ms = time_ms([&] { ref = toughness_reference(c.g, 22); });
        double fast_ms = time_ms([&] { fast = toughness_exact(c.g); });
        if (ref_ms >= 0 && ref.value != fast.value) {
            std::cerr << "mismatch on " << c.name << "\n";
            return 1;
        }
        std::printf("%-20s %-3d %-8s %-13.1f %.1f\n", c.name, c.g.n(), fast.value.str().c_str(), ref_ms, fast_ms);
    }
    return 0;
}
