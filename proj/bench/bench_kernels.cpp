// Serial vs OpenMP timings for the enumeration and search kernels.
// Usage: modcount_bench [--full]   (--full adds the (2,1)/(0,5) scans)

#include "modcount/fatgraph.hpp"
#include "modcount/hurwitz.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

using namespace modcount;

namespace {

double time_of(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    bool full = argc > 1 && std::strcmp(argv[1], "--full") == 0;
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        size_t ns = 0, np = 0;
        double ts = time_of([&] { ns = enumerate_fatgraphs_serial(0, 4).entries.size(); });
        double tp = time_of([&] { np = enumerate_fatgraphs(0, 4).entries.size(); });
        if (ns != np) std::printf("MISMATCH on (0,4): %zu vs %zu\n", ns, np);
        row("enumerate fatgraphs (0,4)", ts, tp);
    }
    {
        size_t ns = 0, np = 0;
        double ts = time_of([&] { ns = enumerate_fatgraphs_serial(1, 2).entries.size(); });
        double tp = time_of([&] { np = enumerate_fatgraphs(1, 2).entries.size(); });
        if (ns != np) std::printf("MISMATCH on (1,2): %zu vs %zu\n", ns, np);
        row("enumerate fatgraphs (1,2)", ts, tp);
    }
    {
        Rational vs, vp;
        double ts = time_of([&] { vs = belyi_count_serial(1, {6, 6}); });
        double tp = time_of([&] { vp = belyi_count(1, {6, 6}); });
        if (vs != vp) std::printf("MISMATCH on belyi (1,(6,6))\n");
        row("belyi covers d=12, b=(6,6)", ts, tp);
    }
    {
        Rational vs, vp;
        Partition mu{{2, 2, 1}};
        double ts = time_of([&] { vs = simple_hurwitz_serial(1, mu); });
        double tp = time_of([&] { vp = simple_hurwitz(1, mu); });
        if (vs != vp) std::printf("MISMATCH on simple hurwitz (1,(2,2,1))\n");
        row("simple hurwitz g=1 mu=(2,2,1)", ts, tp);
    }
    if (full) {
        {
            size_t ns = 0, np = 0;
            double ts = time_of([&] { ns = enumerate_fatgraphs_serial(2, 1).entries.size(); });
            double tp = time_of([&] { np = enumerate_fatgraphs(2, 1).entries.size(); });
            if (ns != np) std::printf("MISMATCH on (2,1): %zu vs %zu\n", ns, np);
            row("enumerate fatgraphs (2,1)", ts, tp);
        }
        {
            size_t ns = 0, np = 0;
            double ts = time_of([&] { ns = enumerate_fatgraphs_serial(0, 5).entries.size(); });
            double tp = time_of([&] { np = enumerate_fatgraphs(0, 5).entries.size(); });
            if (ns != np) std::printf("MISMATCH on (0,5): %zu vs %zu\n", ns, np);
            row("enumerate fatgraphs (0,5)", ts, tp);
        }
    }
    return 0;
}
