// Compares the OpenMP kernels against the serial reference paths:
// web enumeration, identity sampling, and the module sweep.

#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "wcm/hom.hpp"
#include "wcm/identity.hpp"

using namespace wcm;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

void set_threads(int t) {
#ifdef _OPENMP
    omp_set_num_threads(t);
#else
    (void)t;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename F> double timed(F&& f) {
    double t0 = now();
    f();
    return now() - t0;
}

} // namespace

int main() {
    int threads = max_threads();
    std::printf("threads available: %d\n\n", threads);
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "parallel", "speedup");

    auto report = [&](const char* name, double serial, double parallel) {
        std::printf("%-34s %10.3f %10.3f %7.2fx\n", name, serial, parallel,
                    parallel > 0 ? serial / parallel : 0.0);
    };

    {
        // serial reference = brute-force scan; parallel = support-partitioned kernel
        double s = timed([] { ref::enumerate_webs(4, 8); });
        double p = timed([] { enumerate_webs(4, 8); });
        report("enumerate Gr(4,8) (ref vs omp)", s, p);
    }
    {
        set_threads(1);
        double s = timed([] { enumerate_webs(5, 12); });
        set_threads(threads);
        double p = timed([] { enumerate_webs(5, 12); });
        report("enumerate Gr(5,12)", s, p);
    }
    {
        set_threads(1);
        double s = timed([] { run_identity_suite(4, 12, 20260809); });
        set_threads(threads);
        double p = timed([] { run_identity_suite(4, 12, 20260809); });
        report("identity suite k=4", s, p);
    }
    {
        auto sweep = [] { sweep_psi_modules(4, 8, {default_truncation(8)}); };
        set_threads(1);
        double s = timed(sweep);
        set_threads(threads);
        double p = timed(sweep);
        report("module build+validate Gr(4,8)", s, p);
    }
    return 0;
}
