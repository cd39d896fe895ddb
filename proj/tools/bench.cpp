// Serial-vs-parallel comparison of the enumeration kernels, checking that
// both paths produce identical results while timing them.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "carlitz/laurent.hpp"
#include "carlitz/power_sums.hpp"

using namespace carlitz;

namespace {

template <class F>
double time_ms(F&& fn)
{
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main()
{
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both paths run serially\n");
#endif

    auto f3 = build_field(3, 1);

    std::printf("\npower_sum_bruteforce, q=3:\n");
    std::printf("%4s %6s %12s %12s %8s %6s\n", "j", "i", "serial_ms", "parallel_ms", "speedup",
                "equal");
    for (auto [j, i] : {std::pair<int, long>{7, 5}, {8, 3}, {9, 2}}) {
        Rational rs, rp;
        double ts = time_ms([&] { rs = power_sum_bruteforce(f3, j, i, 1 << 20, false); });
        double tp = time_ms([&] { rp = power_sum_bruteforce(f3, j, i, 1 << 20, true); });
        std::printf("%4d %6ld %12.1f %12.1f %7.2fx %6s\n", j, i, ts, tp, ts / tp,
                    rs == rp ? "yes" : "NO");
    }

    std::printf("\nzeta_An ideal-sum layers, q=3, prec=24:\n");
    std::printf("%4s %6s %12s %12s %8s %6s\n", "n", "cap", "serial_ms", "parallel_ms", "speedup",
                "equal");
    for (auto [n, cap] : {std::pair{2, 5}, {3, 4}}) {
        ZetaAnReport zs, zp;
        double ts = time_ms([&] { zs = zeta_An(f3, n, 24, cap, 1 << 24, false); });
        double tp = time_ms([&] { zp = zeta_An(f3, n, 24, cap, 1 << 24, true); });
        bool eq = laurent_eq(zs.value, zp.value, 24) && zs.layer_valuations == zp.layer_valuations;
        std::printf("%4d %6d %12.1f %12.1f %7.2fx %6s\n", n, cap, ts, tp, ts / tp,
                    eq ? "yes" : "NO");
    }
    return 0;
}
