// Benchmark comparing the serial reference and OpenMP synthesis kernels.

#include "msaw/device.hpp"
#include "msaw/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace msaw;
using clock_type = std::chrono::steady_clock;

static double time_ms(const char* label, int reps, const std::function<void()>& fn)
{
    fn(); // warmup
    auto t0 = clock_type::now();
    for (int i = 0; i < reps; ++i)
        fn();
    auto t1 = clock_type::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
    std::printf("%-28s %9.3f ms\n", label, ms);
    return ms;
}

int main()
{
    DeviceGeometry geom = default_geometry();
    SensorPhysics phys = default_physics();
    EnvironmentState env;
    FrequencyGrid grid;
    grid.n_points = 16001;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    std::printf("grid: %d points, %zu echoes\n\n", grid.n_points, geom.echoes.size());

    double serial = time_ms("synthesize_s11 serial", 5,
                            [&] { synthesize_s11_serial(geom, phys, env, grid); });
    double parallel = time_ms("synthesize_s11 openmp", 5,
                              [&] { synthesize_s11(geom, phys, env, grid); });
    std::printf("speedup: %.2fx\n\n", serial / parallel);

    Spectrum s = synthesize_s11(geom, phys, env, grid);
    time_ms("to_time_domain (pad 4)", 5, [&] { to_time_domain(s, 4); });
    return 0;
}
