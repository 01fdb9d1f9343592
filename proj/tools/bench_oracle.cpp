#include <chrono>
#include <iostream>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "arcline/oracle.hpp"

using namespace arcline;
using clock_type = std::chrono::steady_clock;

int main(int argc, char** argv) {
    long long cases = 60;
    std::uint64_t seed = 7;
    long long half = 40;

    CLI::App app{"brute-force ort scan: serial reference vs parallel kernel"};
    app.add_option("--cases", cases, "regions to scan");
    app.add_option("--seed", seed, "generator seed");
    app.add_option("--half", half, "window half-width");
    CLI11_PARSE(app, argc, argv);

    Window w(-half, half);
    std::vector<ArcRegion> regions;
    std::vector<coord_t> margins;
    for (long long i = 0; i < cases; ++i) {
        ArcRegion r = random_region(seed + static_cast<std::uint64_t>(i) * 0x9E3779B97F4A7C15ULL, 6, 8);
        regions.push_back(r);
        margins.push_back(guaranteed_margin(r, w));
    }

    auto run = [&](auto&& kernel, const char* label) {
        auto t0 = clock_type::now();
        long long total = 0;
        std::vector<std::vector<Arc>> outs(regions.size());
        for (std::size_t i = 0; i < regions.size(); ++i) {
            outs[i] = kernel(regions[i], w, margins[i]);
            total += static_cast<long long>(outs[i].size());
        }
        auto ms = std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        std::cout << label << ": " << ms << " ms, " << total << " arcs kept\n";
        return outs;
    };

#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp threads: 1 (compiled without OpenMP)\n";
#endif
    std::cout << "window [" << w.lo << "," << w.hi << "], " << cases << " regions\n";

    auto serial = run([](const ArcRegion& r, const Window& win, coord_t m) {
        return brute_ort_window_serial(r, win, m);
    }, "serial  ");
    auto parallel = run([](const ArcRegion& r, const Window& win, coord_t m) {
        return brute_ort_window(r, win, m);
    }, "parallel");

    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (serial[i] != parallel[i]) {
            std::cerr << "MISMATCH on region " << i << "\n";
            return 1;
        }
    }
    std::cout << "kernels agree on every region\n";
    return 0;
}
