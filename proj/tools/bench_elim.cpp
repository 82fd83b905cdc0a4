// Benchmark: serial vs OpenMP-parallel exact elimination on random rational
// matrices, plus a batched normal-form workload. Outputs are compared for
// equality before timings are reported.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "sepvars/groebner.hpp"
#include "sepvars/linalg.hpp"
#include "sepvars/parse.hpp"

using namespace sepvars;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

QMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, bool rational_entries) {
    std::uniform_int_distribution<long> num(-999, 999);
    std::uniform_int_distribution<long> den(1, 99);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = rational_entries ? frac(num(rng), den(rng)) : Rational(num(rng));
    return m;
}

void bench_case(std::mt19937_64& rng, int rows, int cols, bool rational_entries) {
    const QMatrix m = random_matrix(rng, rows, cols, rational_entries);
    double ts = 1e100, tp = 1e100;
    bool same = true;
    for (int rep = 0; rep < 3; ++rep) {  // best of three against host noise
        QMatrix ms = m, mp = m;
        auto t0 = Clock::now();
        auto ps = rref_serial(ms);
        ts = std::min(ts, seconds_since(t0));
        t0 = Clock::now();
        auto pp = rref_parallel(mp);
        tp = std::min(tp, seconds_since(t0));
        same = same && (ps == pp) && (ms == mp);
    }
    std::printf("  %4dx%-4d %-9s serial %8.3fs  parallel %8.3fs  speedup %.2fx  %s\n", rows,
                cols, rational_entries ? "rational" : "integer", ts, tp, ts / tp,
                same ? "outputs equal" : "OUTPUT MISMATCH");
}

}  // namespace

int main() {
    std::printf("exact elimination kernel, %d OpenMP threads\n", omp_get_max_threads());
    std::mt19937_64 rng(2026);
#pragma omp parallel
    { volatile int warm = omp_get_thread_num(); (void)warm; }

    std::printf("reduced row echelon form:\n");
    bench_case(rng, 60, 90, false);
    bench_case(rng, 80, 120, false);
    bench_case(rng, 120, 180, false);
    bench_case(rng, 60, 90, true);
    bench_case(rng, 80, 120, true);

    // batched normal forms: one reduction per ansatz monomial of a fixed ideal
    std::printf("batched normal forms (4000 monomials, one shared basis):\n");
    const std::vector<std::string> xy{"x", "y"};
    Ideal I({parse_poly("x^2*y^2 - 1", xy), parse_poly("y^5 + y^3 + x*y^2 + x", xy)});
    (void)I.basis(TermOrder::degrevlex());
    std::vector<MPoly> monomials;
    for (int i = 0; i < 4000; ++i)
        monomials.push_back(MPoly::monomial(xy, {i % 40, (i * 7) % 25}, frac(i + 1, 3)));

    std::vector<MPoly> out_serial(monomials.size(), MPoly(xy));
    auto t0 = Clock::now();
    for (size_t k = 0; k < monomials.size(); ++k) out_serial[k] = normal_form(monomials[k], I);
    const double ts = seconds_since(t0);

    std::vector<MPoly> out_parallel(monomials.size(), MPoly(xy));
    t0 = Clock::now();
#pragma omp parallel for schedule(dynamic, 64)
    for (size_t k = 0; k < monomials.size(); ++k) out_parallel[k] = normal_form(monomials[k], I);
    const double tp = seconds_since(t0);

    const bool same = out_serial == out_parallel;
    std::printf("  serial %8.3fs  parallel %8.3fs  speedup %.2fx  %s\n", ts, tp, ts / tp,
                same ? "outputs equal" : "OUTPUT MISMATCH");
    return same ? 0 : 1;
}
