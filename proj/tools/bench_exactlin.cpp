/* Compares the OpenMP matrix kernels against the serial reference kernels:
 * same results required, wall time reported. */

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dualrep/matrix.hpp"
#include "dualrep/rng.hpp"

using namespace dualrep;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.field_scalar(f);
    return m;
}

template <class F>
double time_ms(F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t max_size = 384;
    if (argc > 1) max_size = static_cast<std::size_t>(std::atoll(argv[1]));

    Field f = Field::fp(32003);
    Rng rng(7);
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    bool all_agree = true;
    for (std::size_t n = 96; n <= max_size; n *= 2) {
        Matrix a = random_matrix(f, n, n, rng);
        Matrix b = random_matrix(f, n, n, rng);

        Matrix mp(f, 0, 0), ms(f, 0, 0);
        double tp = time_ms([&] { mp = a.mul(b); });
        double ts = time_ms([&] { ms = a.mul_serial(b); });
        bool agree = mp == ms;
        all_agree = all_agree && agree;
        std::printf("mul  %4zux%-4zu  parallel %8.2f ms   serial %8.2f ms   x%.2f   agree: %s\n",
                    n, n, tp, ts, tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");

        Echelon ep{Matrix(f, 0, 0), {}}, es{Matrix(f, 0, 0), {}};
        tp = time_ms([&] { ep = a.rref(); });
        ts = time_ms([&] { es = a.rref_serial(); });
        agree = ep.mat == es.mat && ep.pivots == es.pivots;
        all_agree = all_agree && agree;
        std::printf("rref %4zux%-4zu  parallel %8.2f ms   serial %8.2f ms   x%.2f   agree: %s\n",
                    n, n, tp, ts, tp > 0 ? ts / tp : 0.0, agree ? "yes" : "NO");
    }
    std::printf("kernels agree: %s\n", all_agree ? "yes" : "NO");
    return all_agree ? 0 : 1;
}
