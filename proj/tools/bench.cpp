#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>

#include "qpolya/linalg.hpp"
#include "qpolya/lineseries.hpp"
#include "qpolya/series_ops.hpp"

using namespace qpolya;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-22s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                match ? "results match" : "RESULTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial reference vs OpenMP kernels"};
    std::size_t prefix_terms = 110;
    std::size_t series_len = 2500;
    std::size_t rows = 36, cols = 60;
    app.add_option("--prefix-terms", prefix_terms, "coefficients for the prefix kernel");
    app.add_option("--series-len", series_len, "length for the truncated product kernel");
    app.add_option("--rows", rows, "nullspace matrix rows");
    app.add_option("--cols", cols, "nullspace matrix cols");
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    auto rand_rat = [&] { return make_rational(Int(num(rng)), Int(den(rng))); };

    // coefficient prefix: independent q-binomial evaluations per index
    {
        LineSpec central{0, 0, 2, 1};
        Cyclotomic q(2);
        auto t0 = std::chrono::steady_clock::now();
        SeriesPrefix s = prefix_serial(central, q, prefix_terms);
        double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        SeriesPrefix p = prefix(central, q, prefix_terms);
        double t_parallel = ms_since(t0);
        report("prefix", t_serial, t_parallel, s.terms == p.terms);
    }

    // truncated series product: split on the output coefficient index
    {
        CycSeries a(series_len), b(series_len);
        for (auto& v : a) v = Cyclotomic(rand_rat());
        for (auto& v : b) v = Cyclotomic(rand_rat());
        auto t0 = std::chrono::steady_clock::now();
        CycSeries s = mul_trunc_serial(a, b, series_len);
        double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        CycSeries p = mul_trunc(a, b, series_len);
        double t_parallel = ms_since(t0);
        report("mul_trunc", t_serial, t_parallel, s == p);
    }

    // exact nullspace: row elimination fans out across the matrix
    {
        Matrix<Rational> m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rand_rat();
        auto t0 = std::chrono::steady_clock::now();
        auto s = nullspace_serial(m);
        double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto p = nullspace(m);
        double t_parallel = ms_since(t0);
        report("nullspace", t_serial, t_parallel, s == p);
    }

    return 0;
}
