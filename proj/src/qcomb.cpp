#include "qpolya/qcomb.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace qpolya {

UniPoly<Int> q_int(long n) {
    if (n < 0) throw DomainError("out_of_range", "q-integer of negative n");
    std::vector<Int> c(static_cast<std::size_t>(n), Int(1));
    return UniPoly<Int>(std::move(c));
}

namespace {

std::mutex qbin_mutex;
std::map<std::pair<long, long>, UniPoly<Int>>& qbin_cache() {
    static std::map<std::pair<long, long>, UniPoly<Int>> cache;
    return cache;
}

} // namespace

UniPoly<Int> q_binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw DomainError("out_of_range",
                          "q-binomial arguments out of range: n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    std::lock_guard<std::mutex> lock(qbin_mutex);
    auto& cache = qbin_cache();
    auto hit = cache.find({n, k});
    if (hit != cache.end()) return hit->second;
    // fill the q-Pascal triangle bottom-up so every dependency is present
    for (long m = 0; m <= n; ++m) {
        for (long j = std::max(0l, k - (n - m)); j <= std::min(m, k); ++j) {
            if (cache.count({m, j})) continue;
            UniPoly<Int> val;
            if (j == 0 || j == m) {
                val = UniPoly<Int>::constant(Int(1));
            } else {
                const UniPoly<Int>& left = cache.at({m - 1, j - 1});
                const UniPoly<Int>& up = cache.at({m - 1, j});
                val = left + up.shifted(static_cast<std::size_t>(j));
            }
            cache.emplace(std::make_pair(m, j), std::move(val));
        }
    }
    return cache.at({n, k});
}

Cyclotomic q_binomial_eval(long n, long k, const Cyclotomic& q) {
    if (n < 0 || k < 0 || k > n)
        throw DomainError("out_of_range",
                          "q-binomial arguments out of range: n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    if (q.is_zero_value()) return Cyclotomic(Rational(1), q.order());
    if (is_root_of_unity(q)) return q_lucas_eval(n, k, q);
    Cyclotomic one(Rational(1), q.order());
    Cyclotomic val = one;
    Cyclotomic pow_lo = one;          // q^l
    Cyclotomic pow_hi = q.pow(n - k); // q^(n-k+l)
    for (long l = 1; l <= k; ++l) {
        pow_lo *= q;
        pow_hi *= q;
        val *= pow_hi - one;
        val /= pow_lo - one; // nonzero: q is not a root of unity
    }
    return val;
}

Cyclotomic q_lucas_eval(long x, long y, const Cyclotomic& omega) {
    if (x < 0 || y < 0 || y > x)
        throw DomainError("out_of_range",
                          "q-binomial arguments out of range: n=" + std::to_string(x) +
                              " k=" + std::to_string(y));
    auto ord = root_of_unity_order(omega);
    if (!ord)
        throw DomainError("not_root_of_unity", "q-Lucas evaluation at a non-root of unity");
    long s = static_cast<long>(*ord);
    long x0 = x % s, y0 = y % s;
    Int binom = binomial(static_cast<unsigned long>(x / s), static_cast<unsigned long>(y / s));
    if (y0 > x0 || sgn(binom) == 0) return Cyclotomic(Rational(0), omega.order());
    Cyclotomic residual = eval_at(q_binomial(x0, y0), omega);
    return Cyclotomic(Rational(binom), omega.order()) * residual;
}

namespace {

void walk_paths(long east_left, long north_left, long height, long area, std::vector<Int>& tally) {
    if (east_left == 0 && north_left == 0) {
        tally[static_cast<std::size_t>(area)] += 1;
        return;
    }
    if (north_left > 0) walk_paths(east_left, north_left - 1, height + 1, area, tally);
    if (east_left > 0) walk_paths(east_left - 1, north_left, height, area + height, tally);
}

} // namespace

AreaDistribution path_area_distribution(long x, long y, long step_cap) {
    if (x < 0 || y < 0)
        throw DomainError("out_of_range", "path endpoint must be in the first quadrant");
    if (x + y > step_cap)
        throw DomainError("enumeration_cap",
                          "path enumeration for " + std::to_string(x + y) +
                              " steps exceeds the cap of " + std::to_string(step_cap));
    std::vector<Int> tally(static_cast<std::size_t>(x * y) + 1, Int(0));
    walk_paths(x, y, 0, 0, tally);
    return AreaDistribution{x, y, UniPoly<Int>(std::move(tally))};
}

} // namespace qpolya
