#include "fpplab/rng.hpp"

#include <cmath>

#include "fpplab/errors.hpp"

namespace fpplab {

double Rng::exponential(double rate) {
    if (!(rate > 0.0)) throw invalid_parameter_error("exponential rate must be positive");
    return -std::log1p(-uniform()) / rate;
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) throw invalid_parameter_error("below(0)");
    const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
    uint64_t u;
    do {
        u = next_u64();
    } while (u >= limit);
    return u % n;
}

static uint64_t poisson_small(Rng& rng, double mean) {
    // Knuth inversion; mean is kept small enough that exp(-mean) stays normal.
    const double limit = std::exp(-mean);
    uint64_t k = 0;
    double p = 1.0;
    do {
        ++k;
        p *= rng.uniform();
    } while (p > limit);
    return k - 1;
}

uint64_t poisson_count(Rng& rng, double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw invalid_parameter_error("poisson mean must be finite and nonnegative");
    if (mean == 0.0) return 0;
    const double chunk = 16.0;
    uint64_t total = 0;
    double remaining = mean;
    while (remaining > chunk) {
        total += poisson_small(rng, chunk);
        remaining -= chunk;
    }
    total += poisson_small(rng, remaining);
    return total;
}

} // namespace fpplab
