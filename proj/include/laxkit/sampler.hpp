#ifndef LAXKIT_SAMPLER_HPP
#define LAXKIT_SAMPLER_HPP

// Seeded sampling used by every check suite.  The uniform double is built from
// the top 53 bits of mt19937_64 output rather than std::uniform_real_distribution,
// whose mapping the standard leaves implementation-defined; this keeps reports
// byte-identical across compilers for a fixed seed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "laxkit/elliptic.hpp"

namespace laxkit {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * u01(); }

    cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
        const double re = uniform(re_lo, re_hi);  // fixed evaluation order
        const double im = uniform(im_lo, im_hi);
        return {re, im};
    }

    // n reals in (lo, hi), sorted descending, pairwise gaps > min_gap
    // (rejection sampling; descending order makes all q_i - q_j with i < j
    // positive and bounded away from the lattice).
    std::vector<double> separated(int n, double lo, double hi, double min_gap) {
        for (;;) {
            std::vector<double> v(n);
            for (auto& x : v) x = uniform(lo, hi);
            std::sort(v.begin(), v.end(), std::greater<double>());
            bool ok = true;
            for (int i = 0; i + 1 < n; ++i)
                if (v[i] - v[i + 1] < min_gap) ok = false;
            if (ok) return v;
        }
    }

  private:
    std::mt19937_64 eng_;
};

struct SampleSpec {
    int count = 50;
    std::uint64_t seed = 12345;
    double min_gap = 0.05;  // min separation between sampled coordinates
};

}  // namespace laxkit

#endif
