#include "laxkit/scalar_suite.hpp"

#include <cmath>
#include <stdexcept>

namespace laxkit {

CheckReport scalar_identity_suite(const EllipticContext& ctx, const ScalarSuiteOptions& opt) {
    if (opt.sample.count < 1)
        throw std::invalid_argument("scalar_identity_suite: sample count must be positive");

    Rng rng(opt.sample.seed);
    const double shift = opt.negative_control ? 0.01 : 0.0;
    const auto phi = [&](cplx z, cplx q) { return ctx.phi(z, q) + shift; };

    double fay = 0.0, prod_wp = 0.0, prod_f0 = 0.0, exch1 = 0.0, exch2 = 0.0, f0wp = 0.0;
    const auto up = [](double& slot, cplx v) { slot = std::max(slot, std::abs(v)); };

    for (int s = 0; s < opt.sample.count; ++s) {
        // spectral parameters in a strip well off the lattice, coordinates on
        // the real axis with guaranteed separation
        cplx z, w;
        do {
            z = rng.box(0.1, 0.9, -0.2, 0.2);
            w = rng.box(0.1, 0.9, -0.2, 0.2);
        } while (std::abs(z - w) < opt.sample.min_gap);
        const auto qs = rng.separated(3, 0.02, 0.98, opt.sample.min_gap);
        const double qab = qs[0] - qs[1], qbc = qs[1] - qs[2], qac = qs[0] - qs[2];

        up(fay, phi(z, qab) * phi(w, qbc) - phi(w, qac) * phi(z - w, qab) -
                    phi(w - z, qbc) * phi(z, qac));
        up(prod_wp, phi(z, qab) * phi(z, -qab) - (ctx.wp(z) - ctx.wp(qab)));
        up(prod_f0, phi(z, qab) * phi(z, -qab) - (ctx.f0(qab) - ctx.f0(z)));
        up(exch1, phi(z, qab) * ctx.f(z, -qab) - ctx.f(z, qab) * phi(z, -qab) - ctx.wp_prime(qab));
        up(exch2, phi(z, qab) * ctx.f(z, qbc) - ctx.f(z, qab) * phi(z, qbc) -
                      phi(z, qac) * (ctx.f0(qbc) - ctx.f0(qab)));
        up(f0wp, ctx.f0(qab) + ctx.wp(qab) - ctx.theta3_over_theta1() / 3.0);
    }

    CheckReport report;
    report.title = std::string("scalar identities (") +
                   (ctx.backend == Backend::trigonometric ? "trig" : "elliptic") + ")";
    const int n = opt.sample.count;
    const auto seed = opt.sample.seed;
    report.add(make_record("fay", fay, opt.tolerance, n, seed));
    report.add(make_record("phi_product_wp", prod_wp, opt.tolerance, n, seed));
    report.add(make_record("phi_product_f0", prod_f0, opt.tolerance, n, seed));
    report.add(make_record("exchange_scalar_1", exch1, opt.tolerance, n, seed));
    report.add(make_record("exchange_scalar_2", exch2, opt.tolerance, n, seed));
    report.add(make_record("f0_wp_constant", f0wp, opt.tolerance, n, seed));
    return report;
}

}  // namespace laxkit
