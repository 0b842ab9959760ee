#ifndef LAXKIT_SCALAR_SUITE_HPP
#define LAXKIT_SCALAR_SUITE_HPP

// Seeded residual checks of the scalar function identities everything else
// rests on: the Fay identity for the Kronecker function, the phi-product
// formulas, the two scalar exchange identities, and the constant relating
// f0 and wp.  A negative-control mode perturbs phi by +0.01 to demonstrate
// the checks have teeth.

#include "laxkit/elliptic.hpp"
#include "laxkit/report.hpp"
#include "laxkit/sampler.hpp"

namespace laxkit {

struct ScalarSuiteOptions {
    SampleSpec sample;
    double tolerance = 1e-10;       // absolute, per identity
    bool negative_control = false;  // replace phi by phi + 0.01 everywhere
};

CheckReport scalar_identity_suite(const EllipticContext& ctx, const ScalarSuiteOptions& opt);

}  // namespace laxkit

#endif
