#ifndef LAXKIT_CALOGERO_HPP
#define LAXKIT_CALOGERO_HPP

// Classical many-body layer: Hamiltonians and equations of motion for the
// second and third flows, the scalar N x N Lax pair, and its operator-valued
// generalization built from an R-matrix family.  Scalar matrices are stored
// as Operators on the space {n_sites = N, local_dim = 1, has_aux = true}
// (total dimension N), so the degenerate local_dim = 1 operator-valued pair
// and the scalar pair live on literally the same space and can be compared
// entrywise.
//
// Conventions:
//   * flows are labelled by the integer k in {2, 3};
//   * q_ij always means q_i - q_j;
//   * the operator-valued Lax equation holds against equations of motion at
//     the rescaled coupling (coupling_scale() * nu); the scale is a property
//     of the family (local_dim for the identity-residue families, 1 for the
//     permutation-Kronecker one).

#include <vector>

#include "laxkit/elliptic.hpp"
#include "laxkit/operator.hpp"
#include "laxkit/rmodel.hpp"
#include "laxkit/sampler.hpp"

namespace laxkit {

struct PhasePoint {
    std::vector<cplx> q;
    std::vector<cplx> p;
    cplx nu{1.0, 0.0};

    int size() const { return static_cast<int>(q.size()); }
};

// N >= 2, q and p of equal length, every pairwise difference off the lattice.
void validate_phase(const PhasePoint& ph, const EllipticContext& ctx);

// Default sampler used by the CLI and tests: real positions in (0,1) with
// minimum separation, real momenta in [-1, 1].
PhasePoint sample_phase(Rng& rng, int n, cplx nu, double min_gap = 0.05);

struct Eom {
    std::vector<cplx> qdot;
    std::vector<cplx> pdot;
};

cplx hamiltonian(int flow, const PhasePoint& ph, const EllipticContext& ctx);
Eom eom(int flow, const PhasePoint& ph, const EllipticContext& ctx);

// |{H_2, H_3}| from analytic gradients of both Hamiltonians.
double poisson_h2_h3(const PhasePoint& ph, const EllipticContext& ctx);

// ---- scalar Lax pair -------------------------------------------------------

Operator scalar_lax(const PhasePoint& ph, cplx z, const EllipticContext& ctx);
Operator scalar_m(int flow, const PhasePoint& ph, cplx z, const EllipticContext& ctx);
Operator scalar_lax_time_derivative(int flow, const PhasePoint& ph, cplx z,
                                    const EllipticContext& ctx);
double scalar_lax_residual(int flow, const PhasePoint& ph, cplx z, const EllipticContext& ctx);

// ---- operator-valued Lax pair ----------------------------------------------

struct RmvOptions {
    bool ablate_f0 = false;     // drop the F0 block of M^(2) (flow-2 control)
    bool ablate_last = false;   // drop the last diagonal line of M^(3)
    bool alt_prime = false;     // alternative primed-sum reading: allow b = i
                                // in the diagonal [F0_bc, r_ic] sum of M^(3)
    bool unscaled_coupling = false;  // time derivative against nu, not scale*nu
};

Operator rmv_lax(const RModel& model, const PhasePoint& ph, cplx z);
Operator rmv_m(int flow, const RModel& model, const PhasePoint& ph, cplx z,
               const RmvOptions& opt = {});
Operator rmv_lax_time_derivative(int flow, const RModel& model, const PhasePoint& ph, cplx z,
                                 const RmvOptions& opt = {});
double rmv_lax_residual(int flow, const RModel& model, const PhasePoint& ph, cplx z,
                        const RmvOptions& opt = {});

}  // namespace laxkit

#endif
