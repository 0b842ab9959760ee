#ifndef LAXKIT_ELLIPTIC_HPP
#define LAXKIT_ELLIPTIC_HPP

// Special-function layer: the odd theta function and everything derived from
// it (Kronecker function phi, its q-derivative f, E1, the Weierstrass pair).
// Convention:
//
//   theta(z|tau) = -sum_{k in Z+1/2} exp(pi i tau k^2 + 2 pi i k (z+1/2))
//
// which is odd in z with theta'(0) > 0 for purely imaginary tau, and has the
// quasi-periods theta(z+1) = -theta(z), theta(z+tau) = -e^{-pi i tau - 2 pi i z} theta(z).
// All downstream constants (theta'''(0)/theta'(0)) are invariant under a
// rescaling theta -> c*theta, so the normalization choice is safe.
//
// The trigonometric backend replaces the series by the Im(tau) -> +inf limits
//   theta -> sin(pi z)/pi,  E1 -> pi cot(pi z),  phi -> pi(cot(pi z)+cot(pi q)),
//   f -> -pi^2/sin^2(pi q), wp -> pi^2/sin^2(pi z) - pi^2/3,
// kept as closed forms to avoid large-Im(tau) cancellation.

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace laxkit {

using cplx = std::complex<double>;

enum class Backend { elliptic, trigonometric };

struct EllipticContext {
    cplx tau{0.0, 1.0};
    Backend backend = Backend::elliptic;
    double series_tol = 1e-14;  // absolute truncation tolerance per term-sum
    int max_terms = 400;        // cap on +-k index pairs before giving up
    double pole_eps = 1e-6;     // domain guard: min distance to the period lattice

    EllipticContext() = default;
    EllipticContext(cplx tau_, Backend backend_, double series_tol_ = 1e-14,
                    int max_terms_ = 400, double pole_eps_ = 1e-6);

    static EllipticContext trigonometric(double series_tol_ = 1e-14,
                                         double pole_eps_ = 1e-6);

    // d^order/dz^order of theta, order in 0..3 (term-wise differentiated series).
    cplx theta(cplx z, int order = 0) const;

    cplx e1(cplx z) const;              // theta'(z)/theta(z)
    cplx phi(cplx z, cplx q) const;     // theta'(0) theta(z+q) / (theta(z) theta(q))
    cplx f(cplx z, cplx q) const;       // d/dq phi(z,q) = phi(z,q) (E1(z+q) - E1(q))
    cplx f0(cplx q) const;              // d^2/dq^2 log theta(q) = f(0,q)
    cplx wp(cplx z) const;              // Weierstrass wp = -f0(z) + theta'''(0)/(3 theta'(0))
    cplx wp_prime(cplx z) const;        // wp' = -d^3/dz^3 log theta(z)
    std::pair<cplx, cplx> weierstrass(cplx z) const;  // (wp, wp')
    cplx theta3_over_theta1() const;    // theta'''(0)/theta'(0)  (trig: -pi^2)

    // Distance from z to the nearest point of the period lattice (Z + tau Z for
    // the elliptic backend, Z for the trigonometric one).
    double lattice_distance(cplx z) const;
    // Throws std::domain_error when z is within pole_eps of the lattice.
    void require_off_pole(cplx z, const char* what) const;
};

// Free-function spellings of the context methods, under the names used in the
// rest of the code base's documentation.
inline cplx theta(const EllipticContext& ctx, cplx z, int order = 0) { return ctx.theta(z, order); }
inline cplx kronecker_phi(const EllipticContext& ctx, cplx z, cplx q) { return ctx.phi(z, q); }
inline cplx phi_dq(const EllipticContext& ctx, cplx z, cplx q) { return ctx.f(z, q); }
inline cplx e1(const EllipticContext& ctx, cplx z) { return ctx.e1(z); }
inline cplx f0(const EllipticContext& ctx, cplx q) { return ctx.f0(q); }
inline std::pair<cplx, cplx> weierstrass(const EllipticContext& ctx, cplx z) {
    return ctx.weierstrass(z);
}

}  // namespace laxkit

#endif
