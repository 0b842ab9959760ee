#include "laxkit/elliptic.hpp"

#include <array>
#include <cmath>

namespace laxkit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI{0.0, 1.0};

// All four z-derivative orders of the theta series in one pass.  The sum runs
// over half-integers k = n + 1/2 paired with -k; the pair magnitude is tested
// against the order-3 derivative weight so a single stopping rule covers all
// returned orders.  At least 8 pairs are always summed.
std::array<cplx, 4> theta_all(cplx z, cplx tau, double tol, int max_terms) {
    std::array<cplx, 4> s{};
    int n = 0;
    for (;;) {
        const double k = n + 0.5;
        const cplx base = std::exp(kI * kPi * tau * (k * k));
        const cplx ep = base * std::exp(2.0 * kI * kPi * k * (z + 0.5));
        const cplx em = base * std::exp(-2.0 * kI * kPi * k * (z + 0.5));
        cplx wp{1.0, 0.0}, wm{1.0, 0.0};
        const cplx dp = 2.0 * kI * kPi * k;
        for (int m = 0; m < 4; ++m) {
            s[m] += wp * ep + wm * em;
            wp *= dp;
            wm *= -dp;
        }
        ++n;
        const double w3 = std::pow(2.0 * kPi * k, 3);
        if (n >= 8 && (std::abs(ep) + std::abs(em)) * w3 < tol) break;
        if (n > max_terms)
            throw std::runtime_error(
                "theta series did not reach tol " + std::to_string(tol) + " within " +
                std::to_string(max_terms) + " terms (Im tau too small or |Im z| too large)");
    }
    for (auto& v : s) v = -v;
    return s;
}

}  // namespace

EllipticContext::EllipticContext(cplx tau_, Backend backend_, double series_tol_,
                                 int max_terms_, double pole_eps_)
    : tau(tau_), backend(backend_), series_tol(series_tol_), max_terms(max_terms_),
      pole_eps(pole_eps_) {
    if (backend == Backend::elliptic && tau.imag() <= 0.0)
        throw std::invalid_argument("elliptic backend requires Im(tau) > 0");
    if (!(series_tol > 0.0) || series_tol > 1e-4)
        throw std::invalid_argument("series_tol must lie in (0, 1e-4]");
    if (max_terms <= 0) throw std::invalid_argument("max_terms must be positive");
    if (!(pole_eps > 0.0)) throw std::invalid_argument("pole_eps must be positive");
}

EllipticContext EllipticContext::trigonometric(double series_tol_, double pole_eps_) {
    return EllipticContext(cplx{0.0, 1.0}, Backend::trigonometric, series_tol_, 400,
                           pole_eps_);
}

double EllipticContext::lattice_distance(cplx z) const {
    if (backend == Backend::trigonometric) {
        const double a = z.real() - std::round(z.real());
        return std::hypot(a, z.imag());
    }
    // Solve z = a + b tau for real a, b and fold both onto [-1/2, 1/2].
    const double b = z.imag() / tau.imag();
    const double a = z.real() - b * tau.real();
    const double da = a - std::round(a);
    const double db = b - std::round(b);
    return std::abs(da + db * tau);
}

void EllipticContext::require_off_pole(cplx z, const char* what) const {
    if (lattice_distance(z) < pole_eps)
        throw std::domain_error(std::string(what) + ": argument within pole_eps=" +
                                std::to_string(pole_eps) + " of the period lattice");
}

cplx EllipticContext::theta(cplx z, int order) const {
    if (order < 0 || order > 3)
        throw std::invalid_argument("theta: order must be in 0..3");
    if (backend == Backend::trigonometric) {
        switch (order) {
            case 0: return std::sin(kPi * z) / kPi;
            case 1: return std::cos(kPi * z);
            case 2: return -kPi * std::sin(kPi * z);
            default: return -kPi * kPi * std::cos(kPi * z);
        }
    }
    return theta_all(z, tau, series_tol, max_terms)[order];
}

cplx EllipticContext::e1(cplx z) const {
    require_off_pole(z, "e1");
    if (backend == Backend::trigonometric)
        return kPi * std::cos(kPi * z) / std::sin(kPi * z);
    const auto t = theta_all(z, tau, series_tol, max_terms);
    return t[1] / t[0];
}

cplx EllipticContext::phi(cplx z, cplx q) const {
    require_off_pole(z, "phi(z,.)");
    require_off_pole(q, "phi(.,q)");
    if (backend == Backend::trigonometric)
        return kPi * std::cos(kPi * z) / std::sin(kPi * z) +
               kPi * std::cos(kPi * q) / std::sin(kPi * q);
    return theta(cplx{0.0, 0.0}, 1) * theta(z + q) / (theta(z) * theta(q));
}

cplx EllipticContext::f(cplx z, cplx q) const {
    require_off_pole(z, "f(z,.)");
    require_off_pole(q, "f(.,q)");
    if (backend == Backend::trigonometric) {
        const cplx s = std::sin(kPi * q);
        return -kPi * kPi / (s * s);
    }
    return phi(z, q) * (e1(z + q) - e1(q));
}

cplx EllipticContext::f0(cplx q) const {
    require_off_pole(q, "f0");
    if (backend == Backend::trigonometric) {
        const cplx s = std::sin(kPi * q);
        return -kPi * kPi / (s * s);
    }
    const auto t = theta_all(q, tau, series_tol, max_terms);
    const cplx l1 = t[1] / t[0];
    return t[2] / t[0] - l1 * l1;
}

cplx EllipticContext::theta3_over_theta1() const {
    if (backend == Backend::trigonometric) return cplx{-kPi * kPi, 0.0};
    const auto t = theta_all(cplx{0.0, 0.0}, tau, series_tol, max_terms);
    return t[3] / t[1];
}

cplx EllipticContext::wp(cplx z) const {
    return -f0(z) + theta3_over_theta1() / 3.0;
}

cplx EllipticContext::wp_prime(cplx z) const {
    require_off_pole(z, "wp_prime");
    if (backend == Backend::trigonometric) {
        const cplx s = std::sin(kPi * z);
        return -2.0 * kPi * kPi * kPi * std::cos(kPi * z) / (s * s * s);
    }
    const auto t = theta_all(z, tau, series_tol, max_terms);
    const cplx l1 = t[1] / t[0];
    const cplx d3log = t[3] / t[0] - 3.0 * t[2] * t[1] / (t[0] * t[0]) + 2.0 * l1 * l1 * l1;
    return -d3log;
}

std::pair<cplx, cplx> EllipticContext::weierstrass(cplx z) const {
    return {wp(z), wp_prime(z)};
}

}  // namespace laxkit
