#include "laxkit/rmatrix_suite.hpp"

#include <cmath>
#include <stdexcept>

namespace laxkit {

namespace {

double rel(const Operator& lhs, const Operator& rhs) {
    return frobenius_norm(lhs - rhs) / std::max(1.0, frobenius_norm(lhs));
}

}  // namespace

CheckReport model_check_suite(const RModel& model, const ModelSuiteOptions& opt) {
    if (opt.sample.count < 1)
        throw std::invalid_argument("model_check_suite: sample count must be positive");

    Rng rng(opt.sample.seed);
    const int nt = model.local_dim();
    const SpaceDescriptor three(3, nt);
    const SpaceDescriptor pair = model.pair_space();
    const Operator id_pair = Operator::identity(pair);
    const Operator p = nt >= 2 ? permutation_p(nt) : Operator::identity(pair);

    const cplx ctrl(0.01, 0.0);
    const auto R = [&](cplx z, cplx q) {
        Operator r = model.r_quantum(z, q);
        if (opt.negative_control) r *= (cplx(1.0, 0.0) + ctrl * z);
        return r;
    };
    const auto swap_legs = [&](const Operator& m) { return p * m * p; };

    double aybe = 0.0, unit = 0.0, skew = 0.0, qybe = 0.0, cybe = 0.0, dcybe = 0.0,
           exch1 = 0.0, exch2 = 0.0;

    for (int s = 0; s < opt.sample.count; ++s) {
        cplx z, w;
        do {
            z = rng.box(0.1, 0.9, -0.15, 0.15);
            w = rng.box(0.1, 0.9, -0.15, 0.15);
        } while (std::abs(z - w) < opt.sample.min_gap);
        const auto qs = rng.separated(3, 0.02, 0.98, opt.sample.min_gap);
        const double qab = qs[0] - qs[1], qbc = qs[1] - qs[2], qac = qs[0] - qs[2];

        const auto emb = [&](const Operator& m, int i, int j) {
            return embed_pair(m, i, j, three);
        };

        // associative YBE, mixed spectral parameters
        {
            const Operator lhs = emb(R(z, qab), 1, 2) * emb(R(w, qbc), 2, 3);
            const Operator rhs = emb(R(w, qac), 1, 3) * emb(R(z - w, qab), 1, 2) +
                                 emb(R(w - z, qbc), 2, 3) * emb(R(z, qac), 1, 3);
            aybe = std::max(aybe, rel(lhs, rhs));
        }
        // unitarity: R_12(z,q) R_21(z,-q) = u(z,q) Id
        {
            const Operator lhs = R(z, qab) * swap_legs(R(z, -qab));
            unit = std::max(unit, rel(lhs, id_pair * model.unitarity_factor(z, qab)));
        }
        // skew-symmetry: R_12(z,q) = -R_21(-z,-q)
        skew = std::max(skew, rel(R(z, qab), -swap_legs(R(-z, -qab))));
        // quantum YBE at equal spectral parameter
        {
            const Operator a = emb(R(z, qab), 1, 2);
            const Operator b = emb(R(z, qac), 1, 3);
            const Operator c = emb(R(z, qbc), 2, 3);
            qybe = std::max(qybe, rel(a * b * c, c * b * a));
        }
        // classical YBE
        const Operator r12 = emb(model.r_classical(qab), 1, 2);
        const Operator r13 = emb(model.r_classical(qac), 1, 3);
        const Operator r23 = emb(model.r_classical(qbc), 2, 3);
        {
            const Operator sum =
                commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
            cybe = std::max(cybe, frobenius_norm(sum) / std::max(1.0, frobenius_norm(r12)));
        }
        // derivative of the classical YBE: the three bracket combinations agree
        {
            const Operator f12 = emb(model.f0_classical(qab), 1, 2);
            const Operator f13 = emb(model.f0_classical(qac), 1, 3);
            const Operator f23 = emb(model.f0_classical(qbc), 2, 3);
            const Operator r21 = emb(model.r_classical(-qab), 2, 1);
            const Operator r31 = emb(model.r_classical(-qac), 3, 1);
            const Operator r32 = emb(model.r_classical(-qbc), 3, 2);
            const Operator lhs1 = commutator(f12, r31 + r32);
            const Operator lhs2 = commutator(f13, r23 + r21);
            const Operator lhs3 = commutator(f23, r12 + r13);
            dcybe = std::max({dcybe, rel(lhs1, lhs2), rel(lhs1, lhs3)});
        }
        // exchange identity on two sites: R_12 F_21 - F_12 R_21 = w(q) Id
        {
            const Operator fab = model.r_derivative_f(z, qab);
            const Operator fba = swap_legs(model.r_derivative_f(z, -qab));
            const Operator rba = swap_legs(R(z, -qab));
            const Operator lhs = R(z, qab) * fba - fab * rba;
            exch1 = std::max(exch1, rel(lhs, id_pair * model.exchange_factor(qab)));
        }
        // exchange identity on three sites
        {
            const Operator lhs = emb(R(z, qab), 1, 2) * emb(model.r_derivative_f(z, qbc), 2, 3) -
                                 emb(model.r_derivative_f(z, qab), 1, 2) * emb(R(z, qbc), 2, 3);
            const Operator rzac = emb(R(z, qac), 1, 3);
            const Operator rhs = emb(model.f0_classical(qbc), 2, 3) * rzac -
                                 rzac * emb(model.f0_classical(qab), 1, 2);
            exch2 = std::max(exch2, rel(lhs, rhs));
        }
    }

    // Known, reproducible violations for the permutation-Kronecker family.
    const bool is_perm = model.kind() == ModelKind::permutation_kronecker;
    const bool perm_elliptic = is_perm && model.ctx().backend == Backend::elliptic;
    const auto cybe_status = is_perm ? ConjectureStatus::falsified : ConjectureStatus::verified;
    const auto dcybe_status =
        perm_elliptic ? ConjectureStatus::falsified : ConjectureStatus::verified;

    CheckReport report;
    report.title = "model identities (" + model.name() + ")";
    const int n = opt.sample.count;
    const auto seed = opt.sample.seed;
    const double tol = opt.tolerance;
    report.add(make_record("aybe", aybe, tol, n, seed));
    report.add(make_record("unitarity", unit, tol, n, seed));
    report.add(make_record("skew_symmetry", skew, tol, n, seed));
    report.add(make_record("qybe", qybe, tol, n, seed));
    report.add(make_record(
        "cybe", cybe, tol, n, seed, cybe_status,
        is_perm ? "fails identically for this family: the bracket sum is a nonzero multiple "
                  "of P_ab P_bc - P_ac P_ab (see README findings)"
                : ""));
    report.add(make_record(
        "dcybe", dcybe, tol, n, seed, dcybe_status,
        perm_elliptic ? "fails for this family on the elliptic backend (see README findings)"
                      : ""));
    report.add(make_record("exchange_1", exch1, tol, n, seed));
    report.add(make_record("exchange_2", exch2, tol, n, seed));
    return report;
}

}  // namespace laxkit
