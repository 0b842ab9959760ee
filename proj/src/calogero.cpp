#include "laxkit/calogero.hpp"

#include <cmath>
#include <stdexcept>

namespace laxkit {

namespace {

void require_flow(int flow) {
    if (flow != 2 && flow != 3)
        throw std::invalid_argument("flow must be 2 or 3, got " + std::to_string(flow));
}

double rel_norm(const Operator& lhs, const Operator& rhs) {
    return frobenius_norm(lhs - rhs) / std::max(1.0, frobenius_norm(rhs));
}

SpaceDescriptor scalar_space(int n) { return SpaceDescriptor(n, 1, true); }

}  // namespace

void validate_phase(const PhasePoint& ph, const EllipticContext& ctx) {
    const int n = ph.size();
    if (n < 2) throw std::invalid_argument("phase point needs at least two particles");
    if (ph.p.size() != ph.q.size())
        throw std::invalid_argument("phase point: q and p have different lengths");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            ctx.require_off_pole(ph.q[i] - ph.q[j], "pairwise position difference");
}

PhasePoint sample_phase(Rng& rng, int n, cplx nu, double min_gap) {
    PhasePoint ph;
    const auto qs = rng.separated(n, 0.02, 0.98, min_gap);
    ph.q.assign(qs.begin(), qs.end());
    ph.p.resize(n);
    for (auto& v : ph.p) v = rng.uniform(-1.0, 1.0);
    ph.nu = nu;
    return ph;
}

cplx hamiltonian(int flow, const PhasePoint& ph, const EllipticContext& ctx) {
    require_flow(flow);
    validate_phase(ph, ctx);
    const int n = ph.size();
    const cplx nu2 = ph.nu * ph.nu;
    cplx h(0.0, 0.0);
    if (flow == 2) {
        for (int i = 0; i < n; ++i) h += ph.p[i] * ph.p[i] / 2.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) h -= nu2 * ctx.wp(ph.q[i] - ph.q[j]);
    } else {
        for (int i = 0; i < n; ++i) h += ph.p[i] * ph.p[i] * ph.p[i] / 3.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (j != i) h -= nu2 * ph.p[i] * ctx.wp(ph.q[i] - ph.q[j]);
    }
    return h;
}

Eom eom(int flow, const PhasePoint& ph, const EllipticContext& ctx) {
    require_flow(flow);
    validate_phase(ph, ctx);
    const int n = ph.size();
    const cplx nu2 = ph.nu * ph.nu;
    Eom out;
    out.qdot.assign(n, cplx(0.0, 0.0));
    out.pdot.assign(n, cplx(0.0, 0.0));
    if (flow == 2) {
        out.qdot = ph.p;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (k != i) out.pdot[i] += nu2 * ctx.wp_prime(ph.q[i] - ph.q[k]);
    } else {
        for (int i = 0; i < n; ++i) {
            out.qdot[i] = ph.p[i] * ph.p[i];
            for (int k = 0; k < n; ++k)
                if (k != i) {
                    out.qdot[i] -= nu2 * ctx.wp(ph.q[i] - ph.q[k]);
                    out.pdot[i] += nu2 * (ph.p[i] + ph.p[k]) * ctx.wp_prime(ph.q[i] - ph.q[k]);
                }
        }
    }
    return out;
}

double poisson_h2_h3(const PhasePoint& ph, const EllipticContext& ctx) {
    validate_phase(ph, ctx);
    const int n = ph.size();
    const cplx nu2 = ph.nu * ph.nu;
    // analytic gradients: dH2/dq_i = -nu^2 sum wp'(q_ik); dH2/dp = p;
    // dH3/dq_i = -nu^2 sum (p_i + p_k) wp'(q_ik); dH3/dp_i = p_i^2 - nu^2 sum wp(q_ik)
    cplx bracket(0.0, 0.0);
    for (int i = 0; i < n; ++i) {
        cplx dh2q(0.0, 0.0), dh3q(0.0, 0.0), dh3p = ph.p[i] * ph.p[i];
        for (int k = 0; k < n; ++k)
            if (k != i) {
                const cplx wpp = ctx.wp_prime(ph.q[i] - ph.q[k]);
                dh2q -= nu2 * wpp;
                dh3q -= nu2 * (ph.p[i] + ph.p[k]) * wpp;
                dh3p -= nu2 * ctx.wp(ph.q[i] - ph.q[k]);
            }
        bracket += dh2q * dh3p - ph.p[i] * dh3q;  // {H2,H3} = sum dH2/dq dH3/dp - dH2/dp dH3/dq
    }
    return std::abs(bracket);
}

// ---- scalar Lax pair -------------------------------------------------------

Operator scalar_lax(const PhasePoint& ph, cplx z, const EllipticContext& ctx) {
    validate_phase(ph, ctx);
    ctx.require_off_pole(z, "spectral parameter");
    const int n = ph.size();
    Operator l{scalar_space(n)};
    for (int i = 0; i < n; ++i) {
        l.at(i, i) = ph.p[i];
        for (int j = 0; j < n; ++j)
            if (j != i) l.at(i, j) = ph.nu * ctx.phi(z, ph.q[i] - ph.q[j]);
    }
    return l;
}

Operator scalar_m(int flow, const PhasePoint& ph, cplx z, const EllipticContext& ctx) {
    require_flow(flow);
    validate_phase(ph, ctx);
    ctx.require_off_pole(z, "spectral parameter");
    const int n = ph.size();
    const cplx nu2 = ph.nu * ph.nu;
    Operator m{scalar_space(n)};
    if (flow == 2) {
        for (int i = 0; i < n; ++i) {
            cplx d(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                if (k != i) d -= ctx.f0(ph.q[i] - ph.q[k]);
            m.at(i, i) = ph.nu * d;
            for (int j = 0; j < n; ++j)
                if (j != i) m.at(i, j) = ph.nu * ctx.f(z, ph.q[i] - ph.q[j]);
        }
    } else {
        for (int i = 0; i < n; ++i) {
            cplx d(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                if (k != i) d -= (ph.p[i] + ph.p[k]) * ctx.f0(ph.q[i] - ph.q[k]);
            m.at(i, i) = ph.nu * d;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                cplx s = ph.nu * (ph.p[i] + ph.p[j]) * ctx.f(z, ph.q[i] - ph.q[j]);
                for (int k = 0; k < n; ++k)
                    if (k != i && k != j)
                        s += nu2 * (ctx.phi(z, ph.q[i] - ph.q[k]) * ctx.f(z, ph.q[k] - ph.q[j]) -
                                    ctx.phi(z, ph.q[i] - ph.q[j]) * ctx.f0(ph.q[k] - ph.q[j]));
                m.at(i, j) = s;
            }
        }
    }
    return m;
}

Operator scalar_lax_time_derivative(int flow, const PhasePoint& ph, cplx z,
                                    const EllipticContext& ctx) {
    const Eom dot = eom(flow, ph, ctx);
    const int n = ph.size();
    Operator d{scalar_space(n)};
    for (int i = 0; i < n; ++i) {
        d.at(i, i) = dot.pdot[i];
        for (int j = 0; j < n; ++j)
            if (j != i)
                d.at(i, j) = ph.nu * ctx.f(z, ph.q[i] - ph.q[j]) * (dot.qdot[i] - dot.qdot[j]);
    }
    return d;
}

double scalar_lax_residual(int flow, const PhasePoint& ph, cplx z, const EllipticContext& ctx) {
    const Operator l = scalar_lax(ph, z, ctx);
    const Operator m = scalar_m(flow, ph, z, ctx);
    const Operator lm = commutator(l, m);
    const Operator d = scalar_lax_time_derivative(flow, ph, z, ctx);
    return rel_norm(d, lm);
}

// ---- operator-valued Lax pair ----------------------------------------------

namespace {

// common plumbing for the block operators
struct RmvBuilder {
    const RModel& model;
    const PhasePoint& ph;
    int n;
    SpaceDescriptor qspace;

    RmvBuilder(const RModel& m, const PhasePoint& ph_)
        : model(m), ph(ph_), n(ph_.size()),
          qspace(ph_.size(), m.local_dim(), false) {
        validate_phase(ph, model.ctx());
    }

    cplx qij(int i, int j) const { return ph.q[i] - ph.q[j]; }

    Operator emb(const Operator& op, int i, int j) const {  // 0-based sites
        return embed_pair(op, i + 1, j + 1, qspace);
    }
};

}  // namespace

Operator rmv_lax(const RModel& model, const PhasePoint& ph, cplx z) {
    RmvBuilder b(model, ph);
    model.ctx().require_off_pole(z, "spectral parameter");
    const Operator id = Operator::identity(b.qspace);
    std::vector<std::vector<Operator>> blocks(b.n, std::vector<Operator>(b.n, Operator(b.qspace)));
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            if (i == j)
                blocks[i][j] = id * ph.p[i];
            else
                blocks[i][j] = b.emb(model.r_quantum(z, b.qij(i, j)), i, j) * ph.nu;
        }
    return aux_assemble(blocks);
}

Operator rmv_m(int flow, const RModel& model, const PhasePoint& ph, cplx z,
               const RmvOptions& opt) {
    require_flow(flow);
    RmvBuilder b(model, ph);
    model.ctx().require_off_pole(z, "spectral parameter");
    const int n = b.n;
    const cplx nu = ph.nu;
    const cplx nu2 = nu * nu;
    std::vector<std::vector<Operator>> blocks(n, std::vector<Operator>(n, Operator(b.qspace)));

    if (flow == 2) {
        // the same F0 sum sits on every diagonal block
        Operator f0sum(b.qspace);
        for (int k = 0; k < n; ++k)
            for (int m = k + 1; m < n; ++m)
                f0sum += b.emb(model.f0_classical(b.qij(k, m)), k, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    Operator d(b.qspace);
                    for (int k = 0; k < n; ++k)
                        if (k != i) d -= b.emb(model.f0_classical(b.qij(i, k)), i, k);
                    blocks[i][j] = d * nu;
                    if (!opt.ablate_f0) blocks[i][j] += f0sum * nu;
                } else {
                    blocks[i][j] = b.emb(model.r_derivative_f(z, b.qij(i, j)), i, j) * nu;
                }
            }
        return aux_assemble(blocks);
    }

    // flow 3: diagonal pieces shared by every block index i
    Operator unord(b.qspace);  // sum over pairwise-distinct (a,b,c) of [F0_ab, r_cb]
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb)
            for (int c = 0; c < n; ++c) {
                if (a == bb || bb == c || a == c) continue;
                const Operator f0ab = b.emb(model.f0_classical(b.qij(a, bb)), a, bb);
                const Operator rcb = b.emb(model.r_classical(b.qij(c, bb)), c, bb);
                unord += commutator(f0ab, rcb);
            }
    Operator pf0(b.qspace);  // sum over b != c of p_b F0_bc
    for (int bb = 0; bb < n; ++bb)
        for (int c = 0; c < n; ++c)
            if (bb != c) pf0 += b.emb(model.f0_classical(b.qij(bb, c)), bb, c) * ph.p[bb];

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                Operator d(b.qspace);
                for (int k = 0; k < n; ++k)
                    if (k != i)
                        d -= b.emb(model.f0_classical(b.qij(i, k)), i, k) * ((ph.p[i] + ph.p[k]) * nu);
                if (!opt.ablate_last) {
                    Operator ic(b.qspace);  // sum of [F0_bc, r_ic] over distinct indices
                    for (int bb = 0; bb < n; ++bb)
                        for (int c = 0; c < n; ++c) {
                            const bool keep = opt.alt_prime ? (bb != c && c != i)
                                                            : (bb != c && c != i && bb != i);
                            if (!keep) continue;
                            const Operator f0bc = b.emb(model.f0_classical(b.qij(bb, c)), bb, c);
                            const Operator ric = b.emb(model.r_classical(b.qij(i, c)), i, c);
                            ic += commutator(f0bc, ric);
                        }
                    d += ic * nu2 + pf0 * nu - unord * (nu2 / 3.0);
                }
                blocks[i][j] = d;
            } else {
                Operator s = b.emb(model.r_derivative_f(z, b.qij(i, j)), i, j) *
                             (nu * (ph.p[i] + ph.p[j]));
                for (int k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    const Operator rik = b.emb(model.r_quantum(z, b.qij(i, k)), i, k);
                    const Operator fkj = b.emb(model.r_derivative_f(z, b.qij(k, j)), k, j);
                    const Operator f0kj = b.emb(model.f0_classical(b.qij(k, j)), k, j);
                    const Operator rij = b.emb(model.r_quantum(z, b.qij(i, j)), i, j);
                    s += (rik * fkj - f0kj * rij) * nu2;
                }
                blocks[i][j] = s;
            }
        }
    return aux_assemble(blocks);
}

Operator rmv_lax_time_derivative(int flow, const RModel& model, const PhasePoint& ph, cplx z,
                                 const RmvOptions& opt) {
    require_flow(flow);
    RmvBuilder b(model, ph);
    PhasePoint scaled = ph;
    if (!opt.unscaled_coupling) scaled.nu = ph.nu * model.coupling_scale();
    const Eom dot = eom(flow, scaled, model.ctx());
    const Operator id = Operator::identity(b.qspace);
    std::vector<std::vector<Operator>> blocks(b.n, std::vector<Operator>(b.n, Operator(b.qspace)));
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j) {
            if (i == j)
                blocks[i][j] = id * dot.pdot[i];
            else
                blocks[i][j] = b.emb(model.r_derivative_f(z, b.qij(i, j)), i, j) *
                               (ph.nu * (dot.qdot[i] - dot.qdot[j]));
        }
    return aux_assemble(blocks);
}

double rmv_lax_residual(int flow, const RModel& model, const PhasePoint& ph, cplx z,
                        const RmvOptions& opt) {
    const Operator l = rmv_lax(model, ph, z);
    const Operator m = rmv_m(flow, model, ph, z, opt);
    const Operator lm = commutator(l, m);
    const Operator d = rmv_lax_time_derivative(flow, model, ph, z, opt);
    return rel_norm(d, lm);
}

}  // namespace laxkit
