#include "laxkit/rmodel.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace laxkit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI(0.0, 1.0);

// ---- Baxter-Belavin ------------------------------------------------------
// R^z(q) = sum_a T_a (x) T_{-a} exp(2 pi i a2 q / m) phi(q, z + w_a),
// w_a = (a1 + a2 tau)/m.  The a = 0 term carries phi(q, z); the classical
// limit replaces it by E1(q) (z^0 coefficient) and drops nothing else because
// phi(q, w_a) is regular at z = 0 for a != 0.
class BaxterBelavin final : public RModel {
  public:
    BaxterBelavin(int local_dim, const EllipticContext& ctx) : m_(local_dim), ctx_(ctx) {
        if (m_ < 1) throw std::invalid_argument("baxter_belavin: local_dim must be >= 1");
        if (ctx_.backend != Backend::elliptic)
            throw std::invalid_argument("baxter_belavin: requires the elliptic backend");
        for (int a1 = 0; a1 < m_; ++a1)
            for (int a2 = 0; a2 < m_; ++a2)
                terms_.push_back({a1, a2,
                                  m_ == 1 ? Operator::identity(SpaceDescriptor(2, 1))
                                          : kron(heisenberg_t(a1, a2, m_),
                                                 heisenberg_t(-a1, -a2, m_))});
    }

    ModelKind kind() const override { return ModelKind::baxter_belavin; }
    std::string name() const override { return "bb:N=" + std::to_string(m_); }
    int local_dim() const override { return m_; }
    const EllipticContext& ctx() const override { return ctx_; }

    Operator r_quantum(cplx z, cplx q) const override {
        Operator out{pair_space()};
        for (const auto& t : terms_)
            out += t.tt * (phase(t, q) * ctx_.phi(q, z + omega(t)));
        return out;
    }

    Operator r_derivative_f(cplx z, cplx q) const override {
        Operator out{pair_space()};
        for (const auto& t : terms_) {
            const cplx w = z + omega(t);
            const cplx extra = 2.0 * kPi * kI * static_cast<double>(t.a2) / static_cast<double>(m_);
            out += t.tt * (phase(t, q) * ctx_.phi(q, w) * (extra + ctx_.e1(q + w) - ctx_.e1(q)));
        }
        return out;
    }

    Operator r_classical(cplx q) const override {
        Operator out = Operator::identity(pair_space()) * ctx_.e1(q);
        for (const auto& t : terms_) {
            if (t.a1 == 0 && t.a2 == 0) continue;
            out += t.tt * (phase(t, q) * ctx_.phi(q, omega(t)));
        }
        return out;
    }

    Operator f0_classical(cplx q) const override {
        Operator out = Operator::identity(pair_space()) * ctx_.f0(q);
        for (const auto& t : terms_) {
            if (t.a1 == 0 && t.a2 == 0) continue;
            const cplx w = omega(t);
            const cplx extra = 2.0 * kPi * kI * static_cast<double>(t.a2) / static_cast<double>(m_);
            out += t.tt * (phase(t, q) * ctx_.phi(q, w) * (extra + ctx_.e1(q + w) - ctx_.e1(q)));
        }
        return out;
    }

    Operator singular_part() const override { return Operator::identity(pair_space()); }

    cplx unitarity_factor(cplx z, cplx q) const override {
        const double m2 = static_cast<double>(m_) * m_;
        return m2 * (ctx_.wp(static_cast<double>(m_) * z) - ctx_.wp(q));
    }

    cplx exchange_factor(cplx q) const override {
        return static_cast<double>(m_) * m_ * ctx_.wp_prime(q);
    }

    double coupling_scale() const override { return static_cast<double>(m_); }

  private:
    struct Term {
        int a1, a2;
        Operator tt;
    };

    cplx omega(const Term& t) const {
        return (static_cast<double>(t.a1) + static_cast<double>(t.a2) * ctx_.tau) /
               static_cast<double>(m_);
    }
    cplx phase(const Term& t, cplx q) const {
        return std::exp(2.0 * kPi * kI * static_cast<double>(t.a2) * q / static_cast<double>(m_));
    }

    int m_;
    EllipticContext ctx_;
    std::vector<Term> terms_;
};

// ---- permutation-Kronecker -------------------------------------------------
// R^z(q) = P phi(z,q): everything is the flip operator times a scalar from
// the elliptic core, on either backend.
class PermutationKronecker final : public RModel {
  public:
    PermutationKronecker(int local_dim, const EllipticContext& ctx)
        : m_(local_dim), ctx_(ctx), p_(permutation_p(local_dim)) {
        if (m_ < 2) throw std::invalid_argument("permutation_kronecker: local_dim must be >= 2");
    }

    ModelKind kind() const override { return ModelKind::permutation_kronecker; }
    std::string name() const override {
        return "perm:N=" + std::to_string(m_) +
               (ctx_.backend == Backend::trigonometric ? ":trig" : ":elliptic");
    }
    int local_dim() const override { return m_; }
    const EllipticContext& ctx() const override { return ctx_; }

    Operator r_quantum(cplx z, cplx q) const override { return p_ * ctx_.phi(z, q); }
    Operator r_derivative_f(cplx z, cplx q) const override { return p_ * ctx_.f(z, q); }
    Operator r_classical(cplx q) const override { return p_ * ctx_.e1(q); }
    Operator f0_classical(cplx q) const override { return p_ * ctx_.f0(q); }

    Operator singular_part() const override { return p_; }
    cplx unitarity_factor(cplx z, cplx q) const override { return ctx_.wp(z) - ctx_.wp(q); }
    cplx exchange_factor(cplx q) const override { return ctx_.wp_prime(q); }
    double coupling_scale() const override { return 1.0; }

  private:
    int m_;
    EllipticContext ctx_;
    Operator p_;
};

// ---- XYZ -------------------------------------------------------------------
// Baxter's elliptic R-matrix in the sigma_a (x) sigma_a form with half-period
// arguments; the a = 1,2 terms carry the exp(i pi q) quasi-periodicity factor.
class XyzModel final : public RModel {
  public:
    explicit XyzModel(const EllipticContext& ctx)
        : ctx_(ctx), ss_{kron(pauli(0), pauli(0)), kron(pauli(1), pauli(1)),
                         kron(pauli(2), pauli(2)), kron(pauli(3), pauli(3))} {
        if (ctx_.backend != Backend::elliptic)
            throw std::invalid_argument("xyz: requires the elliptic backend");
    }

    ModelKind kind() const override { return ModelKind::xyz; }
    std::string name() const override { return "xyz"; }
    int local_dim() const override { return 2; }
    const EllipticContext& ctx() const override { return ctx_; }

    Operator r_quantum(cplx z, cplx q) const override {
        Operator out = ss_[0] * ctx_.phi(q, z);
        for (int a = 1; a <= 3; ++a) out += ss_[a] * (pre(a, q) * ctx_.phi(q, z + om(a)));
        return out;
    }

    Operator r_derivative_f(cplx z, cplx q) const override {
        Operator out = ss_[0] * (ctx_.phi(q, z) * (ctx_.e1(q + z) - ctx_.e1(q)));
        for (int a = 1; a <= 3; ++a) {
            const cplx w = z + om(a);
            out += ss_[a] * (pre(a, q) * ctx_.phi(q, w) * (ex(a) + ctx_.e1(q + w) - ctx_.e1(q)));
        }
        return out;
    }

    Operator r_classical(cplx q) const override {
        Operator out = ss_[0] * ctx_.e1(q);
        for (int a = 1; a <= 3; ++a) out += ss_[a] * (pre(a, q) * ctx_.phi(q, om(a)));
        return out;
    }

    Operator f0_classical(cplx q) const override {
        Operator out = ss_[0] * ctx_.f0(q);
        for (int a = 1; a <= 3; ++a) {
            const cplx w = om(a);
            out += ss_[a] * (pre(a, q) * ctx_.phi(q, w) * (ex(a) + ctx_.e1(q + w) - ctx_.e1(q)));
        }
        return out;
    }

    Operator singular_part() const override { return Operator::identity(pair_space()); }
    cplx unitarity_factor(cplx z, cplx q) const override {
        return 4.0 * (ctx_.wp(2.0 * z) - ctx_.wp(q));
    }
    cplx exchange_factor(cplx q) const override { return 4.0 * ctx_.wp_prime(q); }
    double coupling_scale() const override { return 2.0; }

  private:
    cplx om(int a) const {
        switch (a) {
            case 1: return ctx_.tau / 2.0;
            case 2: return (ctx_.tau + 1.0) / 2.0;
            default: return cplx(0.5, 0.0);
        }
    }
    // quasi-periodicity prefactor and its logarithmic derivative in q
    cplx pre(int a, cplx q) const { return a == 3 ? cplx(1.0, 0.0) : std::exp(kI * kPi * q); }
    cplx ex(int a) const { return a == 3 ? cplx(0.0, 0.0) : kI * kPi; }

    EllipticContext ctx_;
    Operator ss_[4];
};

// ---- XXZ 6-vertex ----------------------------------------------------------
// Trigonometric model written directly in closed form; F^z is z-independent,
// so F^0 coincides with it.
class XxzModel final : public RModel {
  public:
    explicit XxzModel(const EllipticContext& ctx)
        : ctx_(ctx), e_(kron(pauli(0), pauli(0))), z3_(kron(pauli(3), pauli(3))),
          xy_(kron(pauli(1), pauli(1)) + kron(pauli(2), pauli(2))) {
        if (ctx_.backend != Backend::trigonometric)
            throw std::invalid_argument("xxz: requires the trigonometric backend");
    }

    ModelKind kind() const override { return ModelKind::xxz_six_vertex; }
    std::string name() const override { return "xxz"; }
    int local_dim() const override { return 2; }
    const EllipticContext& ctx() const override { return ctx_; }

    Operator r_quantum(cplx z, cplx q) const override {
        return (e_ + z3_) * (ct(z) + ct(q)) + (e_ - z3_) * sn(z) + xy_ * sn(q);
    }

    Operator r_derivative_f(cplx /*z*/, cplx q) const override { return f0_classical(q); }

    Operator r_classical(cplx q) const override { return (e_ + z3_) * ct(q) + xy_ * sn(q); }

    Operator f0_classical(cplx q) const override {
        const cplx s = std::sin(kPi * q);
        const cplx dct = -kPi * kPi / (s * s);
        const cplx dsn = dct * std::cos(kPi * q);
        return (e_ + z3_) * dct + xy_ * dsn;
    }

    Operator singular_part() const override { return Operator::identity(pair_space()) * 2.0; }
    cplx unitarity_factor(cplx z, cplx q) const override {
        return 4.0 * (ctx_.wp(z) - ctx_.wp(q));
    }
    cplx exchange_factor(cplx q) const override { return 4.0 * ctx_.wp_prime(q); }
    double coupling_scale() const override { return 2.0; }

  private:
    static cplx ct(cplx x) { return kPi * std::cos(kPi * x) / std::sin(kPi * x); }
    static cplx sn(cplx x) { return kPi / std::sin(kPi * x); }

    EllipticContext ctx_;
    Operator e_, z3_, xy_;
};

// ---- registry --------------------------------------------------------------

int parse_local_dim(const std::string& args) {
    // expects "N=<int>" as the first colon-separated token
    if (args.rfind("N=", 0) != 0)
        throw std::invalid_argument("model selector: expected N=<dim>, got '" + args + "'");
    const std::size_t colon = args.find(':');
    const std::string num = args.substr(2, colon == std::string::npos ? std::string::npos : colon - 2);
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(num, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("model selector: bad local dimension '" + num + "'");
    }
    if (used != num.size() || n < 1)
        throw std::invalid_argument("model selector: bad local dimension '" + num + "'");
    return n;
}

struct Registry {
    std::map<std::string, ModelFactory> factories;
    std::mutex mu;
};

Registry& registry() {
    static Registry reg = [] {
        Registry r;
        r.factories["bb"] = [](const std::string& args, const EllipticContext& ctx) {
            return make_baxter_belavin(parse_local_dim(args), ctx);
        };
        r.factories["perm"] = [](const std::string& args, const EllipticContext& ctx) {
            const int n = parse_local_dim(args);
            const std::size_t colon = args.find(':');
            std::string mode = colon == std::string::npos ? "elliptic" : args.substr(colon + 1);
            if (mode == "trig") {
                EllipticContext t = EllipticContext::trigonometric();
                t.series_tol = ctx.series_tol;
                t.max_terms = ctx.max_terms;
                t.pole_eps = ctx.pole_eps;
                return make_permutation_kronecker(n, t);
            }
            if (mode == "elliptic") return make_permutation_kronecker(n, ctx);
            throw std::invalid_argument("perm selector: unknown mode '" + mode + "'");
        };
        r.factories["xyz"] = [](const std::string& args, const EllipticContext& ctx) {
            if (!args.empty()) throw std::invalid_argument("xyz selector takes no arguments");
            return make_xyz(ctx);
        };
        r.factories["xxz"] = [](const std::string& args, const EllipticContext& ctx) {
            if (!args.empty()) throw std::invalid_argument("xxz selector takes no arguments");
            EllipticContext t = EllipticContext::trigonometric();
            t.series_tol = ctx.series_tol;
            t.max_terms = ctx.max_terms;
            t.pole_eps = ctx.pole_eps;
            return make_xxz(t);
        };
        return r;
    }();
    return reg;
}

}  // namespace

ModelPtr make_baxter_belavin(int local_dim, const EllipticContext& ctx) {
    return std::make_shared<BaxterBelavin>(local_dim, ctx);
}

ModelPtr make_permutation_kronecker(int local_dim, const EllipticContext& ctx) {
    return std::make_shared<PermutationKronecker>(local_dim, ctx);
}

ModelPtr make_xyz(const EllipticContext& ctx) { return std::make_shared<XyzModel>(ctx); }

ModelPtr make_xxz(const EllipticContext& ctx) { return std::make_shared<XxzModel>(ctx); }

void register_model_family(const std::string& key, ModelFactory factory) {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    reg.factories[key] = std::move(factory);
}

std::vector<std::string> registered_model_families() {
    Registry& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    std::vector<std::string> keys;
    for (const auto& kv : reg.factories) keys.push_back(kv.first);
    return keys;
}

ModelPtr make_model(const std::string& selector, const EllipticContext& ctx) {
    const std::size_t colon = selector.find(':');
    const std::string key = selector.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : selector.substr(colon + 1);
    ModelFactory factory;
    {
        Registry& reg = registry();
        std::lock_guard<std::mutex> lock(reg.mu);
        auto it = reg.factories.find(key);
        if (it == reg.factories.end())
            throw std::invalid_argument("unknown model family '" + key + "'");
        factory = it->second;
    }
    return factory(args, ctx);
}

}  // namespace laxkit
