#ifndef LAXKIT_RMODEL_HPP
#define LAXKIT_RMODEL_HPP

// R-matrix families on the two-site space (C^m)^(x2).  Every family supplies
// the quantum R-matrix R^z(q), its q-derivative F^z(q), the classical limit
// r(q) (the z^0 coefficient of the small-z expansion), and F^0(q) = d/dq r(q),
// together with the family's own normalization data:
//   * singular_part: the residue S in R^z(q) = S/z + r(q) + O(z);
//   * unitarity_factor u(z,q): R^z_12(q) R^z_21(-q) = u(z,q) Id;
//   * exchange_factor w(q): R^z_12 F^z_21 - F^z_12 R^z_21 = w(q) Id;
//   * coupling_scale: the constant by which the family rescales the coupling
//     when the scalar many-body Lax pair is promoted to R-matrix-valued form.
// Families are immutable after construction and safe to share across threads.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "laxkit/elliptic.hpp"
#include "laxkit/operator.hpp"

namespace laxkit {

enum class ModelKind { baxter_belavin, permutation_kronecker, xyz, xxz_six_vertex, external };

class RModel {
  public:
    virtual ~RModel() = default;

    virtual ModelKind kind() const = 0;
    virtual std::string name() const = 0;  // canonical selector, e.g. "bb:N=2"
    virtual int local_dim() const = 0;
    virtual const EllipticContext& ctx() const = 0;

    virtual Operator r_quantum(cplx z, cplx q) const = 0;
    virtual Operator r_derivative_f(cplx z, cplx q) const = 0;
    virtual Operator r_classical(cplx q) const = 0;
    virtual Operator f0_classical(cplx q) const = 0;

    virtual Operator singular_part() const = 0;
    virtual cplx unitarity_factor(cplx z, cplx q) const = 0;
    virtual cplx exchange_factor(cplx q) const = 0;
    virtual double coupling_scale() const = 0;

    SpaceDescriptor pair_space() const { return SpaceDescriptor(2, local_dim()); }
};

using ModelPtr = std::shared_ptr<const RModel>;

// Built-in families.  Backend compatibility is checked at construction:
// Baxter-Belavin and XYZ require the elliptic backend, the 6-vertex XXZ is
// trigonometric by construction, permutation-Kronecker accepts either.
ModelPtr make_baxter_belavin(int local_dim, const EllipticContext& ctx);
ModelPtr make_permutation_kronecker(int local_dim, const EllipticContext& ctx);
ModelPtr make_xyz(const EllipticContext& ctx);
ModelPtr make_xxz(const EllipticContext& ctx);

// ---- registry ------------------------------------------------------------
// Maps a selector key ("bb", "perm", "xyz", "xxz", user-registered names) to
// a factory.  The factory receives the colon-separated argument tail of the
// selector ("N=2", "N=2:trig", "") plus the context the caller wants.  The
// registry exists so that further families (e.g. a 7-vertex deformation used
// as a negative control) can be plugged in without touching this module.
using ModelFactory = std::function<ModelPtr(const std::string& args, const EllipticContext& ctx)>;

void register_model_family(const std::string& key, ModelFactory factory);
std::vector<std::string> registered_model_families();

// Parse a full selector ("bb:N=3", "perm:N=2:trig", "xyz", "xxz") and build
// the model with the given context.  Throws std::invalid_argument on unknown
// keys or malformed arguments.
ModelPtr make_model(const std::string& selector, const EllipticContext& ctx);

}  // namespace laxkit

#endif
