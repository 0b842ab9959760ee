#include "laxkit/operator.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "laxkit/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace laxkit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int mod_reduce(int a, int m) { return ((a % m) + m) % m; }

void require_same_space(const Operator& a, const Operator& b, const char* what) {
    if (a.space() != b.space())
        throw std::invalid_argument(std::string(what) + ": operands live on different spaces");
}

}  // namespace

std::size_t& dimension_cap() {
    static std::size_t cap = 16384;
    return cap;
}

SpaceDescriptor::SpaceDescriptor(int sites, int local, bool aux)
    : n_sites(sites), local_dim(local), has_aux(aux) {
    if (n_sites < 1 || local_dim < 1)
        throw std::invalid_argument("SpaceDescriptor: n_sites and local_dim must be positive");
    if (total_dim() > dimension_cap())
        throw std::invalid_argument("SpaceDescriptor: total dimension " +
                                    std::to_string(total_dim()) + " exceeds cap " +
                                    std::to_string(dimension_cap()));
}

std::size_t SpaceDescriptor::quantum_dim() const {
    return ipow(static_cast<std::size_t>(local_dim), n_sites);
}

std::size_t SpaceDescriptor::total_dim() const {
    return (has_aux ? static_cast<std::size_t>(n_sites) : 1) * quantum_dim();
}

Operator::Operator(SpaceDescriptor space)
    : space_(space), dim_(space.total_dim()), data_(dim_ * dim_, cplx(0.0, 0.0)) {}

Operator Operator::identity(SpaceDescriptor space) {
    Operator id(space);
    for (std::size_t i = 0; i < id.dim_; ++i) id.at(i, i) = cplx(1.0, 0.0);
    return id;
}

Operator& Operator::operator+=(const Operator& o) {
    require_same_space(*this, o, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    require_same_space(*this, o, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Operator& Operator::operator*=(cplx s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Operator Operator::operator+(const Operator& o) const {
    Operator r = *this;
    r += o;
    return r;
}

Operator Operator::operator-(const Operator& o) const {
    Operator r = *this;
    r -= o;
    return r;
}

Operator Operator::operator-() const {
    Operator r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
}

Operator Operator::operator*(const Operator& o) const {
    require_same_space(*this, o, "operator*");
    Operator r(space_);
    kernels::matmul(raw(), o.raw(), r.raw(), static_cast<int>(dim_));
    return r;
}

Operator Operator::operator*(cplx s) const {
    Operator r = *this;
    r *= s;
    return r;
}

// ---- fixed bases ---------------------------------------------------------

Operator pauli(int alpha) {
    if (alpha < 0 || alpha > 3) throw std::invalid_argument("pauli: index must be 0..3");
    Operator s{SpaceDescriptor(1, 2)};
    switch (alpha) {
        case 0: s.at(0, 0) = 1.0; s.at(1, 1) = 1.0; break;
        case 1: s.at(0, 1) = 1.0; s.at(1, 0) = 1.0; break;
        case 2: s.at(0, 1) = cplx(0.0, -1.0); s.at(1, 0) = cplx(0.0, 1.0); break;
        case 3: s.at(0, 0) = 1.0; s.at(1, 1) = -1.0; break;
    }
    return s;
}

Operator permutation_p(int local_dim) {
    if (local_dim < 2) throw std::invalid_argument("permutation_p: local_dim must be >= 2");
    const std::size_t m = static_cast<std::size_t>(local_dim);
    Operator p{SpaceDescriptor(2, local_dim)};
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) p.at(a * m + b, b * m + a) = 1.0;
    return p;
}

Operator heisenberg_t(int a1, int a2, int local_dim) {
    if (local_dim < 2) throw std::invalid_argument("heisenberg_t: local_dim must be >= 2");
    const int m = local_dim;
    const int p1 = mod_reduce(a1, m);
    const int p2 = mod_reduce(a2, m);
    // phase from the unreduced indices (see header)
    const cplx phase = std::exp(cplx(0.0, kPi * static_cast<double>(a1) * a2 / m));
    Operator t{SpaceDescriptor(1, m)};
    // Q^p1 Lambda^p2 maps e_l -> exp(2 pi i p1 (k+1)/m) e_k with k = l - p2 mod m;
    // equivalently (Q^p1 Lambda^p2)_{k,l} with l = k + p2 mod m.
    for (int k = 0; k < m; ++k) {
        const int l = (k + p2) % m;
        const cplx q = std::exp(cplx(0.0, 2.0 * kPi * p1 * (k + 1) / m));
        t.at(static_cast<std::size_t>(k), static_cast<std::size_t>(l)) = phase * q;
    }
    return t;
}

// ---- structure maps ------------------------------------------------------

Operator kron(const Operator& a, const Operator& b) {
    const auto& sa = a.space();
    const auto& sb = b.space();
    if (sa.has_aux || sb.has_aux)
        throw std::invalid_argument("kron: auxiliary factors cannot be tensored");
    if (sa.local_dim != sb.local_dim)
        throw std::invalid_argument("kron: mismatched local dimensions");
    Operator r{SpaceDescriptor(sa.n_sites + sb.n_sites, sa.local_dim)};
    kernels::kron(a.raw(), static_cast<int>(a.dim()), b.raw(), static_cast<int>(b.dim()),
                  r.raw());
    return r;
}

Operator embed_pair(const Operator& op, int i, int j, const SpaceDescriptor& space) {
    if (space.has_aux)
        throw std::invalid_argument("embed_pair: target space must be aux-free");
    if (op.space() != SpaceDescriptor(2, space.local_dim))
        throw std::invalid_argument("embed_pair: operator must live on two local sites");
    const int n = space.n_sites;
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("embed_pair: site out of range");
    if (i == j) throw std::invalid_argument("embed_pair: sites must differ");
    if (i > j) {
        // local flip; trivial for one-dimensional sites
        if (space.local_dim == 1) return embed_pair(op, j, i, space);
        const Operator p = permutation_p(space.local_dim);
        return embed_pair(p * op * p, j, i, space);
    }
    const int m = space.local_dim;
    const std::size_t d = space.quantum_dim();
    const std::size_t pi = ipow(static_cast<std::size_t>(m), n - i);  // site i digit weight
    const std::size_t pj = ipow(static_cast<std::size_t>(m), n - j);
    Operator out(space);
    // row x of the output depends on no other row: safe to parallelize, and
    // entries are plain copies so both paths agree bitwise.
    const auto fill_row = [&](std::size_t x) {
        const int di = static_cast<int>((x / pi) % static_cast<std::size_t>(m));
        const int dj = static_cast<int>((x / pj) % static_cast<std::size_t>(m));
        const std::size_t base = x - static_cast<std::size_t>(di) * pi - static_cast<std::size_t>(dj) * pj;
        const std::size_t lrow = static_cast<std::size_t>(di) * m + dj;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                const cplx v = op.at(lrow, static_cast<std::size_t>(a) * m + b);
                if (v == cplx(0.0, 0.0)) continue;
                const std::size_t y = base + static_cast<std::size_t>(a) * pi + static_cast<std::size_t>(b) * pj;
                out.at(x, y) = v;
            }
    };
#ifdef _OPENMP
    if (exec_mode() == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t x = 0; x < static_cast<std::ptrdiff_t>(d); ++x)
            fill_row(static_cast<std::size_t>(x));
        return out;
    }
#endif
    for (std::size_t x = 0; x < d; ++x) fill_row(x);
    return out;
}

Operator embed_site(const Operator& op, int i, const SpaceDescriptor& space) {
    if (space.has_aux)
        throw std::invalid_argument("embed_site: target space must be aux-free");
    if (op.space() != SpaceDescriptor(1, space.local_dim))
        throw std::invalid_argument("embed_site: operator must live on one local site");
    const int n = space.n_sites;
    if (i < 1 || i > n) throw std::invalid_argument("embed_site: site out of range");
    const int m = space.local_dim;
    const std::size_t d = space.quantum_dim();
    const std::size_t pi = ipow(static_cast<std::size_t>(m), n - i);
    Operator out(space);
    for (std::size_t x = 0; x < d; ++x) {
        const int di = static_cast<int>((x / pi) % static_cast<std::size_t>(m));
        const std::size_t base = x - static_cast<std::size_t>(di) * pi;
        for (int a = 0; a < m; ++a) {
            const cplx v = op.at(static_cast<std::size_t>(di), static_cast<std::size_t>(a));
            if (v == cplx(0.0, 0.0)) continue;
            out.at(x, base + static_cast<std::size_t>(a) * pi) = v;
        }
    }
    return out;
}

Operator aux_assemble(const std::vector<std::vector<Operator>>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("aux_assemble: empty block array");
    const std::size_t n = blocks.size();
    const SpaceDescriptor qs = blocks[0][0].space();
    if (qs.has_aux) throw std::invalid_argument("aux_assemble: blocks must be aux-free");
    if (static_cast<std::size_t>(qs.n_sites) != n)
        throw std::invalid_argument("aux_assemble: block count must equal n_sites");
    for (const auto& row : blocks) {
        if (row.size() != n) throw std::invalid_argument("aux_assemble: block array not square");
        for (const auto& b : row)
            if (b.space() != qs) throw std::invalid_argument("aux_assemble: inconsistent block spaces");
    }
    const std::size_t d = qs.quantum_dim();
    Operator full{SpaceDescriptor(qs.n_sites, qs.local_dim, true)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Operator& b = blocks[i][j];
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) full.at(i * d + r, j * d + c) = b.at(r, c);
        }
    return full;
}

Operator block_of(const Operator& full, int i, int j) {
    const auto& s = full.space();
    if (!s.has_aux) throw std::invalid_argument("block_of: operator has no auxiliary factor");
    if (i < 0 || j < 0 || i >= s.n_sites || j >= s.n_sites)
        throw std::invalid_argument("block_of: aux index out of range");
    const std::size_t d = s.quantum_dim();
    Operator b{SpaceDescriptor(s.n_sites, s.local_dim, false)};
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            b.at(r, c) = full.at(static_cast<std::size_t>(i) * d + r, static_cast<std::size_t>(j) * d + c);
    return b;
}

Operator trace_aux(const Operator& full) {
    const auto& s = full.space();
    if (!s.has_aux) throw std::invalid_argument("trace_aux: operator has no auxiliary factor");
    const std::size_t n = static_cast<std::size_t>(s.n_sites);
    const std::size_t d = s.quantum_dim();
    Operator out{SpaceDescriptor(s.n_sites, s.local_dim, false)};
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            cplx acc(0.0, 0.0);
            for (std::size_t a = 0; a < n; ++a) acc += full.at(a * d + r, a * d + c);
            out.at(r, c) = acc;
        }
    return out;
}

// ---- plumbing ------------------------------------------------------------

Operator commutator(const Operator& a, const Operator& b) {
    require_same_space(a, b, "commutator");
    return a * b - b * a;
}

Operator dagger(const Operator& a) {
    Operator r(a.space());
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r.at(i, j) = std::conj(a.at(j, i));
    return r;
}

double frobenius_norm(const Operator& a) {
    return kernels::frobenius(a.raw(), a.dim() * a.dim());
}

cplx trace(const Operator& a) {
    cplx t(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

std::vector<cplx> apply(const Operator& a, const std::vector<cplx>& v) {
    const std::size_t d = a.dim();
    if (v.size() != d) throw std::invalid_argument("apply: vector dimension mismatch");
    std::vector<cplx> w(d, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        cplx acc(0.0, 0.0);
        for (std::size_t j = 0; j < d; ++j) acc += a.at(i, j) * v[j];
        w[i] = acc;
    }
    return w;
}

std::vector<double> hermitian_eigenvalues(const Operator& h, double herm_tol) {
    const std::size_t d = h.dim();
    const double norm = frobenius_norm(h);
    const Operator hd = dagger(h);
    double dev = 0.0;
    {
        Operator diff = h - hd;
        dev = frobenius_norm(diff);
    }
    const double rel = dev / std::max(1e-300, norm);
    if (norm > 0.0 && rel > herm_tol)
        throw std::domain_error("hermitian_eigenvalues: relative anti-Hermitian deviation " +
                                std::to_string(rel) + " exceeds tolerance " +
                                std::to_string(herm_tol));
    Eigen::MatrixXcd m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
    std::vector<double> ev(d);
    for (std::size_t i = 0; i < d; ++i) ev[i] = solver.eigenvalues()(static_cast<long>(i));
    return ev;  // SelfAdjointEigenSolver returns ascending order
}

std::vector<cplx> general_eigenvalues(const Operator& a) {
    const std::size_t d = a.dim();
    Eigen::MatrixXcd m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = a.at(i, j);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("general_eigenvalues: eigensolver failed to converge");
    std::vector<cplx> ev(d);
    for (std::size_t i = 0; i < d; ++i) ev[i] = solver.eigenvalues()(static_cast<long>(i));
    return ev;
}

}  // namespace laxkit
