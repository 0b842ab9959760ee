#include "laxkit/kernels.hpp"

#include <cmath>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace laxkit {

namespace {

ExecMode g_mode =
#ifdef _OPENMP
    ExecMode::parallel;
#else
    ExecMode::serial;
#endif

// Shared row kernel: writes row i of c = a*b.  Using the same routine from
// both paths guarantees identical floating-point results.
inline void matmul_row(const cplx* a, const cplx* b, cplx* c, int dim, int i) {
    cplx* crow = c + static_cast<std::size_t>(i) * dim;
    for (int j = 0; j < dim; ++j) crow[j] = cplx(0.0, 0.0);
    for (int k = 0; k < dim; ++k) {
        const cplx aik = a[static_cast<std::size_t>(i) * dim + k];
        if (aik == cplx(0.0, 0.0)) continue;  // operators here are often sparse-ish
        const cplx* brow = b + static_cast<std::size_t>(k) * dim;
        for (int j = 0; j < dim; ++j) crow[j] += aik * brow[j];
    }
}

inline void kron_row(const cplx* a, int da, const cplx* b, int db, cplx* c, int row) {
    const int dim = da * db;
    const int ia = row / db;
    const int ib = row % db;
    cplx* crow = c + static_cast<std::size_t>(row) * dim;
    for (int ja = 0; ja < da; ++ja) {
        const cplx aij = a[static_cast<std::size_t>(ia) * da + ja];
        const cplx* brow = b + static_cast<std::size_t>(ib) * db;
        cplx* cblk = crow + static_cast<std::size_t>(ja) * db;
        for (int jb = 0; jb < db; ++jb) cblk[jb] = aij * brow[jb];
    }
}

}  // namespace

ExecMode exec_mode() { return g_mode; }
void set_exec_mode(ExecMode m) { g_mode = m; }

namespace kernels {

void matmul(const cplx* a, const cplx* b, cplx* c, int dim, ExecMode m) {
    if (m == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (int i = 0; i < dim; ++i) matmul_row(a, b, c, dim, i);
        return;
#endif
    }
    for (int i = 0; i < dim; ++i) matmul_row(a, b, c, dim, i);
}

void matmul(const cplx* a, const cplx* b, cplx* c, int dim) { matmul(a, b, c, dim, g_mode); }

void kron(const cplx* a, int da, const cplx* b, int db, cplx* c, ExecMode m) {
    const int dim = da * db;
    if (m == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (int row = 0; row < dim; ++row) kron_row(a, da, b, db, c, row);
        return;
#endif
    }
    for (int row = 0; row < dim; ++row) kron_row(a, da, b, db, c, row);
}

void kron(const cplx* a, int da, const cplx* b, int db, cplx* c) { kron(a, da, b, db, c, g_mode); }

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double frobenius(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(a[i]);
    return std::sqrt(s);
}

double max_abs_diff(const cplx* a, const cplx* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace kernels
}  // namespace laxkit
