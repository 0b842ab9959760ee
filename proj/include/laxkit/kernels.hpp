#ifndef LAXKIT_KERNELS_HPP
#define LAXKIT_KERNELS_HPP

// Dense complex kernels with a serial reference path and an OpenMP path.
// The parallel versions are written so that every output element is produced
// by exactly one thread using the same inner summation order as the serial
// code, so the two paths agree bitwise — the test suite and the benchmark
// both rely on that.  The global mode defaults to parallel when the build has
// OpenMP and can be forced to serial (e.g. by the CLI's --serial flag).

#include <cstddef>

#include "laxkit/elliptic.hpp"

namespace laxkit {

enum class ExecMode { serial, parallel };

ExecMode exec_mode();
void set_exec_mode(ExecMode m);

namespace kernels {

// c = a * b, all square dim x dim, row-major.  c must not alias a or b.
void matmul(const cplx* a, const cplx* b, cplx* c, int dim, ExecMode m);
void matmul(const cplx* a, const cplx* b, cplx* c, int dim);

// c = a (da x da) tensor b (db x db), row-major, c of size (da*db)^2.
void kron(const cplx* a, int da, const cplx* b, int db, cplx* c, ExecMode m);
void kron(const cplx* a, int da, const cplx* b, int db, cplx* c);

// y += alpha * x over n entries (serial; cheap relative to matmul).
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

// Frobenius norm; fixed-order serial reduction for reproducibility.
double frobenius(const cplx* a, std::size_t n);

// max_ij |a_ij - b_ij| (serial).
double max_abs_diff(const cplx* a, const cplx* b, std::size_t n);

}  // namespace kernels
}  // namespace laxkit

#endif
