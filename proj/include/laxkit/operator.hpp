#ifndef LAXKIT_OPERATOR_HPP
#define LAXKIT_OPERATOR_HPP

// Dense complex operators on (C^m)^(tensor N), optionally with an extra
// N-dimensional auxiliary factor in front (the "matrix" slot of a Lax
// operator, as opposed to the "spin chain" slots).  Conventions, used
// everywhere and asserted by the tests:
//   * site 1 is the leftmost tensor factor (most significant digit of the
//     row/column index in base local_dim);
//   * when has_aux is set, the auxiliary index is more significant still:
//     full index = aux * local_dim^n_sites + quantum index;
//   * matrices are stored row-major.
// Operators are immutable values in practice: all operations return new
// objects, so concurrent reads need no synchronization.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "laxkit/elliptic.hpp"

namespace laxkit {

// Process-wide limit on operator dimension; constructions past it throw.
std::size_t& dimension_cap();

struct SpaceDescriptor {
    int n_sites = 1;
    int local_dim = 2;
    bool has_aux = false;

    SpaceDescriptor() = default;
    SpaceDescriptor(int sites, int local, bool aux = false);

    std::size_t quantum_dim() const;  // local_dim^n_sites
    std::size_t total_dim() const;    // (n_sites if has_aux else 1) * quantum_dim

    bool operator==(const SpaceDescriptor& o) const {
        return n_sites == o.n_sites && local_dim == o.local_dim && has_aux == o.has_aux;
    }
    bool operator!=(const SpaceDescriptor& o) const { return !(*this == o); }
};

class Operator {
  public:
    explicit Operator(SpaceDescriptor space);  // zero operator
    static Operator zero(SpaceDescriptor space) { return Operator(space); }
    static Operator identity(SpaceDescriptor space);

    const SpaceDescriptor& space() const { return space_; }
    std::size_t dim() const { return dim_; }

    cplx& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    cplx* raw() { return data_.data(); }
    const cplx* raw() const { return data_.data(); }
    const std::vector<cplx>& data() const { return data_; }

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(cplx s);
    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator operator-() const;
    Operator operator*(const Operator& o) const;  // matrix product (kernels::matmul)
    Operator operator*(cplx s) const;
    friend Operator operator*(cplx s, const Operator& a) { return a * s; }

  private:
    SpaceDescriptor space_;
    std::size_t dim_;
    std::vector<cplx> data_;
};

// ---- fixed bases ---------------------------------------------------------

// sigma_0..sigma_3 on a single 2-dimensional site.
Operator pauli(int alpha);

// Flip operator P = sum_ab E_ab (x) E_ba on two local_dim-dimensional sites.
Operator permutation_p(int local_dim);

// Heisenberg-group basis T_a = exp(i pi a1 a2 / m) Q^a1 Lambda^a2 on one
// m-dimensional site, with Q = diag(exp(2 pi i k/m), k = 1..m) and Lambda the
// cyclic shift.  The phase uses the raw integers a1, a2 (which may be
// negative); only the powers of Q and Lambda are reduced mod m.  That choice
// makes T_{-a} literally the matrix appearing opposite T_a in the model sums.
Operator heisenberg_t(int a1, int a2, int local_dim);

// ---- structure maps ------------------------------------------------------

// Tensor product with a's space leftmost; both factors must be aux-free with
// the same local dimension.
Operator kron(const Operator& a, const Operator& b);

// Embed a two-site operator so its first factor acts on site i and its second
// on site j of `space` (1-based, i != j, aux-free space).  i > j is defined
// through the local flip: embed_pair(op,i,j) = embed_pair(P op P, j, i).
Operator embed_pair(const Operator& op, int i, int j, const SpaceDescriptor& space);

// Embed a one-site operator on site i.
Operator embed_site(const Operator& op, int i, const SpaceDescriptor& space);

// Assemble sum_ij E_ij (x) blocks[i][j] on aux (x) quantum; blocks must form a
// square array of operators on one common aux-free space, with as many rows
// as that space has sites.
Operator aux_assemble(const std::vector<std::vector<Operator>>& blocks);

// Read back block (i,j) (0-based aux indices) of an aux (x) quantum operator.
Operator block_of(const Operator& full, int i, int j);

// Partial trace over the auxiliary factor.
Operator trace_aux(const Operator& full);

// ---- plumbing ------------------------------------------------------------

Operator commutator(const Operator& a, const Operator& b);  // ab - ba
Operator dagger(const Operator& a);                         // conjugate transpose
double frobenius_norm(const Operator& a);
cplx trace(const Operator& a);
std::vector<cplx> apply(const Operator& a, const std::vector<cplx>& v);

// Eigenvalues of a Hermitian operator, ascending.  Rejects inputs whose
// anti-Hermitian part exceeds herm_tol * ||h||_F (the error message carries
// the measured relative deviation); diagonalizes (h + h^dagger)/2.
std::vector<double> hermitian_eigenvalues(const Operator& h, double herm_tol);

// Eigenvalues of an arbitrary operator (used by the spectrum --force path).
std::vector<cplx> general_eigenvalues(const Operator& a);

}  // namespace laxkit

#endif
