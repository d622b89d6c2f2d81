#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qgame {

using cplx = std::complex<double>;
using StateVector = std::vector<cplx>;

// Dense square complex matrix, row-major. Only dims 2 and 4 show up in
// practice but nothing here depends on that.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);
  // |u><v|
  static ComplexMatrix outer(const StateVector& u, const StateVector& v);

  std::size_t dim() const { return dim_; }
  const std::vector<cplx>& entries() const { return entries_; }

  cplx operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
StateVector operator*(const ComplexMatrix& a, const StateVector& v);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
cplx mat_trace(const ComplexMatrix& a);

// a * rho * a^dagger
ComplexMatrix conjugate_by(const ComplexMatrix& a, const ComplexMatrix& rho);

// max |a_ij - b_ij|; dims must agree
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double vector_norm(const StateVector& v);
cplx inner(const StateVector& u, const StateVector& v);  // <u|v>

bool is_hermitian(const ComplexMatrix& m, double tol);

// Eigenvalues of a Hermitian matrix in ascending order. The matrix is
// embedded as the real symmetric [[Re, -Im], [Im, Re]] and diagonalised
// by cyclic Jacobi sweeps; each eigenvalue then appears twice.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

bool is_density(const ComplexMatrix& m, double tol = 1e-9);

}  // namespace qgame
