#include "qgame/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qgame/errors.hpp"

namespace qgame {

void require_range(const char* name, double value, double lo, double hi) {
  constexpr double kSlack = 1e-12;
  if (!std::isfinite(value) || value < lo - kSlack || value > hi + kSlack) {
    throw RangeError(std::string(name) + "=" + std::to_string(value) + " outside [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
  if (entries_.size() != dim * dim) throw std::invalid_argument("entry count must equal dim*dim");
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("non-finite matrix entry");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(const StateVector& u, const StateVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("outer: length mismatch");
  ComplexMatrix m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

static void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

StateVector operator*(const ComplexMatrix& a, const StateVector& v) {
  if (a.dim() != v.size()) throw std::invalid_argument("matrix-vector length mismatch");
  StateVector out(v.size());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix m(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return m;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix m(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(j, i) = std::conj(a(i, j));
  return m;
}

cplx mat_trace(const ComplexMatrix& a) {
  cplx t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

ComplexMatrix conjugate_by(const ComplexMatrix& a, const ComplexMatrix& rho) {
  return a * rho * dagger(a);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

double vector_norm(const StateVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

cplx inner(const StateVector& u, const StateVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner: length mismatch");
  cplx s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const std::size_t N = 2 * n;
  std::vector<double> a(N * N);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * N + c]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // symmetrise so that tiny Hermiticity defects do not stall the sweeps
      const cplx z = 0.5 * (m(i, j) + std::conj(m(j, i)));
      at(i, j) = z.real();
      at(i + n, j + n) = z.real();
      at(i, j + n) = -z.imag();
      at(i + n, j) = z.imag();
    }

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }

  std::vector<double> doubled(N);
  for (std::size_t i = 0; i < N; ++i) doubled[i] = at(i, i);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return ev;
}

bool is_density(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  const cplx tr = mat_trace(m);
  if (std::abs(tr - 1.0) > tol) return false;
  for (double ev : hermitian_eigenvalues(m))
    if (ev < -tol) return false;
  return true;
}

}  // namespace qgame
