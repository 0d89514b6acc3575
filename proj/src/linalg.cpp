#include "rabiparity/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace rabiparity {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionError(msg.str());
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Runs cyclic Jacobi sweeps on a (Hermitian, overwritten in place). When
// rows is non-null it accumulates the eigenvectors transposed: row i of *rows
// ends up as eigenvector i, so the inner update stays contiguous.
void jacobi_sweeps(ComplexMatrix& a, ComplexMatrix* rows) {
  const std::size_t n = a.dim();
  const double scale = frobenius_norm(a);
  if (scale == 0.0) return;
  const double target = kOffDiagonalTol * scale;

  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return;
    if (sweep == kMaxSweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex b = a(p, q);
        const double mag = std::abs(b);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        // Below roundoff on both diagonals: drop it once the iteration has settled.
        if (sweep > 3 && std::abs(app) + 100.0 * mag == std::abs(app) &&
            std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }

        const double theta = (aqq - app) / (2.0 * mag);
        double t = 0.0;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex phase = b / mag;
        const Complex s_phase = s * phase;
        const Complex s_conj = s * std::conj(phase);

        // Rows p and q in place; columns p and q mirror them by Hermiticity.
        std::span<Complex> row_p = a.row(p);
        std::span<Complex> row_q = a.row(q);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex apr = row_p[r];
          const Complex aqr = row_q[r];
          const Complex new_pr = c * apr - s_phase * aqr;
          const Complex new_qr = s_conj * apr + c * aqr;
          row_p[r] = new_pr;
          row_q[r] = new_qr;
          a(r, p) = std::conj(new_pr);
          a(r, q) = std::conj(new_qr);
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (rows != nullptr) {
          std::span<Complex> vp = rows->row(p);
          std::span<Complex> vq = rows->row(q);
          for (std::size_t r = 0; r < n; ++r) {
            const Complex x = vp[r];
            const Complex y = vq[r];
            vp[r] = c * x - s_conj * y;
            vq[r] = s_phase * x + c * y;
          }
        }
      }
    }
  }
  throw ConvergenceError("eig_hermitian: Jacobi iteration did not converge within 100 sweeps");
}

ComplexMatrix symmetrized_copy(const ComplexMatrix& a) {
  if (!is_hermitian(a, kHermitianTol)) {
    throw DomainError("eig_hermitian: matrix is not Hermitian within 1e-12 relative tolerance");
  }
  const std::size_t n = a.dim();
  ComplexMatrix work(n);
  for (std::size_t i = 0; i < n; ++i) {
    work(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      work(i, j) = avg;
      work(j, i) = std::conj(avg);
    }
  }
  return work;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw DimensionError("ComplexMatrix: entry count does not equal dim^2");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::vector<Complex> ComplexMatrix::diagonal_entries() const {
  std::vector<Complex> d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "mat_add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "mat_sub");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = a;
  out += b;
  return out;
}

ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = a;
  out -= b;
  return out;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::span<Complex> out_row = out.row(i);
    for (std::size_t l = 0; l < n; ++l) {
      const Complex ail = a(i, l);
      if (ail == Complex{}) continue;
      std::span<const Complex> b_row = b.row(l);
      for (std::size_t j = 0; j < n; ++j) out_row[j] += ail * b_row[j];
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  out *= scale;
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a) { return Complex{-1.0} * a; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& e : a.entries()) sum += std::norm(e);
  return std::sqrt(sum);
}

Complex trace(const ComplexMatrix& a) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  const std::size_t n = a.dim();
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double d = std::norm(a(i, j) - std::conj(a(j, i)));
      defect += (i == j) ? d : 2.0 * d;
    }
  }
  return std::sqrt(defect) <= rel_tol * frobenius_norm(a);
}

ComplexMatrix block_matrix(const ComplexMatrix& tl, const ComplexMatrix& tr,
                           const ComplexMatrix& bl, const ComplexMatrix& br) {
  require_same_dim(tl, tr, "block_matrix");
  require_same_dim(tl, bl, "block_matrix");
  require_same_dim(tl, br, "block_matrix");
  const std::size_t n = tl.dim();
  ComplexMatrix out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = tl(i, j);
      out(i, j + n) = tr(i, j);
      out(i + n, j) = bl(i, j);
      out(i + n, j + n) = br(i, j);
    }
  }
  return out;
}

ComplexMatrix sub_block(const ComplexMatrix& a, std::size_t row0, std::size_t col0, std::size_t dim) {
  if (row0 + dim > a.dim() || col0 + dim > a.dim()) {
    throw DimensionError("sub_block: block exceeds matrix bounds");
  }
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = a(row0 + i, col0 + j);
  }
  return out;
}

ComplexVector mat_vec(const ComplexMatrix& a, std::span<const Complex> v) {
  if (v.size() != a.dim()) throw DimensionError("mat_vec: vector length does not match matrix");
  ComplexVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::span<const Complex> r = a.row(i);
    Complex sum = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) sum += r[j] * v[j];
    out[i] = sum;
  }
  return out;
}

double vector_norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const Complex& e : v) sum += std::norm(e);
  return std::sqrt(sum);
}

HermitianEigen eig_hermitian(const ComplexMatrix& a) {
  ComplexMatrix work = symmetrized_copy(a);
  const std::size_t n = a.dim();
  ComplexMatrix rows = ComplexMatrix::identity(n);
  jacobi_sweeps(work, &rows);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return work(x, x).real() < work(y, y).real();
  });

  HermitianEigen result{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t src = order[col];
    result.values[col] = work(src, src).real();
    for (std::size_t r = 0; r < n; ++r) result.vectors(r, col) = rows(src, r);
  }
  return result;
}

std::vector<double> eigvals_hermitian(const ComplexMatrix& a) {
  ComplexMatrix work = symmetrized_copy(a);
  jacobi_sweeps(work, nullptr);
  std::vector<double> values(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) values[i] = work(i, i).real();
  std::sort(values.begin(), values.end());
  return values;
}

void write_matrix(std::ostream& out, const ComplexMatrix& a) {
  char buf[64];
  out << a.dim() << '\n';
  for (const Complex& e : a.entries()) {
    std::snprintf(buf, sizeof buf, "%.16e %.16e\n", e.real(), e.imag());
    out << buf;
  }
}

ComplexMatrix read_matrix(std::istream& in) {
  long long dim = 0;
  if (!(in >> dim) || dim <= 0) throw DomainError("read_matrix: missing or invalid dimension line");
  const auto n = static_cast<std::size_t>(dim);
  std::vector<Complex> entries(n * n);
  for (auto& e : entries) {
    double re = 0.0;
    double im = 0.0;
    if (!(in >> re >> im)) throw DomainError("read_matrix: truncated entry list");
    if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("read_matrix: non-finite entry");
    e = {re, im};
  }
  return ComplexMatrix(n, std::move(entries));
}

}  // namespace rabiparity
