#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "rabiparity/errors.hpp"

namespace rabiparity {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/**
 * Dense square matrix of complex doubles, row-major.
 *
 * Every operator in the library (bosonic ladder operators, Hamiltonian
 * blocks, parities, similarity transforms) is held in this type. Sizes in
 * this domain stay around a thousand, so dense storage is used throughout.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  std::span<Complex> entries() { return entries_; }
  std::span<const Complex> entries() const { return entries_; }

  std::span<Complex> row(std::size_t r) { return {entries_.data() + r * dim_, dim_}; }
  std::span<const Complex> row(std::size_t r) const { return {entries_.data() + r * dim_, dim_}; }

  std::vector<Complex> diagonal_entries() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// Arithmetic. All binary operations throw DimensionError on size mismatch.
ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_add(a, b); }
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_sub(a, b); }
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
ComplexMatrix operator-(const ComplexMatrix& a);

ComplexMatrix adjoint(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

// Largest |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// ‖a - a†‖_F ≤ rel_tol·‖a‖_F (an all-zero matrix is Hermitian).
bool is_hermitian(const ComplexMatrix& a, double rel_tol);

// Embeds four equally sized blocks as [[tl, tr], [bl, br]].
ComplexMatrix block_matrix(const ComplexMatrix& tl, const ComplexMatrix& tr,
                           const ComplexMatrix& bl, const ComplexMatrix& br);

// Copies the dim×dim block starting at (row0, col0).
ComplexMatrix sub_block(const ComplexMatrix& a, std::size_t row0, std::size_t col0, std::size_t dim);

ComplexVector mat_vec(const ComplexMatrix& a, std::span<const Complex> v);
double vector_norm(std::span<const Complex> v);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column i pairs with values[i]
};

/**
 * Cyclic Jacobi eigensolver for Hermitian matrices.
 *
 * The input is checked for Hermiticity at 1e-12·‖a‖_F and symmetrized before
 * iterating. Sweeps stop once the off-diagonal Frobenius norm is at most
 * 1e-13·‖a‖_F; more than 100 sweeps raises ConvergenceError.
 */
HermitianEigen eig_hermitian(const ComplexMatrix& a);

// Same iteration without accumulating eigenvectors.
std::vector<double> eigvals_hermitian(const ComplexMatrix& a);

// Plain-text dump: first line "dim", then dim² lines "re im" in row-major order.
void write_matrix(std::ostream& out, const ComplexMatrix& a);
ComplexMatrix read_matrix(std::istream& in);

}  // namespace rabiparity
