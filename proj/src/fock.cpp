#include "rabiparity/fock.hpp"

#include <cmath>
#include <string>

namespace rabiparity {

namespace {

void require_min_dim(std::size_t dim, std::size_t min, const char* op) {
  if (dim < min) {
    throw DomainError(std::string(op) + ": dim must be at least " + std::to_string(min) +
                      " (got " + std::to_string(dim) + ")");
  }
}

}  // namespace

FockOperator annihilation(std::size_t dim) {
  require_min_dim(dim, 2, "annihilation");
  FockOperator a{dim, ComplexMatrix(dim)};
  for (std::size_t n = 1; n < dim; ++n) a.matrix(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockOperator creation(std::size_t dim) {
  FockOperator a = annihilation(dim);
  return {dim, adjoint(a.matrix)};
}

FockOperator number(std::size_t dim) {
  require_min_dim(dim, 2, "number");
  FockOperator n{dim, ComplexMatrix(dim)};
  for (std::size_t i = 0; i < dim; ++i) n.matrix(i, i) = static_cast<double>(i);
  return n;
}

FockOperator power_k(const FockOperator& op, int k) {
  if (k <= 0) {
    throw DomainError("power_k: k must be >= 1 (got " + std::to_string(k) + ")");
  }
  require_min_dim(op.dim, static_cast<std::size_t>(k) + 1, "power_k");
  ComplexMatrix result = op.matrix;
  for (int i = 1; i < k; ++i) result = mat_mul(result, op.matrix);
  return {op.dim, std::move(result)};
}

double ladder_factor(std::size_t n, std::size_t k) {
  if (n < k) return 0.0;
  double product = 1.0;
  for (std::size_t m = n - k + 1; m <= n; ++m) product *= std::sqrt(static_cast<double>(m));
  return product;
}

}  // namespace rabiparity
