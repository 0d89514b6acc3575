#pragma once

#include <cstddef>

#include "rabiparity/linalg.hpp"

namespace rabiparity {

// A bosonic operator on the truncated Fock space |0⟩ … |dim−1⟩. The matrix is
// the top-left dim×dim corner of the infinite matrix in the number basis.
struct FockOperator {
  std::size_t dim = 0;
  ComplexMatrix matrix;
};

// ⟨n−1|a|n⟩ = √n. Requires dim ≥ 2.
FockOperator annihilation(std::size_t dim);
FockOperator creation(std::size_t dim);
FockOperator number(std::size_t dim);

// k-fold product op·op·…·op. Requires k ≥ 1 and op.dim ≥ k+1.
FockOperator power_k(const FockOperator& op, int k);

// √(n!/(n−k)!) evaluated as a product of square roots, so it stays finite for
// n up to a few thousand. Returns 0 when n < k.
double ladder_factor(std::size_t n, std::size_t k);

}  // namespace rabiparity
