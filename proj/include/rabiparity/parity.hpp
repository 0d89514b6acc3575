#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rabiparity/linalg.hpp"

namespace rabiparity {

// Position of a Fock state inside the k-sector split: |n, l⟩ = |k·n + l − 1⟩.
struct SectorIndex {
  std::size_t n = 0;
  int l = 1;  // 1 … k

  bool operator==(const SectorIndex&) const = default;
};

/**
 * Orthogonal split of the truncated Fock space into k sectors.
 *
 * Sector l (1 ≤ l ≤ k) is spanned by the Fock states whose index is
 * congruent to l − 1 modulo k. Number-conserving operators and a^k act
 * within a sector, which is what makes the model block-diagonal here.
 * When k does not divide dim the leading sectors keep one more state than
 * the trailing ones.
 */
class SectorDecomposition {
 public:
  // Throws DomainError unless k ≥ 1 and dim ≥ 2k.
  SectorDecomposition(int k, std::size_t dim);

  int k() const { return k_; }
  std::size_t dim() const { return dim_; }

  SectorIndex sector_of(std::size_t fock_index) const;
  std::size_t fock_index(std::size_t n, int l) const;

  std::size_t sector_dim(int l) const;
  std::vector<std::size_t> sector_dims() const;
  // Fock indices of sector l ordered by n.
  std::span<const std::size_t> sector_states(int l) const;

  // Diagonal 0/1 matrix P_l.
  ComplexMatrix projector(int l) const;

  // P_l · op · P_m, kept in the full space.
  ComplexMatrix project(const ComplexMatrix& op, int l, int m) const;

  // ⟨i, l| op |j, l⟩ as a sector_dim(l)-sized matrix.
  ComplexMatrix compress(const ComplexMatrix& op, int l) const;

  // Inverse of compress over all sectors: places blocks[l−1] on sector l.
  ComplexMatrix embed(std::span<const ComplexMatrix> blocks) const;

 private:
  void check_sector(int l) const;

  int k_;
  std::size_t dim_;
  std::vector<SectorIndex> sector_of_;
  std::vector<std::vector<std::size_t>> states_;
};

SectorDecomposition decompose(int k, std::size_t dim);

// Restrictions of a†a and a^k to a single sector.
struct SectorOperators {
  ComplexMatrix number;    // N_l = k·n_l + (l−1)·I
  ComplexMatrix lowering;  // A_l, ⟨j−1, l|A_l|j, l⟩ = √((kj+l−1)! / (k(j−1)+l−1)!)
};

struct RestrictedOps {
  std::vector<SectorOperators> sectors;  // sectors[l − 1]

  const SectorOperators& operator[](int l) const { return sectors.at(static_cast<std::size_t>(l - 1)); }
};

// Built from the closed-form matrix elements, not by projection.
RestrictedOps restricted_ops(const SectorDecomposition& sd);

// J_l = diag((−1)^n) on the basis |n, l⟩ of sector l.
ComplexMatrix partial_parity(const SectorDecomposition& sd, int l);

/**
 * Diagonal ±1 operator on the truncated Fock space.
 *
 * Stored as its sign vector; matrix() gives the dense view for algebra.
 */
class ParityOperator {
 public:
  ParityOperator() = default;
  explicit ParityOperator(std::vector<int> signs);

  std::size_t dim() const { return signs_.size(); }
  std::span<const int> signs() const { return signs_; }
  int sign(std::size_t p) const { return signs_.at(p); }
  ComplexMatrix matrix() const;

  bool operator==(const ParityOperator&) const = default;

 private:
  std::vector<int> signs_;
};

// X_k = Σ_l Σ_n (−1)^n |n, l⟩⟨n, l|, assembled sector by sector.
ParityOperator generalized_parity(int k, std::size_t dim);

// Closed-form sign of X_k at Fock index p: (−1)^⌊p/k⌋.
int generalized_parity_sign(int k, std::size_t p);

// Bosonic parity exp(iπ a†a) = diag((−1)^n).
ParityOperator special_parity_P(std::size_t dim);

// Two-photon parity exp(iπ/2 · a†a(a†a − 1)) = diag((−1)^{n(n−1)/2}).
ParityOperator special_parity_T(std::size_t dim);

}  // namespace rabiparity
