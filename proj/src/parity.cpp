#include "rabiparity/parity.hpp"

#include <string>

#include "rabiparity/fock.hpp"

namespace rabiparity {

SectorDecomposition::SectorDecomposition(int k, std::size_t dim) : k_(k), dim_(dim) {
  if (k < 1) {
    throw DomainError("decompose: k must be >= 1 (got " + std::to_string(k) + ")");
  }
  if (dim < 2 * static_cast<std::size_t>(k)) {
    throw DomainError("decompose: dim must be at least 2k = " + std::to_string(2 * k) + " (got " +
                      std::to_string(dim) + ")");
  }
  const auto kk = static_cast<std::size_t>(k);
  sector_of_.resize(dim);
  states_.resize(kk);
  for (int l = 1; l <= k; ++l) {
    for (std::size_t n = 0;; ++n) {
      const std::size_t p = kk * n + static_cast<std::size_t>(l) - 1;
      if (p >= dim) break;
      sector_of_[p] = {n, l};
      states_[static_cast<std::size_t>(l - 1)].push_back(p);
    }
  }
}

void SectorDecomposition::check_sector(int l) const {
  if (l < 1 || l > k_) {
    throw DomainError("sector index l = " + std::to_string(l) + " outside 1.." + std::to_string(k_));
  }
}

SectorIndex SectorDecomposition::sector_of(std::size_t fock_index) const {
  if (fock_index >= dim_) throw DomainError("sector_of: Fock index beyond truncation");
  return sector_of_[fock_index];
}

std::size_t SectorDecomposition::fock_index(std::size_t n, int l) const {
  check_sector(l);
  const auto& states = states_[static_cast<std::size_t>(l - 1)];
  if (n >= states.size()) throw DomainError("fock_index: state |n, l> beyond truncation");
  return states[n];
}

std::size_t SectorDecomposition::sector_dim(int l) const {
  check_sector(l);
  return states_[static_cast<std::size_t>(l - 1)].size();
}

std::vector<std::size_t> SectorDecomposition::sector_dims() const {
  std::vector<std::size_t> dims;
  dims.reserve(states_.size());
  for (const auto& s : states_) dims.push_back(s.size());
  return dims;
}

std::span<const std::size_t> SectorDecomposition::sector_states(int l) const {
  check_sector(l);
  return states_[static_cast<std::size_t>(l - 1)];
}

ComplexMatrix SectorDecomposition::projector(int l) const {
  ComplexMatrix proj(dim_);
  for (std::size_t p : sector_states(l)) proj(p, p) = 1.0;
  return proj;
}

ComplexMatrix SectorDecomposition::project(const ComplexMatrix& op, int l, int m) const {
  return mat_mul(mat_mul(projector(l), op), projector(m));
}

ComplexMatrix SectorDecomposition::compress(const ComplexMatrix& op, int l) const {
  if (op.dim() != dim_) throw DimensionError("compress: operator size differs from decomposition");
  const auto states = sector_states(l);
  ComplexMatrix out(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < states.size(); ++j) out(i, j) = op(states[i], states[j]);
  }
  return out;
}

ComplexMatrix SectorDecomposition::embed(std::span<const ComplexMatrix> blocks) const {
  if (blocks.size() != static_cast<std::size_t>(k_)) {
    throw DimensionError("embed: expected one block per sector");
  }
  ComplexMatrix out(dim_);
  for (int l = 1; l <= k_; ++l) {
    const auto states = sector_states(l);
    const ComplexMatrix& block = blocks[static_cast<std::size_t>(l - 1)];
    if (block.dim() != states.size()) throw DimensionError("embed: block size differs from sector size");
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = 0; j < states.size(); ++j) out(states[i], states[j]) = block(i, j);
    }
  }
  return out;
}

SectorDecomposition decompose(int k, std::size_t dim) { return SectorDecomposition(k, dim); }

RestrictedOps restricted_ops(const SectorDecomposition& sd) {
  const auto kk = static_cast<std::size_t>(sd.k());
  RestrictedOps ops;
  ops.sectors.reserve(kk);
  for (int l = 1; l <= sd.k(); ++l) {
    const std::size_t size = sd.sector_dim(l);
    const auto offset = static_cast<std::size_t>(l - 1);
    SectorOperators sector{ComplexMatrix(size), ComplexMatrix(size)};
    for (std::size_t j = 0; j < size; ++j) {
      sector.number(j, j) = static_cast<double>(kk * j + offset);
      if (j > 0) sector.lowering(j - 1, j) = ladder_factor(kk * j + offset, kk);
    }
    ops.sectors.push_back(std::move(sector));
  }
  return ops;
}

ComplexMatrix partial_parity(const SectorDecomposition& sd, int l) {
  const std::size_t size = sd.sector_dim(l);
  ComplexMatrix j_l(size);
  for (std::size_t n = 0; n < size; ++n) j_l(n, n) = (n % 2 == 0) ? 1.0 : -1.0;
  return j_l;
}

ParityOperator::ParityOperator(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw DomainError("ParityOperator: entries must be +1 or -1");
  }
}

ComplexMatrix ParityOperator::matrix() const {
  ComplexMatrix m(signs_.size());
  for (std::size_t p = 0; p < signs_.size(); ++p) m(p, p) = static_cast<double>(signs_[p]);
  return m;
}

ParityOperator generalized_parity(int k, std::size_t dim) {
  const SectorDecomposition sd(k, dim);
  std::vector<int> signs(dim, 0);
  for (int l = 1; l <= k; ++l) {
    const auto states = sd.sector_states(l);
    for (std::size_t n = 0; n < states.size(); ++n) signs[states[n]] = (n % 2 == 0) ? 1 : -1;
  }
  return ParityOperator(std::move(signs));
}

int generalized_parity_sign(int k, std::size_t p) {
  if (k < 1) throw DomainError("generalized_parity_sign: k must be >= 1");
  return ((p / static_cast<std::size_t>(k)) % 2 == 0) ? 1 : -1;
}

ParityOperator special_parity_P(std::size_t dim) {
  if (dim < 2) throw DomainError("special_parity_P: dim must be at least 2");
  std::vector<int> signs(dim);
  for (std::size_t n = 0; n < dim; ++n) signs[n] = (n % 2 == 0) ? 1 : -1;
  return ParityOperator(std::move(signs));
}

ParityOperator special_parity_T(std::size_t dim) {
  if (dim < 2) throw DomainError("special_parity_T: dim must be at least 2");
  std::vector<int> signs(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const std::size_t exponent = n == 0 ? 0 : n * (n - 1) / 2;
    signs[n] = exponent % 2 == 0 ? 1 : -1;
  }
  return ParityOperator(std::move(signs));
}

}  // namespace rabiparity
