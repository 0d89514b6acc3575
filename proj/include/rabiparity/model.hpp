#pragma once

#include <cstddef>
#include <string_view>

#include "rabiparity/linalg.hpp"

namespace rabiparity {

/**
 * Parameters of the truncated k-photon Rabi model
 *
 *   H = α σ_z + ω a†a + σ_x (g* a^k + g (a†)^k)
 *
 * with the boson truncated to |0⟩ … |dim−1⟩.
 */
struct ModelParams {
  double alpha = 0.0;  // qubit gap
  double omega = 1.0;  // mode frequency, > 0
  Complex g = 0.0;     // coupling strength
  int k = 1;           // photons exchanged per interaction, ≥ 1
  std::size_t dim = 2; // boson truncation, ≥ 2k

  // Throws DomainError describing the first violated constraint.
  void validate() const;
};

/**
 * The 2×2 block form [[H₊, V], [V†, H₋]] of a qubit ⊗ boson operator.
 *
 * The qubit basis is the σ_x eigenbasis {|+⟩, |−⟩}: there σ_x = diag(1, −1)
 * and σ_z = [[0, 1], [1, 0]], so the σ_x coupling lands on the diagonal
 * blocks as ±(g* a^k + g (a†)^k) and the qubit gap α σ_z becomes V = α·I.
 */
struct BlockOperator {
  ComplexMatrix hp;
  ComplexMatrix hm;
  ComplexMatrix v;
  std::size_t dim = 0;
};

// H± = ω a†a ± (g* a^k + g (a†)^k), V = α·I.
BlockOperator build_hpm(const ModelParams& p);

// The 2dim×2dim matrix [[H₊, αI], [αI, H₋]]; upper half is the |+⟩ component.
ComplexMatrix build_full(const ModelParams& p);

// Parses "a", "a+bi" or "a-bi" (decimal floats, no spaces). Throws DomainError.
Complex parse_complex(std::string_view text);

}  // namespace rabiparity
