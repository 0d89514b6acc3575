#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "rabiparity/linalg.hpp"
#include "rabiparity/model.hpp"
#include "rabiparity/riccati.hpp"

namespace rabiparity {

// Lowest eigenvalues of the two decoupled blocks H₊ + αX_k and H₋ − αX_k.
struct SectorSpectrum {
  std::vector<double> top;     // tagged '+'
  std::vector<double> bottom;  // tagged '-'
};

// Requires m ≤ dim. Throws VerificationError if X_k fails verification.
SectorSpectrum sector_spectrum(const ModelParams& p, std::size_t m,
                               double tolerance = kDefaultVerifyTolerance);

struct Level {
  char block = '+';
  std::size_t level = 0;
  double value = 0.0;
};

// The m lowest levels of both blocks together, ascending; ties go to '+'
// before '-', then by level index.
std::vector<Level> merge_lowest(const SectorSpectrum& s, std::size_t m);

enum class SweepParam { CouplingMagnitude, Alpha, Omega };

// "g", "alpha" or "omega".
SweepParam parse_sweep_param(std::string_view name);

struct SweepSpec {
  ModelParams base;
  SweepParam param = SweepParam::CouplingMagnitude;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;
  std::size_t levels = 1;

  void validate() const;
  double value_at(int step) const;
  // base with the swept parameter set; |g| sweeps keep the phase of base.g.
  ModelParams params_at(int step) const;
};

struct SweepRow {
  double param = 0.0;
  char block = '+';
  std::size_t level = 0;
  double eigenvalue = 0.0;
};

// Rows ordered by grid point, then block ('+' first), then level. Grid
// points are spread over `jobs` threads; the output does not depend on it.
std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs = 1);

struct EvolutionSpec {
  ComplexVector initial;  // length 2·dim, unit norm
  double dt = 0.0;
  int steps = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexVector> states;
};

/**
 * Propagates the initial state through the block-diagonal frame.
 *
 * The state is mapped by S⁻¹, each block is evolved independently with its
 * own eigendecomposition (phases e^{−iλt}), and the result is mapped back
 * by S. Returned states are in the physical frame at t = 0, dt, …, steps·dt.
 */
Trajectory evolve(const ModelParams& p, const EvolutionSpec& e);

// |+⟩ ⊗ |0⟩, the first basis vector of build_full.
ComplexVector vacuum_state(const ModelParams& p);

// Reads "len" then len lines "re im", the vector analogue of read_matrix.
ComplexVector read_state(std::istream& in);

// Scientific notation with 17 significant digits.
std::string format_real(double value);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

}  // namespace rabiparity
