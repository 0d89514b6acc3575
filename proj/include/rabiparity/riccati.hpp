#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rabiparity/linalg.hpp"
#include "rabiparity/model.hpp"
#include "rabiparity/parity.hpp"

namespace rabiparity {

inline constexpr double kDefaultVerifyTolerance = 1e-10;

// Coefficients of X V X + X H₊ − H₋ X − V† = 0.
struct RiccatiCoefficients {
  ComplexMatrix hp;
  ComplexMatrix hm;
  ComplexMatrix v;

  std::size_t dim() const { return hp.dim(); }
};

RiccatiCoefficients riccati_coefficients(const BlockOperator& b);
RiccatiCoefficients riccati_coefficients(const ModelParams& p);

// [[H₊, V], [V†, H₋]].
ComplexMatrix assemble(const RiccatiCoefficients& c);

// ‖H₊‖_F + ‖H₋‖_F + 2‖V‖_F, the scale residuals are measured against.
double coefficient_scale(const RiccatiCoefficients& c);

// X V X + X H₊ − H₋ X − V†.
ComplexMatrix residual(const RiccatiCoefficients& c, const ComplexMatrix& x);

struct VerificationReport {
  double residual_norm = 0.0;
  double relative_residual = 0.0;     // residual_norm / coefficient_scale
  double involution_defect = 0.0;     // ‖X² − I‖_F / √dim
  double intertwining_defect = 0.0;   // ‖X H₊ − H₋ X‖_F / (‖H₊‖_F + ‖H₋‖_F)
  bool is_involution = false;         // involution_defect ≤ tolerance
  bool intertwines = false;           // intertwining_defect ≤ tolerance
  bool passed = false;                // both of the above and relative_residual ≤ tolerance
  std::optional<double> spectra_match;  // max eigenvalue deviation, block vs full
  std::optional<ModelParams> params;
  std::string candidate;
  double tolerance = kDefaultVerifyTolerance;

  // Keys: residual_norm, relative_residual, is_involution, intertwines,
  // spectra_match (null when not computed), params{alpha, omega, g_re, g_im,
  // k, dim} (null when unknown), tolerance, plus passed, candidate and the
  // two defect norms.
  std::string to_json(int indent = 2) const;
};

// Checks that x is an involution intertwining H₊ and H₋; any such x solves
// the equation whenever V = αI.
VerificationReport verify_involution_solution(const RiccatiCoefficients& c, const ComplexMatrix& x,
                                              double tolerance = kDefaultVerifyTolerance);

struct SimilarityTransform {
  ComplexMatrix s;      // [[I, −X†], [X, I]]
  ComplexMatrix s_inv;  // ½ [[I, X], [−X, I]]
};

// Throws VerificationError unless x is a Hermitian involution to 1e-12; the
// closed-form inverse is only valid in that case.
SimilarityTransform build_S(const ComplexMatrix& x);

struct BlockDiagonalForm {
  ComplexMatrix top;     // H₊ + V X
  ComplexMatrix bottom;  // H₋ − (V X)†
};

// Throws VerificationError when x does not pass verify_involution_solution.
BlockDiagonalForm block_diagonalize(const RiccatiCoefficients& c, const ComplexMatrix& x,
                                    double tolerance = kDefaultVerifyTolerance);

// S⁻¹ · [[H₊, V], [V†, H₋]] · S.
ComplexMatrix transformed_hamiltonian(const RiccatiCoefficients& c, const SimilarityTransform& t);

// Frobenius norm of the two off-diagonal half-size blocks of an even-sized matrix.
double off_diagonal_block_norm(const ComplexMatrix& m);

// Largest |λ_i − μ_i| between the sorted union of block spectra and the
// spectrum of the assembled matrix.
double block_spectrum_deviation(const RiccatiCoefficients& c, const BlockDiagonalForm& blocks);

enum class Candidate { GeneralizedParity, BosonicParity, TwoPhotonParity };

// "xk", "p" or "t"; throws DomainError otherwise.
Candidate parse_candidate(std::string_view name);
std::string_view candidate_name(Candidate c);
ParityOperator candidate_operator(Candidate c, int k, std::size_t dim);

// Builds the model, verifies the candidate and, if it passes and
// with_spectra is set, fills spectra_match.
VerificationReport verify_model(const ModelParams& p, Candidate candidate,
                                double tolerance = kDefaultVerifyTolerance, bool with_spectra = true);

}  // namespace rabiparity
