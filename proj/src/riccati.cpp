#include "rabiparity/riccati.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace rabiparity {

namespace {

constexpr double kExactInvolutionTol = 1e-12;

void require_coefficient_dims(const RiccatiCoefficients& c, const ComplexMatrix& x) {
  if (c.hm.dim() != c.hp.dim() || c.v.dim() != c.hp.dim() || x.dim() != c.hp.dim()) {
    throw DimensionError("riccati: coefficient and candidate dimensions differ");
  }
}

double involution_defect(const ComplexMatrix& x) {
  const ComplexMatrix sq = mat_mul(x, x) - ComplexMatrix::identity(x.dim());
  return frobenius_norm(sq) / std::sqrt(static_cast<double>(x.dim()));
}

}  // namespace

RiccatiCoefficients riccati_coefficients(const BlockOperator& b) { return {b.hp, b.hm, b.v}; }

RiccatiCoefficients riccati_coefficients(const ModelParams& p) {
  return riccati_coefficients(build_hpm(p));
}

ComplexMatrix assemble(const RiccatiCoefficients& c) {
  return block_matrix(c.hp, c.v, adjoint(c.v), c.hm);
}

double coefficient_scale(const RiccatiCoefficients& c) {
  return frobenius_norm(c.hp) + frobenius_norm(c.hm) + 2.0 * frobenius_norm(c.v);
}

ComplexMatrix residual(const RiccatiCoefficients& c, const ComplexMatrix& x) {
  require_coefficient_dims(c, x);
  ComplexMatrix r = mat_mul(mat_mul(x, c.v), x);
  r += mat_mul(x, c.hp);
  r -= mat_mul(c.hm, x);
  r -= adjoint(c.v);
  return r;
}

VerificationReport verify_involution_solution(const RiccatiCoefficients& c, const ComplexMatrix& x,
                                              double tolerance) {
  require_coefficient_dims(c, x);
  VerificationReport report;
  report.tolerance = tolerance;

  report.residual_norm = frobenius_norm(residual(c, x));
  const double scale = coefficient_scale(c);
  report.relative_residual = scale > 0.0 ? report.residual_norm / scale : report.residual_norm;

  report.involution_defect = involution_defect(x);
  const double hpm_scale = frobenius_norm(c.hp) + frobenius_norm(c.hm);
  const double intertwining = frobenius_norm(mat_mul(x, c.hp) - mat_mul(c.hm, x));
  report.intertwining_defect = hpm_scale > 0.0 ? intertwining / hpm_scale : intertwining;

  report.is_involution = report.involution_defect <= tolerance;
  report.intertwines = report.intertwining_defect <= tolerance;
  report.passed = report.is_involution && report.intertwines && report.relative_residual <= tolerance;
  return report;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["residual_norm"] = residual_norm;
  j["relative_residual"] = relative_residual;
  j["is_involution"] = is_involution;
  j["intertwines"] = intertwines;
  j["spectra_match"] = spectra_match ? nlohmann::ordered_json(*spectra_match) : nlohmann::ordered_json();
  if (params) {
    j["params"] = {{"alpha", params->alpha}, {"omega", params->omega}, {"g_re", params->g.real()},
                   {"g_im", params->g.imag()}, {"k", params->k},         {"dim", params->dim}};
  } else {
    j["params"] = nullptr;
  }
  j["tolerance"] = tolerance;
  j["passed"] = passed;
  j["candidate"] = candidate;
  j["involution_defect"] = involution_defect;
  j["intertwining_defect"] = intertwining_defect;
  return j.dump(indent);
}

SimilarityTransform build_S(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  if (!is_hermitian(x, kExactInvolutionTol) || involution_defect(x) > kExactInvolutionTol) {
    throw VerificationError(
        "build_S: closed-form inverse requires a Hermitian involution; general inversion is not supported");
  }
  const ComplexMatrix id = ComplexMatrix::identity(n);
  SimilarityTransform t;
  t.s = block_matrix(id, -adjoint(x), x, id);
  t.s_inv = block_matrix(id, x, -x, id);
  t.s_inv *= 0.5;
  return t;
}

BlockDiagonalForm block_diagonalize(const RiccatiCoefficients& c, const ComplexMatrix& x,
                                    double tolerance) {
  const VerificationReport report = verify_involution_solution(c, x, tolerance);
  if (!report.passed) {
    throw VerificationError("block_diagonalize: candidate is not a verified Riccati solution (relative residual " +
                            std::to_string(report.relative_residual) + ")");
  }
  const ComplexMatrix vx = mat_mul(c.v, x);
  return {c.hp + vx, c.hm - adjoint(vx)};
}

ComplexMatrix transformed_hamiltonian(const RiccatiCoefficients& c, const SimilarityTransform& t) {
  return mat_mul(mat_mul(t.s_inv, assemble(c)), t.s);
}

double off_diagonal_block_norm(const ComplexMatrix& m) {
  if (m.dim() % 2 != 0) throw DimensionError("off_diagonal_block_norm: matrix size must be even");
  const std::size_t half = m.dim() / 2;
  const double upper = frobenius_norm(sub_block(m, 0, half, half));
  const double lower = frobenius_norm(sub_block(m, half, 0, half));
  return std::hypot(upper, lower);
}

double block_spectrum_deviation(const RiccatiCoefficients& c, const BlockDiagonalForm& blocks) {
  std::vector<double> merged = eigvals_hermitian(blocks.top);
  const std::vector<double> bottom = eigvals_hermitian(blocks.bottom);
  merged.insert(merged.end(), bottom.begin(), bottom.end());
  std::sort(merged.begin(), merged.end());
  const std::vector<double> full = eigvals_hermitian(assemble(c));
  double worst = 0.0;
  for (std::size_t i = 0; i < full.size(); ++i) worst = std::max(worst, std::abs(full[i] - merged[i]));
  return worst;
}

Candidate parse_candidate(std::string_view name) {
  if (name == "xk") return Candidate::GeneralizedParity;
  if (name == "p") return Candidate::BosonicParity;
  if (name == "t") return Candidate::TwoPhotonParity;
  throw DomainError("unknown candidate '" + std::string(name) + "' (expected xk, p or t)");
}

std::string_view candidate_name(Candidate c) {
  switch (c) {
    case Candidate::GeneralizedParity: return "xk";
    case Candidate::BosonicParity: return "p";
    case Candidate::TwoPhotonParity: return "t";
  }
  return "?";
}

ParityOperator candidate_operator(Candidate c, int k, std::size_t dim) {
  switch (c) {
    case Candidate::GeneralizedParity: return generalized_parity(k, dim);
    case Candidate::BosonicParity: return special_parity_P(dim);
    case Candidate::TwoPhotonParity: return special_parity_T(dim);
  }
  throw DomainError("unknown candidate");
}

VerificationReport verify_model(const ModelParams& p, Candidate candidate, double tolerance,
                                bool with_spectra) {
  p.validate();
  const RiccatiCoefficients c = riccati_coefficients(p);
  const ComplexMatrix x = candidate_operator(candidate, p.k, p.dim).matrix();
  VerificationReport report = verify_involution_solution(c, x, tolerance);
  report.params = p;
  report.candidate = std::string(candidate_name(candidate));
  if (report.passed && with_spectra) {
    report.spectra_match = block_spectrum_deviation(c, block_diagonalize(c, x, tolerance));
  }
  return report;
}

}  // namespace rabiparity
