#include "rabiparity/model.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "rabiparity/fock.hpp"

namespace rabiparity {

void ModelParams::validate() const {
  if (k < 1) {
    throw DomainError("k must be >= 1 (got " + std::to_string(k) +
                      "); k = 0 has no photon exchange and is not a valid model");
  }
  if (dim < 2 * static_cast<std::size_t>(k)) {
    throw DomainError("dim must be at least 2k = " + std::to_string(2 * k) + " (got " +
                      std::to_string(dim) + ")");
  }
  if (!std::isfinite(omega) || omega <= 0.0) throw DomainError("omega must be finite and > 0");
  if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
  if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) throw DomainError("g must be finite");
}

BlockOperator build_hpm(const ModelParams& p) {
  p.validate();
  const std::size_t dim = p.dim;
  const FockOperator ak = power_k(annihilation(dim), p.k);
  const ComplexMatrix coupling = std::conj(p.g) * ak.matrix + p.g * adjoint(ak.matrix);
  const ComplexMatrix free = Complex{p.omega} * number(dim).matrix;
  return {free + coupling, free - coupling, Complex{p.alpha} * ComplexMatrix::identity(dim), dim};
}

ComplexMatrix build_full(const ModelParams& p) {
  const BlockOperator b = build_hpm(p);
  return block_matrix(b.hp, b.v, adjoint(b.v), b.hm);
}

Complex parse_complex(std::string_view text) {
  const auto fail = [&]() -> DomainError {
    return DomainError("malformed complex literal '" + std::string(text) +
                       "' (expected a, a+bi or a-bi)");
  };
  if (text.empty()) throw fail();

  const auto parse_real = [&](std::string_view part) {
    double value = 0.0;
    if (part.empty() || part.front() == '+') throw fail();
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || !std::isfinite(value)) throw fail();
    return value;
  };

  if (text.back() != 'i') return {parse_real(text), 0.0};

  // Split at the last sign that is neither leading nor an exponent sign.
  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) throw fail();
  const double re = parse_real(body.substr(0, split));
  std::string_view imag_part = body.substr(split);
  const bool negative = imag_part.front() == '-';
  imag_part.remove_prefix(1);
  const double im = parse_real(imag_part);
  return {re, negative ? -im : im};
}

}  // namespace rabiparity
