#include "rabiparity/spectra.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <thread>

#include "rabiparity/parity.hpp"

namespace rabiparity {

namespace {

std::vector<double> lowest(std::vector<double> values, std::size_t m) {
  values.resize(std::min(m, values.size()));
  return values;
}

// Time evolution of one block through its eigendecomposition.
class BlockPropagator {
 public:
  explicit BlockPropagator(const ComplexMatrix& h) : eig_(eig_hermitian(h)) {}

  // Coefficients of v in the eigenbasis.
  ComplexVector project(std::span<const Complex> v) const {
    const std::size_t n = eig_.values.size();
    ComplexVector c(n);
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t r = 0; r < n; ++r) sum += std::conj(eig_.vectors(r, j)) * v[r];
      c[j] = sum;
    }
    return c;
  }

  ComplexVector at(std::span<const Complex> coeffs, double t) const {
    const std::size_t n = eig_.values.size();
    ComplexVector phased(n);
    for (std::size_t j = 0; j < n; ++j) phased[j] = std::polar(1.0, -eig_.values[j] * t) * coeffs[j];
    return mat_vec(eig_.vectors, phased);
  }

 private:
  HermitianEigen eig_;
};

}  // namespace

SectorSpectrum sector_spectrum(const ModelParams& p, std::size_t m, double tolerance) {
  p.validate();
  if (m > p.dim) throw DomainError("sector_spectrum: requested levels exceed dim");
  const RiccatiCoefficients c = riccati_coefficients(p);
  const BlockDiagonalForm blocks = block_diagonalize(c, generalized_parity(p.k, p.dim).matrix(), tolerance);
  return {lowest(eigvals_hermitian(blocks.top), m), lowest(eigvals_hermitian(blocks.bottom), m)};
}

std::vector<Level> merge_lowest(const SectorSpectrum& s, std::size_t m) {
  std::vector<Level> all;
  all.reserve(s.top.size() + s.bottom.size());
  for (std::size_t i = 0; i < s.top.size(); ++i) all.push_back({'+', i, s.top[i]});
  for (std::size_t i = 0; i < s.bottom.size(); ++i) all.push_back({'-', i, s.bottom[i]});
  std::stable_sort(all.begin(), all.end(), [](const Level& a, const Level& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.block != b.block) return a.block == '+';
    return a.level < b.level;
  });
  all.resize(std::min(m, all.size()));
  return all;
}

SweepParam parse_sweep_param(std::string_view name) {
  if (name == "g") return SweepParam::CouplingMagnitude;
  if (name == "alpha") return SweepParam::Alpha;
  if (name == "omega") return SweepParam::Omega;
  throw DomainError("unknown sweep parameter '" + std::string(name) + "' (expected g, alpha or omega)");
}

void SweepSpec::validate() const {
  base.validate();
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) throw DomainError("sweep: need finite lo <= hi");
  if (steps < 2) throw DomainError("sweep: steps must be at least 2");
  if (levels < 1 || levels > base.dim) throw DomainError("sweep: levels must lie in 1..dim");
  if (param == SweepParam::CouplingMagnitude && lo < 0.0) throw DomainError("sweep: |g| must be >= 0");
  if (param == SweepParam::Omega && lo <= 0.0) throw DomainError("sweep: omega must stay > 0");
}

double SweepSpec::value_at(int step) const {
  return lo + (hi - lo) * static_cast<double>(step) / static_cast<double>(steps - 1);
}

ModelParams SweepSpec::params_at(int step) const {
  ModelParams p = base;
  const double value = value_at(step);
  switch (param) {
    case SweepParam::CouplingMagnitude:
      p.g = std::polar(value, std::abs(base.g) > 0.0 ? std::arg(base.g) : 0.0);
      break;
    case SweepParam::Alpha: p.alpha = value; break;
    case SweepParam::Omega: p.omega = value; break;
  }
  return p;
}

std::vector<SweepRow> sweep(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  const auto points = static_cast<std::size_t>(spec.steps);
  std::vector<std::vector<SweepRow>> per_point(points);

  const auto run_point = [&](std::size_t i) {
    const int step = static_cast<int>(i);
    const SectorSpectrum s = sector_spectrum(spec.params_at(step), spec.levels);
    const double value = spec.value_at(step);
    auto& rows = per_point[i];
    for (std::size_t l = 0; l < s.top.size(); ++l) rows.push_back({value, '+', l, s.top[l]});
    for (std::size_t l = 0; l < s.bottom.size(); ++l) rows.push_back({value, '-', l, s.bottom[l]});
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(points)));
  if (workers == 1) {
    for (std::size_t i = 0; i < points; ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < points; i = next++) run_point(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<SweepRow> rows;
  for (auto& point : per_point) rows.insert(rows.end(), point.begin(), point.end());
  return rows;
}

Trajectory evolve(const ModelParams& p, const EvolutionSpec& e) {
  p.validate();
  const std::size_t n = p.dim;
  if (e.initial.size() != 2 * n) throw DimensionError("evolve: initial state must have length 2*dim");
  if (std::abs(vector_norm(e.initial) - 1.0) > 1e-12) throw DomainError("evolve: initial state is not normalized");
  if (e.steps < 0 || !std::isfinite(e.dt)) throw DomainError("evolve: need steps >= 0 and finite dt");

  const RiccatiCoefficients c = riccati_coefficients(p);
  const ComplexMatrix x = generalized_parity(p.k, n).matrix();
  const BlockDiagonalForm blocks = block_diagonalize(c, x);
  const SimilarityTransform st = build_S(x);

  const ComplexVector rotated = mat_vec(st.s_inv, e.initial);
  const std::span<const Complex> rotated_view(rotated);
  const BlockPropagator top(blocks.top);
  const BlockPropagator bottom(blocks.bottom);
  const ComplexVector top_coeffs = top.project(rotated_view.first(n));
  const ComplexVector bottom_coeffs = bottom.project(rotated_view.last(n));

  Trajectory traj;
  traj.times.reserve(static_cast<std::size_t>(e.steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(e.steps) + 1);
  for (int step = 0; step <= e.steps; ++step) {
    const double t = e.dt * step;
    traj.times.push_back(t);
    if (t == 0.0) {
      traj.states.push_back(e.initial);
      continue;
    }
    ComplexVector frame = top.at(top_coeffs, t);
    const ComplexVector lower = bottom.at(bottom_coeffs, t);
    frame.insert(frame.end(), lower.begin(), lower.end());
    traj.states.push_back(mat_vec(st.s, frame));
  }
  return traj;
}

ComplexVector vacuum_state(const ModelParams& p) {
  p.validate();
  ComplexVector v(2 * p.dim);
  v[0] = 1.0;
  return v;
}

ComplexVector read_state(std::istream& in) {
  long long len = 0;
  if (!(in >> len) || len <= 0) throw DomainError("read_state: missing or invalid length line");
  ComplexVector v(static_cast<std::size_t>(len));
  for (auto& e : v) {
    double re = 0.0;
    double im = 0.0;
    if (!(in >> re >> im)) throw DomainError("read_state: truncated entry list");
    if (!std::isfinite(re) || !std::isfinite(im)) throw DomainError("read_state: non-finite entry");
    e = {re, im};
  }
  return v;
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "param,block,level,eigenvalue\n";
  for (const SweepRow& r : rows) {
    out << format_real(r.param) << ',' << r.block << ',' << r.level << ',' << format_real(r.eigenvalue) << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  out << "t,component_index,re,im\n";
  for (std::size_t s = 0; s < t.times.size(); ++s) {
    const std::string time = format_real(t.times[s]);
    for (std::size_t i = 0; i < t.states[s].size(); ++i) {
      out << time << ',' << i << ',' << format_real(t.states[s][i].real()) << ','
          << format_real(t.states[s][i].imag()) << '\n';
    }
  }
}

}  // namespace rabiparity
