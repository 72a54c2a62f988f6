#include "xxchain/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xxchain/errors.hpp"

namespace xxchain::oracle {

namespace {

using Complex = std::complex<double>;

constexpr double kFrequencyBinTol = 1e-9;
constexpr double kInfiniteTemperatureScale = 1e6;

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix sigma_minus() {
  ComplexMatrix m(2, 2);
  m << 0, 0, 1, 0;
  return m;
}

// Tensor product over the chain with `op` on one site, identity elsewhere;
// site 0 is the leftmost factor.
ComplexMatrix site_operator(const ComplexMatrix& op, int site, int sites) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int j = 0; j < sites; ++j) {
    out = kronecker(out, j == site ? op : ComplexMatrix::Identity(2, 2));
  }
  return out;
}

// eta_j: sigma^- at site j preceded by the (-sigma^z) string.
ComplexMatrix jordan_wigner_lowering(int site, int sites) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int j = 0; j < sites; ++j) {
    if (j < site) {
      out = kronecker(out, -pauli_z());
    } else if (j == site) {
      out = kronecker(out, sigma_minus());
    } else {
      out = kronecker(out, ComplexMatrix::Identity(2, 2));
    }
  }
  return out;
}

Eigen::VectorXcd vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

// D[A] rho = A rho A^dag - (1/2){A^dag A, rho} in column-stacked form.
ComplexMatrix jump_superoperator(const ComplexMatrix& jump) {
  const auto d = jump.rows();
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  const ComplexMatrix anticomm = jump.adjoint() * jump;
  return kronecker(jump.conjugate(), jump) -
         0.5 * (kronecker(identity, anticomm) +
                kronecker(anticomm.transpose(), identity));
}

// Infinite temperature enters the oracle as a large finite value; the exact
// limit lives in the fermionic formulas.
Temperature oracle_temperature(Temperature t, const SpectralData& modes) {
  if (!t.is_infinite()) return t;
  double scale = 0.0;
  for (double eps : modes.eps) scale = std::max(scale, std::abs(eps));
  if (scale == 0.0) {
    throw numeric_error(
        "oracle: infinite-temperature substitution undefined for an all-zero "
        "spectrum");
  }
  return Temperature::finite(kInfiniteTemperatureScale * scale);
}

const ComplexMatrix& coupling_of(const DenseModel& model, Site site) {
  return site == Site::kLeft ? model.coupling_left : model.coupling_right;
}

}  // namespace

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

DenseModel build_dense_model(const ChainSpec& chain) {
  const int n = chain.sites();
  if (n > 6) {
    throw validation_error(
        "oracle: dense model limited to 6 sites (2^N blowup), got " +
        std::to_string(n));
  }
  DenseModel model;
  model.chain = chain;
  model.modes = diagonalize(chain);
  model.sites = n;
  model.dim = 1 << n;

  const ComplexMatrix sx = pauli_x();
  const ComplexMatrix sy = pauli_y();
  const ComplexMatrix sz = pauli_z();

  ComplexMatrix h = ComplexMatrix::Zero(model.dim, model.dim);
  for (int j = 0; j < n; ++j) {
    h += 0.5 * chain.field[static_cast<std::size_t>(j)] * site_operator(sz, j, n);
  }
  for (int j = 0; j + 1 < n; ++j) {
    const double alpha = chain.coupling[static_cast<std::size_t>(j)];
    h += 0.5 * alpha *
         (site_operator(sx, j, n) * site_operator(sx, j + 1, n) +
          site_operator(sy, j, n) * site_operator(sy, j + 1, n));
  }
  model.hamiltonian = std::move(h);
  model.coupling_left = site_operator(sx, 0, n);
  model.coupling_right = site_operator(sx, n - 1, n);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(model.hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw numeric_error("oracle: eigendecomposition of the dense Hamiltonian failed");
  }
  model.energies = solver.eigenvalues();
  model.eigenvectors = solver.eigenvectors();
  return model;
}

std::vector<std::pair<double, ComplexMatrix>> eigenoperators(
    const DenseModel& model, Site site) {
  // Distinct single-particle transition frequencies must stay distinguishable
  // at the binning tolerance.
  std::vector<double> expected;
  for (double eps : model.modes.eps) {
    expected.push_back(eps);
    expected.push_back(-eps);
  }
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i + 1 < expected.size(); ++i) {
    const double gap = expected[i + 1] - expected[i];
    if (gap > 0.0 && gap < kFrequencyBinTol) {
      throw numeric_error(
          "oracle: distinct transition frequencies closer than the binning "
          "tolerance; eigenoperator construction is ambiguous");
    }
  }

  const ComplexMatrix& coupling = coupling_of(model, site);
  const ComplexMatrix in_eigenbasis =
      model.eigenvectors.adjoint() * coupling * model.eigenvectors;
  const double cutoff = 1e-12 * in_eigenbasis.cwiseAbs().maxCoeff();

  struct Entry {
    double omega;
    Eigen::Index row;
    Eigen::Index col;
  };
  std::vector<Entry> entries;
  for (Eigen::Index i = 0; i < in_eigenbasis.rows(); ++i) {
    for (Eigen::Index j = 0; j < in_eigenbasis.cols(); ++j) {
      if (std::abs(in_eigenbasis(i, j)) <= cutoff) continue;
      // Row i below row j in energy removes omega = E_j - E_i, so this entry
      // belongs to A(omega) with [H, A(omega)] = -omega A(omega).
      entries.push_back(Entry{model.energies(j) - model.energies(i), i, j});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.omega < b.omega; });

  std::vector<std::pair<double, ComplexMatrix>> result;
  std::size_t begin = 0;
  while (begin < entries.size()) {
    std::size_t end = begin + 1;
    while (end < entries.size() &&
           entries[end].omega - entries[end - 1].omega <= kFrequencyBinTol) {
      ++end;
    }
    ComplexMatrix block = ComplexMatrix::Zero(model.dim, model.dim);
    double omega_sum = 0.0;
    for (std::size_t k = begin; k < end; ++k) {
      block(entries[k].row, entries[k].col) =
          in_eigenbasis(entries[k].row, entries[k].col);
      omega_sum += entries[k].omega;
    }
    const double omega = omega_sum / static_cast<double>(end - begin);
    if (std::abs(omega) < kFrequencyBinTol) {
      throw numeric_error(
          "oracle: zero transition frequency extracted; Gamma(0) is undefined");
    }
    result.emplace_back(
        omega, model.eigenvectors * block * model.eigenvectors.adjoint());
    begin = end;
  }
  return result;
}

ComplexMatrix build_eigenoperator_dissipator(const DenseModel& model, Site site,
                                             Temperature t, double gamma) {
  const Temperature effective = oracle_temperature(t, model.modes);
  const Eigen::Index d = model.dim;
  ComplexMatrix dissipator = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& [omega, jump] : eigenoperators(model, site)) {
    dissipator += gamma_rate(omega, effective, gamma) * jump_superoperator(jump);
  }
  return dissipator;
}

ComplexMatrix hamiltonian_superoperator(const DenseModel& model) {
  const int d = model.dim;
  const ComplexMatrix identity = ComplexMatrix::Identity(d, d);
  return Complex(0, -1) * (kronecker(identity, model.hamiltonian) -
                           kronecker(model.hamiltonian.transpose(), identity));
}

ComplexMatrix total_liouvillian(const DenseModel& model, const BathPair& baths,
                                double gamma) {
  return hamiltonian_superoperator(model) +
         build_eigenoperator_dissipator(model, Site::kLeft, baths.left, gamma) +
         build_eigenoperator_dissipator(model, Site::kRight, baths.right, gamma);
}

ComplexMatrix fermionic_dissipator(const DenseModel& model, Site site,
                                   Temperature t, double gamma,
                                   bool parity_string) {
  const Temperature effective = oracle_temperature(t, model.modes);
  const Eigen::Index d = model.dim;
  const ComplexMatrix parity = parity_operator(model.sites);
  ComplexMatrix dissipator = ComplexMatrix::Zero(d * d, d * d);

  for (int k = 0; k < model.modes.size(); ++k) {
    const double g = site == Site::kLeft
                         ? model.modes.g_left[static_cast<std::size_t>(k)]
                         : model.modes.g_right[static_cast<std::size_t>(k)];
    if (g == 0.0) continue;
    const double eps = model.modes.eps[static_cast<std::size_t>(k)];
    const double chi_k = chi(eps, effective);
    if (std::isinf(chi_k)) {
      throw numeric_error(
          "oracle: zero-energy mode has no finite fermionic jump rates");
    }
    const double occupation = fermi(eps, effective);
    ComplexMatrix lower = mode_lowering(model, k);
    if (parity_string) lower = lower * parity;
    const ComplexMatrix raise = lower.adjoint();
    dissipator +=
        gamma * g * chi_k * (1.0 - occupation) * jump_superoperator(lower);
    dissipator += gamma * g * chi_k * occupation * jump_superoperator(raise);
  }
  return dissipator;
}

ComplexMatrix steady_state_from_liouvillian(const ComplexMatrix& liouvillian,
                                            int dim) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(liouvillian);
  if (solver.info() != Eigen::Success) {
    throw numeric_error("oracle: eigendecomposition of the Liouvillian failed");
  }
  const Eigen::VectorXcd& values = solver.eigenvalues();

  double scale = 0.0;
  Eigen::Index nearest = 0;
  double nearest_abs = std::abs(values(0));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double a = std::abs(values(i));
    scale = std::max(scale, a);
    if (a < nearest_abs) {
      nearest_abs = a;
      nearest = i;
    }
  }
  const double null_tol = 1e-9 * std::max(1.0, scale);
  const auto null_dim =
      std::count_if(values.begin(), values.end(),
                    [&](Complex v) { return std::abs(v) <= null_tol; });
  if (null_dim > 1) {
    throw numeric_error("oracle: steady state not unique; null space dimension " +
                        std::to_string(null_dim));
  }

  ComplexMatrix rho =
      Eigen::Map<const ComplexMatrix>(solver.eigenvectors().col(nearest).data(),
                                      dim, dim);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double trace = rho.trace().real();
  if (std::abs(trace) < 1e-14) {
    throw numeric_error("oracle: null vector has vanishing trace");
  }
  rho /= trace;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> spectrum(rho);
  if (spectrum.eigenvalues().minCoeff() < -1e-10) {
    throw numeric_error("oracle: steady state not positive semidefinite");
  }
  const double residual = (liouvillian * vectorize(rho)).norm();
  if (residual > 1e-10 * std::max(1.0, scale)) {
    throw numeric_error("oracle: steady-state residual " +
                        std::to_string(residual) + " too large");
  }
  return rho;
}

ComplexMatrix steady_state_density(const DenseModel& model,
                                   const BathPair& baths, double gamma) {
  return steady_state_from_liouvillian(total_liouvillian(model, baths, gamma),
                                       model.dim);
}

ContactFluxes fluxes_from_density(const DenseModel& model, const BathPair& baths,
                                  const ComplexMatrix& rho, double gamma) {
  const ComplexMatrix number = number_operator(model.sites);
  ContactFluxes fluxes{};
  for (Site site : {Site::kLeft, Site::kRight}) {
    const Temperature t = site == Site::kLeft ? baths.left : baths.right;
    const ComplexMatrix dissipated = apply_superoperator(
        build_eigenoperator_dissipator(model, site, t, gamma), rho);
    const double heat = (model.hamiltonian * dissipated).trace().real();
    const double particles = (number * dissipated).trace().real();
    if (site == Site::kLeft) {
      fluxes.heat_left = heat;
      fluxes.particle_left = particles;
    } else {
      fluxes.heat_right = heat;
      fluxes.particle_right = particles;
    }
  }
  return fluxes;
}

ComplexMatrix mode_lowering(const DenseModel& model, int mode) {
  const int n = model.sites;
  ComplexMatrix out = ComplexMatrix::Zero(model.dim, model.dim);
  for (int j = 0; j < n; ++j) {
    const double weight = model.modes.eigenvector(j, mode);
    if (weight == 0.0) continue;
    out += weight * jordan_wigner_lowering(j, n);
  }
  return out;
}

ComplexMatrix parity_operator(int sites) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int j = 0; j < sites; ++j) {
    out = kronecker(out, -pauli_z());
  }
  return out;
}

ComplexMatrix number_operator(int sites) {
  const int dim = 1 << sites;
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const ComplexMatrix up = 0.5 * (ComplexMatrix::Identity(2, 2) + pauli_z());
  for (int j = 0; j < sites; ++j) {
    out += site_operator(up, j, sites);
  }
  return out;
}

ComplexMatrix apply_superoperator(const ComplexMatrix& superop,
                                  const ComplexMatrix& rho) {
  const auto d = rho.rows();
  const Eigen::VectorXcd mapped = superop * vectorize(rho);
  return Eigen::Map<const ComplexMatrix>(mapped.data(), d, d);
}

std::vector<double> mode_occupations(const DenseModel& model,
                                     const ComplexMatrix& rho) {
  std::vector<double> out(static_cast<std::size_t>(model.modes.size()));
  for (int k = 0; k < model.modes.size(); ++k) {
    const ComplexMatrix lower = mode_lowering(model, k);
    out[static_cast<std::size_t>(k)] =
        (lower.adjoint() * lower * rho).trace().real();
  }
  return out;
}

std::complex<double> mode_coherence(const DenseModel& model,
                                    const ComplexMatrix& rho, int mode_a,
                                    int mode_b) {
  const ComplexMatrix a = mode_lowering(model, mode_a);
  const ComplexMatrix b = mode_lowering(model, mode_b);
  return (a.adjoint() * b * rho).trace();
}

}  // namespace xxchain::oracle
