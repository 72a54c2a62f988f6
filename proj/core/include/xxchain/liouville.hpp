// liouville.hpp — brute-force ground truth for small chains: the full 2^N
// spin Hamiltonian, eigenoperator dissipators from spectral projectors, the
// steady state as the Liouvillian null space, and direct flux evaluation

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "xxchain/bath.hpp"
#include "xxchain/chain.hpp"
#include "xxchain/spectral.hpp"

namespace xxchain::oracle {

using ComplexMatrix = Eigen::MatrixXcd;

enum class Site { kLeft, kRight };

// Dense spin-picture model of a chain with N <= 6 sites. The Hamiltonian is
// assembled from Pauli tensor products (fields h_j/2 sigma^z_j plus
// alpha_j/2 (sigma^x sigma^x + sigma^y sigma^y) couplings); its many-body
// spectrum consists of the subset sums of the single-particle eigenvalues
// shifted by the constant -sum(h)/2.
struct DenseModel {
  ChainSpec chain;
  SpectralData modes;             // single-particle decomposition of W
  ComplexMatrix hamiltonian;      // 2^N x 2^N
  ComplexMatrix coupling_left;    // sigma^x on site 1
  ComplexMatrix coupling_right;   // sigma^x on site N
  Eigen::VectorXd energies;       // many-body eigenvalues, ascending
  ComplexMatrix eigenvectors;     // paired columns
  int sites = 0;
  int dim = 0;
};

DenseModel build_dense_model(const ChainSpec& chain);

// Eigenoperators (omega, A(omega)) of the edge coupling sigma^x, grouped by
// transition frequency with absolute binning tolerance 1e-9. They satisfy
// [H, A(omega)] = -omega A(omega) and A(-omega) = A(omega)^dag, and the
// extracted frequencies are {+-eps_k}. Throws numeric_error if distinct
// single-particle frequencies would merge within the binning tolerance or a
// zero-frequency operator appears.
std::vector<std::pair<double, ComplexMatrix>> eigenoperators(
    const DenseModel& model, Site site);

// Lindblad dissipator superoperator (column-stacked vectorization) built
// from the eigenoperators with rates Gamma(omega). Infinite temperature is
// approximated by T = 1e6 * max|eps_k|, with relative deviation
// O(max|eps|/T); exact-limit results go through the fermionic path instead.
ComplexMatrix build_eigenoperator_dissipator(const DenseModel& model, Site site,
                                             Temperature t, double gamma);

// -i[H, .] as a superoperator.
ComplexMatrix hamiltonian_superoperator(const DenseModel& model);

// Full generator -i[H,.] + D_L + D_R with eigenoperator dissipators.
ComplexMatrix total_liouvillian(const DenseModel& model, const BathPair& baths,
                                double gamma);

// Dissipator assembled from the Jordan-Wigner mode operators instead of
// spectral projectors: jump operators eta~_k (and eta~_k^dag) with rates
// gamma g chi (1-f) and gamma g chi f. For the right bath the exact
// decomposition of sigma^x_N carries the fermion-parity factor exp(i pi N);
// `parity_string` toggles it so its irrelevance for steady states can be
// checked directly.
ComplexMatrix fermionic_dissipator(const DenseModel& model, Site site,
                                   Temperature t, double gamma,
                                   bool parity_string);

// Steady state of a vectorized generator: eigenvector of the eigenvalue
// nearest zero, Hermitized and trace-normalized. Throws numeric_error when
// the numerical null space is not one-dimensional (reporting its dimension),
// when positivity fails beyond 1e-10, or when the residual |L rho| is
// inconsistent with a steady state.
ComplexMatrix steady_state_from_liouvillian(const ComplexMatrix& liouvillian,
                                            int dim);

ComplexMatrix steady_state_density(const DenseModel& model,
                                   const BathPair& baths, double gamma);

// Contact fluxes evaluated directly from dissipator traces:
//   heat_r     = Re tr{H D_r(rho)}
//   particle_r = Re tr{N D_r(rho)}
// In a steady state heat_left = -heat_right and likewise for particles.
struct ContactFluxes {
  double heat_left;
  double heat_right;
  double particle_left;
  double particle_right;
};

ContactFluxes fluxes_from_density(const DenseModel& model, const BathPair& baths,
                                  const ComplexMatrix& rho, double gamma);

// ---- dense operator helpers (also used by the verification suites) ----

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

// Jordan-Wigner mode operator eta~_k = sum_j S(j,k) eta_j.
ComplexMatrix mode_lowering(const DenseModel& model, int mode);

// Fermion parity exp(i pi N) = prod_j(-sigma^z_j).
ComplexMatrix parity_operator(int sites);

// Total number operator sum_j sigma^+_j sigma^-_j.
ComplexMatrix number_operator(int sites);

ComplexMatrix apply_superoperator(const ComplexMatrix& superop,
                                  const ComplexMatrix& rho);

// <eta~_k^dag eta~_k> and <eta~_a^dag eta~_b> in a given state.
std::vector<double> mode_occupations(const DenseModel& model,
                                     const ComplexMatrix& rho);
std::complex<double> mode_coherence(const DenseModel& model,
                                    const ComplexMatrix& rho, int mode_a,
                                    int mode_b);

}  // namespace xxchain::oracle
