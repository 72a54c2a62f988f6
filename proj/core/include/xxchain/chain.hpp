// chain.hpp — inhomogeneous XX chain specifications and their tridiagonal
// single-particle matrices

#pragma once

#include <vector>

namespace xxchain {

// An open XX spin-1/2 chain: N on-site fields, N-1 exchange couplings and a
// single system-bath rate constant. Units fixed at hbar = k_B = 1.
// Instances are immutable once built; construct through the build_* functions,
// which validate all invariants (N >= 2, gamma > 0, finite entries).
struct ChainSpec {
  std::vector<double> field;     // h_1 .. h_N
  std::vector<double> coupling;  // alpha_1 .. alpha_{N-1}
  double gamma = 1.0;

  int sites() const { return static_cast<int>(field.size()); }
};

// Symmetric tridiagonal N x N matrix: diag = fields, off-diagonals = couplings.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> off;

  int size() const { return static_cast<int>(diag.size()); }

  // Dense entry access; zero outside the tridiagonal band.
  double operator()(int row, int col) const;
};

// Fully custom chain. Throws validation_error on dimension mismatch,
// non-positive gamma, or non-finite entries (each distinctly reported).
ChainSpec build_custom(std::vector<double> field, std::vector<double> coupling,
                       double gamma);

// Homogeneous chain with the boundary fields shifted by -alpha / +alpha:
// fields = [h-alpha, h, ..., h, h+alpha], all couplings = alpha.
ChainSpec build_boundary_perturbed(int sites, double h, double alpha,
                                   double gamma);

// Two half-chains at fields h1 (sites 1..N/2) and h2 (rest), uniform coupling.
// N must be even.
ChainSpec build_field_junction(int sites, double h1, double h2, double alpha,
                               double gamma);

// Two half-chains with couplings alpha1 (bonds 1..N/2) and alpha2 (rest),
// uniform field. The middle bond belongs to the left segment. N must be even.
ChainSpec build_coupling_junction(int sites, double alpha1, double alpha2,
                                  double h, double gamma);

// Linearly graded chain: h_i = h_base + i*h_slope (i = 1..N),
// alpha_i = alpha_base + i*alpha_slope (i = 1..N-1).
ChainSpec build_graded(int sites, double h_base, double h_slope,
                       double alpha_base, double alpha_slope, double gamma);

// Spatial mirror image: fields and couplings reversed. Involution.
ChainSpec reflect(const ChainSpec& chain);

TridiagonalMatrix to_w_matrix(const ChainSpec& chain);

}  // namespace xxchain
