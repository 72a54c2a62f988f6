// spectral.hpp — single-particle eigenproblem of the chain: eigenvalues,
// orthogonal eigenvector matrix and boundary coupling weights

#pragma once

#include <utility>
#include <vector>

#include "xxchain/chain.hpp"

namespace xxchain {

// Eigen-decomposition of the tridiagonal matrix W = S diag(eps) S^T.
// Column k of S pairs with eps[k]. The coupling weights are the squared
// boundary overlaps g_{L,k} = S(1,k)^2 and g_{R,k} = S(N,k)^2, so each
// weight list is nonnegative and sums to one.
struct SpectralData {
  std::vector<double> eps;      // eigenvalues
  std::vector<double> g_left;   // squared overlap with site 1
  std::vector<double> g_right;  // squared overlap with site N
  std::vector<double> s;        // N x N orthogonal matrix, column-major

  // Pairs (k, k') of modes closer than the degeneracy tolerance
  // |eps_k - eps_k'| < 1e-9 * max(1, |eps_k|). Computation proceeds; the
  // secular master equation is unreliable for such spectra.
  std::vector<std::pair<int, int>> degenerate_pairs;

  int size() const { return static_cast<int>(eps.size()); }
  double eigenvector(int site, int mode) const {
    return s[static_cast<std::size_t>(site) +
             static_cast<std::size_t>(mode) * eps.size()];
  }
  bool degenerate() const { return !degenerate_pairs.empty(); }

  // Reorders modes by ascending eigenvalue (stable), keeping eps, weights
  // and eigenvector columns paired.
  void sort_ascending();
};

// Numerical diagonalization via an implicit-shift QL iteration dedicated to
// symmetric tridiagonal matrices. Eigenvalues sorted ascending. Throws
// numeric_error if the iteration cap is exceeded.
SpectralData diagonalize(const ChainSpec& chain);

// Closed-form spectrum of the boundary-perturbed chain
// (fields [h-alpha, h, ..., h, h+alpha], uniform coupling alpha):
//   eps_k    = h + 2 alpha cos[(2k-1)pi / 2N]
//   S(j,k)   = sqrt(2/N) sin[(2j-1)(2k-1)pi / 4N]
//   g_{L,k}  = (2/N) sin^2[(2k-1)pi / 4N],  g_{R,k} = (2/N) cos^2[...]
// Modes keep the k = 1..N indexing above (descending eigenvalues for
// alpha > 0); call sort_ascending() to match diagonalize() ordering.
SpectralData analytic_spectrum(int sites, double h, double alpha);

// True iff alpha > (h/2) |sec((N+1)pi / 2N)|, i.e. the boundary-perturbed
// spectrum splits into N/2 positive and N/2 negative eigenvalues.
// Requires N even, h > 0, alpha > 0.
bool split_spectrum_condition(int sites, double h, double alpha);

}  // namespace xxchain
