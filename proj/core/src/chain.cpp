#include "xxchain/chain.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xxchain/errors.hpp"

namespace xxchain {

namespace {

void check_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw validation_error(std::string("chain: non-finite entry in ") + what);
    }
  }
}

void check_sites(int sites) {
  if (sites < 2) {
    throw validation_error("chain: at least two sites required, got " +
                           std::to_string(sites));
  }
}

void check_even(int sites) {
  if (sites % 2 != 0) {
    throw validation_error(
        "chain: junction chains need an even site count, got " +
        std::to_string(sites));
  }
}

}  // namespace

double TridiagonalMatrix::operator()(int row, int col) const {
  if (row == col) return diag[static_cast<std::size_t>(row)];
  if (row == col + 1) return off[static_cast<std::size_t>(col)];
  if (col == row + 1) return off[static_cast<std::size_t>(row)];
  return 0.0;
}

ChainSpec build_custom(std::vector<double> field, std::vector<double> coupling,
                       double gamma) {
  check_sites(static_cast<int>(field.size()));
  if (coupling.size() + 1 != field.size()) {
    throw validation_error("chain: expected " +
                           std::to_string(field.size() - 1) + " couplings for " +
                           std::to_string(field.size()) + " sites, got " +
                           std::to_string(coupling.size()));
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw validation_error("chain: bath rate gamma must be positive and finite");
  }
  check_finite(field, "fields");
  check_finite(coupling, "couplings");
  return ChainSpec{std::move(field), std::move(coupling), gamma};
}

ChainSpec build_boundary_perturbed(int sites, double h, double alpha,
                                   double gamma) {
  check_sites(sites);
  std::vector<double> field(static_cast<std::size_t>(sites), h);
  field.front() = h - alpha;
  field.back() = h + alpha;
  std::vector<double> coupling(static_cast<std::size_t>(sites - 1), alpha);
  return build_custom(std::move(field), std::move(coupling), gamma);
}

ChainSpec build_field_junction(int sites, double h1, double h2, double alpha,
                               double gamma) {
  check_sites(sites);
  check_even(sites);
  std::vector<double> field(static_cast<std::size_t>(sites), h2);
  std::fill_n(field.begin(), sites / 2, h1);
  std::vector<double> coupling(static_cast<std::size_t>(sites - 1), alpha);
  return build_custom(std::move(field), std::move(coupling), gamma);
}

ChainSpec build_coupling_junction(int sites, double alpha1, double alpha2,
                                  double h, double gamma) {
  check_sites(sites);
  check_even(sites);
  std::vector<double> field(static_cast<std::size_t>(sites), h);
  // Bonds 1..N/2 take alpha1 so the left segment is fully coupled at alpha1;
  // the remaining N/2-1 bonds take alpha2.
  std::vector<double> coupling(static_cast<std::size_t>(sites - 1), alpha2);
  std::fill_n(coupling.begin(), sites / 2, alpha1);
  return build_custom(std::move(field), std::move(coupling), gamma);
}

ChainSpec build_graded(int sites, double h_base, double h_slope,
                       double alpha_base, double alpha_slope, double gamma) {
  check_sites(sites);
  std::vector<double> field(static_cast<std::size_t>(sites));
  for (int i = 0; i < sites; ++i) {
    field[static_cast<std::size_t>(i)] = h_base + (i + 1) * h_slope;
  }
  std::vector<double> coupling(static_cast<std::size_t>(sites - 1));
  for (int i = 0; i + 1 < sites; ++i) {
    coupling[static_cast<std::size_t>(i)] = alpha_base + (i + 1) * alpha_slope;
  }
  return build_custom(std::move(field), std::move(coupling), gamma);
}

ChainSpec reflect(const ChainSpec& chain) {
  ChainSpec mirrored = chain;
  std::reverse(mirrored.field.begin(), mirrored.field.end());
  std::reverse(mirrored.coupling.begin(), mirrored.coupling.end());
  return mirrored;
}

TridiagonalMatrix to_w_matrix(const ChainSpec& chain) {
  return TridiagonalMatrix{chain.field, chain.coupling};
}

}  // namespace xxchain
