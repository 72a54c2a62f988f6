#include "xxchain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "xxchain/errors.hpp"

namespace xxchain {

namespace {

constexpr int kMaxQlIterations = 50;

// Implicit-shift QL iteration for a symmetric tridiagonal matrix.
// d: diagonal, e: subdiagonal (e[n-1] is workspace), z: column-major
// rotation accumulator seeded with the identity. On return d holds the
// eigenvalues (unsorted) and column k of z the eigenvector of d[k].
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::vector<double>& z, int n) {
  const double eps = std::numeric_limits<double>::epsilon();
  e[static_cast<std::size_t>(n - 1)] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iterations = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iterations++ == kMaxQlIterations) {
        throw numeric_error(
            "spectral: QL iteration failed to converge after " +
            std::to_string(kMaxQlIterations) + " sweeps at row " +
            std::to_string(l) + " of an order-" + std::to_string(n) +
            " tridiagonal matrix");
      }
      // Wilkinson-style shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          // Negligible rotation: split the problem and restart this row.
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        double* zi = z.data() + static_cast<std::ptrdiff_t>(i) * n;
        double* zj = zi + n;
        for (int k = 0; k < n; ++k) {
          f = zj[k];
          zj[k] = s * zi[k] + c * f;
          zi[k] = c * zi[k] - s * f;
        }
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

// Flags adjacent (in eigenvalue order) modes closer than the relative
// degeneracy tolerance.
void flag_degeneracies(SpectralData& data) {
  const int n = data.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return data.eps[static_cast<std::size_t>(a)] <
           data.eps[static_cast<std::size_t>(b)];
  });
  data.degenerate_pairs.clear();
  for (int i = 0; i + 1 < n; ++i) {
    const double a = data.eps[static_cast<std::size_t>(order[i])];
    const double b = data.eps[static_cast<std::size_t>(order[i + 1])];
    if (std::abs(b - a) < 1e-9 * std::max(1.0, std::abs(a))) {
      data.degenerate_pairs.emplace_back(order[i], order[i + 1]);
    }
  }
}

void fill_weights(SpectralData& data) {
  const int n = data.size();
  data.g_left.resize(static_cast<std::size_t>(n));
  data.g_right.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double top = data.eigenvector(0, k);
    const double bottom = data.eigenvector(n - 1, k);
    data.g_left[static_cast<std::size_t>(k)] = top * top;
    data.g_right[static_cast<std::size_t>(k)] = bottom * bottom;
  }
}

}  // namespace

void SpectralData::sort_ascending() {
  const int n = size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return eps[static_cast<std::size_t>(a)] < eps[static_cast<std::size_t>(b)];
  });

  SpectralData sorted;
  sorted.eps.resize(eps.size());
  sorted.g_left.resize(g_left.size());
  sorted.g_right.resize(g_right.size());
  sorted.s.resize(s.size());
  for (int k = 0; k < n; ++k) {
    const auto src = static_cast<std::size_t>(order[static_cast<std::size_t>(k)]);
    sorted.eps[static_cast<std::size_t>(k)] = eps[src];
    sorted.g_left[static_cast<std::size_t>(k)] = g_left[src];
    sorted.g_right[static_cast<std::size_t>(k)] = g_right[src];
    std::copy_n(s.begin() + static_cast<std::ptrdiff_t>(src * eps.size()),
                eps.size(),
                sorted.s.begin() +
                    static_cast<std::ptrdiff_t>(k) *
                        static_cast<std::ptrdiff_t>(eps.size()));
  }
  *this = std::move(sorted);
  flag_degeneracies(*this);
}

SpectralData diagonalize(const ChainSpec& chain) {
  const int n = chain.sites();
  std::vector<double> d = chain.field;
  std::vector<double> e = chain.coupling;
  e.push_back(0.0);
  std::vector<double> z(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                        0.0);
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
      static_cast<std::size_t>(k)] = 1.0;
  }

  tridiagonal_ql(d, e, z, n);

  SpectralData data;
  data.eps = std::move(d);
  data.s = std::move(z);
  fill_weights(data);
  data.sort_ascending();
  return data;
}

SpectralData analytic_spectrum(int sites, double h, double alpha) {
  if (sites < 2) {
    throw validation_error("spectral: analytic spectrum needs at least 2 sites");
  }
  const auto n = static_cast<std::size_t>(sites);
  const double norm = std::sqrt(2.0 / sites);
  const double quarter = std::numbers::pi / (4.0 * sites);

  SpectralData data;
  data.eps.resize(n);
  data.s.resize(n * n);
  for (int k = 0; k < sites; ++k) {
    const double theta = (2.0 * k + 1.0) * quarter;  // (2k-1)pi/4N, 1-based k
    data.eps[static_cast<std::size_t>(k)] = h + 2.0 * alpha * std::cos(2.0 * theta);
    for (int j = 0; j < sites; ++j) {
      data.s[static_cast<std::size_t>(j) + static_cast<std::size_t>(k) * n] =
          norm * std::sin((2.0 * j + 1.0) * theta);
    }
  }
  fill_weights(data);
  flag_degeneracies(data);
  return data;
}

bool split_spectrum_condition(int sites, double h, double alpha) {
  if (sites < 2 || sites % 2 != 0) {
    throw validation_error(
        "spectral: split-spectrum condition requires an even site count");
  }
  if (!(h > 0.0) || !(alpha > 0.0)) {
    throw validation_error(
        "spectral: split-spectrum condition requires h > 0 and alpha > 0");
  }
  const double angle = (sites + 1.0) * std::numbers::pi / (2.0 * sites);
  const double threshold = 0.5 * h * std::abs(1.0 / std::cos(angle));
  return alpha > threshold;
}

}  // namespace xxchain
