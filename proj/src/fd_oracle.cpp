#include "mll/fd_oracle.hpp"

#include <limits>

#include "mll/error.hpp"
#include "mll/parallel.hpp"
#include "mll/simd.hpp"
#include "mll/spectral.hpp"

namespace mll {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void forward_row(const simd::StencilRow& row) {
  const double inv_h = 1.0 / row.h;
  const double inv_h2 = inv_h * inv_h;
  for (std::size_t i = 1; i + 1 < row.n; ++i) {
    const Complex f = row.mid[i];
    const Complex fx = (row.mid[i + 1] - f) * inv_h;
    const Complex fy = (row.up[i] - f) * inv_h;
    const Complex lap = (row.mid[i + 1] + row.mid[i - 1] + row.up[i] + row.down[i] - 4.0 * f) * inv_h2;
    const Complex drift = row.s[i].real() * fy - row.s[i].imag() * fx;
    row.out[i] = -0.25 * lap + kI * drift + row.v[i] * f;
  }
}

}  // namespace

void Grid::validate() const {
  if (n < 9) throw Error(ErrorCode::GridTooCoarse, "grid needs at least 9 points per axis");
  if (n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "grid size must be odd");
  if (!(half_width > 0.0)) throw Error(ErrorCode::InvalidArgument, "grid half width must be positive");
}

Complex Grid::point(int i, int j) const {
  const double h = spacing();
  return center + Complex{-half_width + i * h, -half_width + j * h};
}

GridField sample(const Grid& grid, const std::function<Complex(Complex)>& f) {
  grid.validate();
  GridField out{grid, std::vector<Complex>(grid.size())};
  for (int j = 0; j < grid.n; ++j) {
    for (int i = 0; i < grid.n; ++i) out.values[static_cast<std::size_t>(j) * grid.n + i] = f(grid.point(i, j));
  }
  return out;
}

GridField sample(const Grid& grid, const WickFunction& f) {
  return sample(grid, [&](Complex z) { return wick_eval(f, z); });
}

GridField fd_apply_L(const ModelParams& p, const GridField& field, Stencil stencil) {
  const Grid& g = field.grid;
  g.validate();
  if (field.values.size() != g.size()) throw Error(ErrorCode::InvalidArgument, "samples do not cover the grid");
  GridField out{g, std::vector<Complex>(g.size(), Complex{kNaN, kNaN})};
  const std::size_t n = static_cast<std::size_t>(g.n);
  const auto row_kernel = stencil == Stencil::Central ? simd::kernels(simd::active_isa()).stencil_row : &forward_row;
  parallel_for(n - 2, [&](std::size_t r) {
    const std::size_t j = r + 1;
    std::vector<Complex> s(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex z = g.point(static_cast<int>(i), static_cast<int>(j));
      s[i] = s_function(p, z);
      v[i] = std::norm(s[i]) - 0.25 * p.mu * harmonic_defect(p, z);
    }
    const Complex* base = field.values.data();
    simd::StencilRow row{base + (j + 1) * n, base + j * n, base + (j - 1) * n, s.data(), v.data(),
                         out.values.data() + j * n, n, g.spacing()};
    row_kernel(row);
  });
  return out;
}

double convergence_order(const ModelParams& p, const WickFunction& f, const Grid& coarse, Stencil stencil) {
  coarse.validate();
  const WickFunction exact = apply_L(p, f);
  Grid fine = coarse;
  fine.n = 2 * coarse.n - 1;
  const GridField lc = fd_apply_L(p, sample(coarse, f), stencil);
  const GridField lf = fd_apply_L(p, sample(fine, f), stencil);
  double err_c = 0.0, err_f = 0.0, scale = 0.0;
  for (int j = 1; j < coarse.n - 1; ++j) {
    for (int i = 1; i < coarse.n - 1; ++i) {
      const Complex ref = wick_eval(exact, coarse.point(i, j));
      scale = std::max(scale, std::abs(ref));
      err_c = std::max(err_c, std::abs(lc.at(i, j) - ref));
      err_f = std::max(err_f, std::abs(lf.at(2 * i, 2 * j) - ref));
    }
  }
  // Rounding in the second difference is about eps |f| / h^2.
  const double h = coarse.spacing();
  const double noise = 1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale) / (h * h);
  if (err_c <= noise) return std::numeric_limits<double>::infinity();
  return std::log2(err_c / err_f);
}

double fd_eigen_residual(const ModelParams& p, int m, int n, const Grid& grid, std::optional<double> eigenvalue) {
  const WickFunction psi = eigenfunction(p, m, n);
  const double lambda = eigenvalue.value_or(landau_level(p, m));
  const GridField f = sample(grid, psi);
  const GridField lf = fd_apply_L(p, f);
  double worst = 0.0, peak = 0.0;
  for (int j = 0; j < grid.n; ++j) {
    for (int i = 0; i < grid.n; ++i) {
      peak = std::max(peak, std::abs(f.at(i, j)));
      if (grid.interior(i, j)) worst = std::max(worst, std::abs(lf.at(i, j) - lambda * f.at(i, j)));
    }
  }
  return peak > 0.0 ? worst / peak : worst;
}

}  // namespace mll
