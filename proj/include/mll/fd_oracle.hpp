#pragma once

// Finite-difference application of the full operator, including the harmonic
// defect term, for any equivariant pair. Serves as the independent oracle for
// the symbolic path and as the only path for generic pairs.

#include <functional>
#include <optional>
#include <vector>

#include "mll/complex.hpp"
#include "mll/model.hpp"
#include "mll/wick.hpp"

namespace mll {

/// n x n points on the square center +- half_width; n odd and >= 9.
struct Grid {
  Complex center{};
  double half_width = 1.0;
  int n = 9;

  /// Throws GridTooCoarse for n < 9 and InvalidArgument for even n or a
  /// non-positive half width.
  void validate() const;
  double spacing() const { return 2.0 * half_width / (n - 1); }
  /// Point of column i, row j (row j has imaginary part increasing with j).
  Complex point(int i, int j) const;
  std::size_t size() const { return static_cast<std::size_t>(n) * n; }
  bool interior(int i, int j) const { return i > 0 && j > 0 && i < n - 1 && j < n - 1; }
};

/// Values indexed j * n + i. Boundary entries of operator output are NaN.
struct GridField {
  Grid grid;
  std::vector<Complex> values;

  Complex at(int i, int j) const { return values[static_cast<std::size_t>(j) * grid.n + i]; }
};

GridField sample(const Grid& grid, const std::function<Complex(Complex)>& f);
GridField sample(const Grid& grid, const WickFunction& f);

enum class Stencil {
  Central,            // second order
  ForwardFirstOrder,  // one-sided first derivatives; negative control only
};

/// -d_z d_zbar f - (S d_z f - conj(S) d_zbar f) + (|S|^2 - (mu/4) R) f on
/// interior points, with d_z d_zbar = Laplacian/4 on the five-point stencil.
GridField fd_apply_L(const ModelParams& p, const GridField& field, Stencil stencil = Stencil::Central);

/// log2(e(h) / e(h/2)) where e is the max deviation from the symbolic
/// operator over the interior points of the coarse grid; the fine grid has
/// 2n - 1 points on the same square. Returns +infinity when the coarse error
/// is at rounding level (the stencil is exact on f).
double convergence_order(const ModelParams& p, const WickFunction& f, const Grid& coarse,
                         Stencil stencil = Stencil::Central);

/// Interior max of |fd_apply_L(psi_{m,n}) - lambda psi_{m,n}| / max|psi|,
/// lambda = B(2m + 1) unless given.
double fd_eigen_residual(const ModelParams& p, int m, int n, const Grid& grid,
                         std::optional<double> eigenvalue = std::nullopt);

}  // namespace mll
