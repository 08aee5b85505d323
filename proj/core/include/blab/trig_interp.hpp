#pragma once

#include <complex>
#include <vector>

#include "blab/field.hpp"

namespace blab {

/// Band-limited evaluation of a scalar Field at arbitrary points.
///
/// Holds the half-complex spectrum of the field; evaluation is the real
/// trigonometric interpolant (cosine convention at the Nyquist mode).
/// Derivative interpolants share the convention of spectral_derivative,
/// so values at grid points agree with the Field operations to round-off.
class TrigInterpolator {
  public:
    explicit TrigInterpolator(const Field& scalar);

    const Grid& grid() const { return grid_; }

    double operator()(const Point& x) const;

    /// d/dx_axis (1-based); Nyquist zeroed.
    TrigInterpolator derivative(int axis) const;
    /// d^2/dx_axis^2 (1-based); Nyquist retained.
    TrigInterpolator second_derivative(int axis) const;

    /// Evaluate on a tensor-product point set; axes[a] lists coordinates
    /// along axis a. Returns values in row-major order (axis 0 slowest).
    std::vector<double> eval_tensor(const std::vector<std::vector<double>>& axes) const;

  private:
    TrigInterpolator(Grid g, std::vector<std::complex<double>> coef, std::array<int, 3> dims);

    Grid grid_;
    std::vector<std::complex<double>> coef_;  // half-complex, premultiplied by 1/n^d
    std::array<int, 3> dims_;                 // stored spectral extents
};

}  // namespace blab
