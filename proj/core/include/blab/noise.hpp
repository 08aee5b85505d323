#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "blab/field.hpp"
#include "blab/spectral.hpp"

namespace blab {

/// Mollifier family, noise strength, and stream seed for V^[L].
struct NoiseModel {
    enum class Kind { gaussian, bump };
    Kind kind = Kind::gaussian;
    double width = 0.5;      // mollifier scale s > 0
    double amplitude = 1.0;  // sigma >= 0, multiplies rho
    std::uint64_t seed = 0;
};

/// Mollifier value rho(x). Gaussian: sigma*(2*pi*s^2)^{-d/2}*exp(-|x|^2/(2s^2)).
/// Bump: compactly supported in |x| < s, normalized to mass sigma.
double rho_eval(const NoiseModel& model, int d, const Point& x);

/// (rho * rho)(x). Closed form for the gaussian kind; dense-grid
/// convolution for the bump kind (supported in |x| < 2s).
double rho_star2(const NoiseModel& model, int d, const Point& x);

/// ||rho||_{L^2}^2 = (rho * rho)(0).
double rho_l2_squared(const NoiseModel& model, int d);

/// Sum over k in Z^d of rho_star2(L*k), truncated when shell terms fall
/// below 1e-16 of the running sum. This is the variance-bound constant.
double variance_constant(const NoiseModel& model, int d, double L);

/// One Ito increment of V^[L] and its spatial gradient over a step of
/// length dt. dgradV is the exact spectral gradient of dV.
struct NoiseIncrement {
    Field dV;
    Field dgradV;
    double dt = 0.0;
};

/// Grid-resident state for sampling V^[L] increments: the periodized
/// mollifier, its DFT, and the exact per-point variance rate of dV.
class NoiseWorkspace {
  public:
    NoiseWorkspace(const NoiseModel& model, const Grid& grid);

    const NoiseModel& model() const { return model_; }
    const Grid& grid() const { return grid_; }

    /// h^d * sum_x rho_per(x)^2: Var[dV(x)] = dt * this, exactly.
    double variance_rate() const { return variance_rate_; }

    /// h^d * rho_per_hat per spectral entry (real, since rho_per is even).
    std::span<const double> convolution_multiplier() const { return conv_mult_; }

    /// Fill dV_hat for (stream_key, step, substep). Pure in its arguments.
    void sample_spectral(std::uint64_t stream_key, std::uint64_t step, std::uint32_t substep, double dt,
                         SpectralWorkspace& ws, std::span<std::complex<double>> dV_hat) const;

    NoiseIncrement sample(std::uint64_t stream_key, std::uint64_t step, double dt, SpectralWorkspace& ws) const;

  private:
    NoiseModel model_;
    Grid grid_;
    std::vector<double> conv_mult_;
    double variance_rate_;
};

/// Spec-level convenience: increment keyed by (model.seed, step).
NoiseIncrement sample_increment(const NoiseModel& model, const Grid& grid, double dt, std::uint64_t step);

}  // namespace blab
