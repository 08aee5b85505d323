#pragma once

#include <complex>
#include <span>

#include "blab/field.hpp"

namespace blab {

/// FFT plans and scratch buffers for one Grid.
///
/// Real-to-complex transforms in the row-major layout of Field, with the
/// last axis halved to n/2+1 complex entries. Forward is unnormalized;
/// inverse divides by n^d. Plan creation is serialized internally; a
/// workspace instance itself is not thread-safe, use one per thread
/// (see workspace_for).
class SpectralWorkspace {
  public:
    explicit SpectralWorkspace(const Grid& grid);
    ~SpectralWorkspace();
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    const Grid& grid() const { return grid_; }
    std::int64_t spectral_size() const { return spec_size_; }

    void forward(std::span<const double> real, std::span<std::complex<double>> spec);
    void inverse(std::span<const std::complex<double>> spec, std::span<double> real);

    /// Integer mode along `axis` (0-based) for a flat spectral index.
    /// Ranges over [-n/2, n/2] with +n/2 used for the Nyquist entry.
    std::array<int, 3> modes_at(std::int64_t sidx) const;

    /// 2*pi*m/L for the stored entry, per axis.
    double wavenumber(int axis, int mode) const;

    /// |k|^2 for every stored spectral entry (built on first use).
    std::span<const double> k_squared();

    /// In-place multiply by i*k_axis with the Nyquist mode zeroed.
    void apply_derivative(std::span<std::complex<double>> spec, int axis) const;

    /// In-place multiply by -|k|^2 (Nyquist retained).
    void apply_laplacian(std::span<std::complex<double>> spec) const;

    /// Zero every mode with any |m_axis| > n/3 (2/3 rule).
    void apply_dealias(std::span<std::complex<double>> spec) const;

  private:
    Grid grid_;
    std::int64_t spec_size_;
    int dims_[3];       // stored spectral extents per axis (size 1 beyond d)
    void* plan_fwd_;    // fftw_plan
    void* plan_bwd_;
    double* real_buf_;
    std::complex<double>* cplx_buf_;
    std::vector<double> k2_;

    template <typename F>
    void for_each_entry(F&& f) const;
};

/// Thread-local workspace cache keyed by grid geometry.
SpectralWorkspace& workspace_for(const Grid& grid);

/// d(f)/dx_axis by forward transform, i*k multiply (Nyquist zeroed), inverse.
/// `axis` is 1-based as in the operation contracts.
Field spectral_derivative(const Field& f, int axis);

/// Sum of second spectral derivatives; exact to round-off for band-limited f.
Field laplacian(const Field& f);

/// Spectral gradient of a scalar field; result has is_gradient set.
Field gradient(const Field& f);

/// true iff max over i<j of ||d_i u_j - d_j u_i||_inf <= tol*(1 + ||u||_inf).
bool verify_gradient(const Field& u, double tol);

/// Largest mixed-partial asymmetry, the quantity verify_gradient thresholds.
double gradient_defect(const Field& u);

/// Second-order centered difference, for cross-validation of the spectral path.
Field finite_difference_derivative(const Field& f, int axis);

}  // namespace blab
