#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blab/field.hpp"
#include "blab/trig_interp.hpp"

namespace blab {

/// Cube Q(x,r) = { y : |x - y|_inf <= r }.
struct CubeSpec {
    Point center{0, 0, 0};
    double half_width = 1.0;
};

/// The 4^d-point lattice Q''(x,r) = Q(x,r) cap [x + (r/3 + (2r/3)Z)^d]:
/// per-axis offsets { -r, -r/3, r/3, r }.
std::vector<Point> cube_grid4(const CubeSpec& cube, int d);

/// Delta^+ f = sum_i (d_ii f)^+ as a grid field (spectral second partials).
Field delta_plus(const Field& f);

/// A scalar field with cached derivative interpolants, for evaluating the
/// one-sided bounds on points and cubes off the grid. Dense sups use
/// `oversample` points per grid spacing.
class WindowEval {
  public:
    explicit WindowEval(const Field& scalar, int oversample = 8);

    int dim() const { return d_; }
    const Grid& grid() const { return f_.grid(); }

    double value(const Point& x) const { return f_(x); }
    double dpartial(int axis, const Point& x) const { return df_[axis - 1](x); }
    double d2partial(int axis, const Point& x) const { return ddf_[axis - 1](x); }
    double grad_norm(const Point& x) const;
    double delta_plus_at(const Point& x) const;

    double sup_grad_cube(const CubeSpec& cube) const;
    double sup_delta_plus_cube(const CubeSpec& cube) const;
    double osc_cube(const CubeSpec& cube) const;

    /// sup over the segments { s + t e_axis : s in S, t in [lo, hi] }.
    double sup_delta_plus_extrusion(std::span<const Point> S, int axis, double lo, double hi) const;
    double osc_extrusion(std::span<const Point> S, int axis, double lo, double hi) const;
    double osc_points(std::span<const Point> S) const;

  private:
    std::vector<double> axis_samples(double center, double half_width) const;
    std::vector<std::vector<double>> cube_axes(const CubeSpec& cube) const;

    int d_;
    int oversample_;
    TrigInterpolator f_;
    std::vector<TrigInterpolator> df_;
    std::vector<TrigInterpolator> ddf_;
};

/// A function of one variable with dense uniform samples of itself and its
/// first (and optionally second) derivative on [t0, t1].
struct Sampled1D {
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<double> f;
    std::vector<double> df;
    std::vector<double> ddf;

    double value_at(double t) const;
    double sup_abs_f(double a, double b) const;
    double sup_pos_df(double a, double b) const;
    double sup_pos_ddf(double a, double b) const;
    double osc_f(double a, double b) const;
    double sup_abs_df(double a, double b) const;
};

/// max{|f(0)|, |f(1)|} + ||(f')^+||_C([0,1]); dominates ||f||_C([0,1]).
double bound_sup_via_endpoints(const Sampled1D& f);

/// osc(f; [-1,2] cap Z) + (1/2)||(f'')^+||_C([-1,2]); dominates ||f'||_C([0,1]).
double bound_deriv_1d(const Sampled1D& f);

/// Same right-hand side; dominates osc(f; [0,1]).
double bound_osc_1d(const Sampled1D& f);

/// 28 ||(d_ii f)^+||_{C(S+[-1,2]e_i)}
///   + 3 max_{l=-1..2} [ 3|d_i f(x + l e_i)| + 2 osc(f; S + l e_i) ];
/// dominates osc(f; S + [0,1]e_i).
double bound_osc_extrusion(const WindowEval& f, std::span<const Point> S, int axis, const Point& anchor);

/// 28d (||Delta^+ f||_{C([-1,2]^d)} + ||grad f||_{C(([-1,2] cap Z)^d)});
/// dominates osc(f; [0,1]^d).
double bound_osc_cube(const WindowEval& f);

/// 84d (6r ||Delta^+ f||_{C(Q(x,9r))} + ||grad f||_{C(Q''(x,9r))});
/// dominates ||grad f||_{C(Q(x,r))}. Throws when Q(x,9r) leaves the torus.
double bound_grad_local(const WindowEval& f, const Point& x, double r);

/// Atomic measure from the annulus/cube construction: annuli
/// A_k = {|x| in [k^a, (k+1)^a]} covered by cubes of half-width k^(a-1),
/// each contributing its 9x-enlarged 4^d-point grid with mass p_m(k^a)^-2.
struct NuMeasure {
    double m = 0.0;
    double alpha = 0.0;
    int d = 0;
    int k_max = 0;

    struct Atom {
        Point x;
        double mass;
    };
    std::vector<Atom> atoms;
    std::vector<int> cubes_per_annulus;       // achieved m_k
    std::vector<Point> cube_centers;          // all Q_{k,j} centers
    std::vector<double> cube_half_widths;     // matching half-widths (pre-enlargement)
    double total_mass = 0.0;
    double tail_estimate = 0.0;               // bound on the mass beyond k_max

    /// furthest |.|_inf reach of any enlarged cube Q(x_{k,j}, 9 hw)
    double max_reach() const;
};

NuMeasure build_nu(double m, double alpha, int d, int k_max);

/// ||grad f||_{L^2(nu)} = sqrt( sum_atoms mass * |grad f(atom)|^2 ).
double grad_l2_nu(const WindowEval& f, const NuMeasure& nu);

/// lhs = ||grad f||_{C_{p_{m,K}}} over grid points with |x| <= (k_max+1)^alpha;
/// rhs = C (||Delta^+ f||_{C_{p_{l,K}}} + ||grad f||_{L^2(nu)}), l = m-1+1/alpha.
/// Throws when the enlarged cubes do not fit inside the torus.
struct GlobalBoundSides {
    double lhs;
    double rhs;
    double delta_plus_norm;
    double l2_nu;
};
GlobalBoundSides bound_grad_global(const Field& f, double m, double K, const NuMeasure& nu, double C);

/// One row of the verification harness CSV.
struct TrialRow {
    const char* bound;
    double lhs;
    double rhs;
    double margin;  // rhs - lhs
    std::uint64_t trial;
};

/// Random band-limited test function: spectrum |k|^{-(d+2)/2} * N(0,1)
/// up to |m|_inf <= n/3, normalized to sup-amplitude `amplitude`.
Field random_band_limited(const Grid& grid, std::uint64_t stream_key, std::uint64_t id, double amplitude = 1.0);

}  // namespace blab
