#pragma once

#include <span>
#include <vector>

#include "blab/field.hpp"

namespace blab {

/// Weight functions: p_{ell,K}(x) = (<x> + K)^ell with <x> = sqrt(1+|x|^2),
/// and the logarithmic weight xi(x) = (log(<x>+1))^(3/4).
struct WeightSpec {
    enum class Kind { power, log };
    Kind kind = Kind::power;
    double ell = 0.0;
    double K = 0.0;

    static WeightSpec power(double ell, double K);
    static WeightSpec log_weight();

    double operator()(const Point& x) const;
};

/// Admissible exponents (m, ell, eps) for dimension d:
/// m in (2d/(d+4), 1), ell in (m/2, (1+2/d)m - 1), eps in (0, ell - m/2).
/// The constructor rejects violations; d >= 4 makes the m-window empty.
struct ExponentTriple {
    double m;
    double ell;
    double eps;
    int d;

    ExponentTriple(double m, double ell, double eps, int d);
};

/// max over grid points and derivative orders 0..order of |d^j f(x)| / w(x).
/// Derivatives are spectral; order 2 includes mixed partials.
double weighted_sup_norm(const Field& f, const WeightSpec& w, int order = 0);

/// sup over sampled non-wrapping pairs |x-y| <= 1 of |f(x)-f(y)| / (w * |x-y|^alpha).
/// Offsets run along axes and diagonals in steps of h (cost O(n^d * shells)).
double weighted_holder_seminorm(const Field& f, const WeightSpec& w, double alpha);

/// max{ weighted_sup_norm(f, w, 0), weighted_holder_seminorm(f, w, alpha) }.
double weighted_holder_norm(const Field& f, const WeightSpec& w, double alpha);

/// osc(f; S) = sup_S f - inf_S f, points evaluated by trigonometric
/// interpolation. Throws on empty S.
double oscillation(const Field& f, std::span<const Point> S);

}  // namespace blab
