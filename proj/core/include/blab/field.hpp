#pragma once

#include <span>
#include <vector>

#include "blab/grid.hpp"

namespace blab {

/// Scalar or d-vector samples on a Grid at one instant.
///
/// Fields are value types; the calculus operations on them are pure and
/// return fresh snapshots, so concurrent evaluation on disjoint inputs
/// needs no synchronization.
class Field {
  public:
    Field(Grid grid, int components, double time_tag = 0.0, bool is_gradient = false);

    static Field zeros(const Grid& grid, int components, double time_tag = 0.0);

    const Grid& grid() const { return grid_; }
    int components() const { return components_; }
    double time_tag() const { return time_; }
    void set_time_tag(double t) { time_ = t; }
    bool is_gradient() const { return is_gradient_; }
    void set_is_gradient(bool g) { is_gradient_ = g; }

    std::span<double> values() { return values_; }
    std::span<const double> values() const { return values_; }
    std::span<double> component(int c) { return {values_.data() + c * grid_.cells(), static_cast<size_t>(grid_.cells())}; }
    std::span<const double> component(int c) const {
        return {values_.data() + c * grid_.cells(), static_cast<size_t>(grid_.cells())};
    }

    double operator()(int c, std::int64_t idx) const { return values_[c * grid_.cells() + idx]; }
    double& at(int c, std::int64_t idx) { return values_[c * grid_.cells() + idx]; }

    /// max over all components and cells of |value|
    double max_abs() const;
    /// spatial mean of one component
    double mean(int c = 0) const;
    /// true iff every sample is finite
    bool all_finite() const;
    /// throws std::invalid_argument when a sample is non-finite
    void require_finite(const char* who) const;

  private:
    Grid grid_;
    int components_;
    double time_;
    bool is_gradient_;
    std::vector<double> values_;
};

/// Pointwise a*f + b*g on congruent fields.
Field axpby(double a, const Field& f, double b, const Field& g);

/// max over cells (and components) of |f - g|
double max_abs_diff(const Field& f, const Field& g);

}  // namespace blab
