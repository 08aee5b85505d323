#include "blab/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace blab {

Field::Field(Grid grid, int components, double time_tag, bool is_gradient)
    : grid_(grid), components_(components), time_(time_tag), is_gradient_(is_gradient) {
    if (components != 1 && components != grid.dim())
        throw std::invalid_argument("Field: components must be 1 or d");
    values_.assign(static_cast<size_t>(components_) * grid_.cells(), 0.0);
}

Field Field::zeros(const Grid& grid, int components, double time_tag) {
    return Field(grid, components, time_tag);
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

double Field::mean(int c) const {
    double s = 0.0;
    for (double v : component(c)) s += v;
    return s / static_cast<double>(grid_.cells());
}

bool Field::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

void Field::require_finite(const char* who) const {
    if (!all_finite()) throw std::invalid_argument(std::string(who) + ": field contains non-finite values");
}

Field axpby(double a, const Field& f, double b, const Field& g) {
    if (!(f.grid() == g.grid()) || f.components() != g.components())
        throw std::invalid_argument("axpby: incongruent fields");
    Field out(f.grid(), f.components(), f.time_tag(), f.is_gradient() && g.is_gradient());
    auto fv = f.values();
    auto gv = g.values();
    auto ov = out.values();
    for (size_t i = 0; i < ov.size(); ++i) ov[i] = a * fv[i] + b * gv[i];
    return out;
}

double max_abs_diff(const Field& f, const Field& g) {
    if (!(f.grid() == g.grid()) || f.components() != g.components())
        throw std::invalid_argument("max_abs_diff: incongruent fields");
    auto fv = f.values();
    auto gv = g.values();
    double m = 0.0;
    for (size_t i = 0; i < fv.size(); ++i) m = std::max(m, std::abs(fv[i] - gv[i]));
    return m;
}

}  // namespace blab
