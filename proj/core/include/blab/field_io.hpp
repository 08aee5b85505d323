#pragma once

#include <filesystem>

#include "blab/field.hpp"

namespace blab {

/// Binary snapshot format:
///   magic "BLAB", version u32=1, d u32, n u32, L f64, time f64,
///   components u32, then little-endian f64 values in row-major axis
///   order, one component block after another.
void write_field(const std::filesystem::path& path, const Field& f);

/// Reads a snapshot. Vector fields are gradient-flagged when the curl
/// check passes at tolerance 1e-6.
Field read_field(const std::filesystem::path& path);

}  // namespace blab
