#pragma once

#include <array>
#include <cstdint>

namespace blab {

/// Philox4x32-10 counter-based generator.
///
/// Pure function of (counter, key): no stream state, so draws keyed by
/// (seed, step, cell) are reproducible independently of traversal order
/// and parallelize without coordination.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

/// splitmix64 finalizer, used to derive per-realization stream keys.
std::uint64_t splitmix64(std::uint64_t x);

/// 64-bit stream key for one realization of an experiment seed.
std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t realization);

/// Standard normal deviate keyed by (stream, step, substep, cell).
/// One Philox evaluation per draw (Box-Muller, cosine branch).
double gaussian_at(std::uint64_t stream_key, std::uint64_t step, std::uint32_t substep, std::uint32_t cell);

/// Uniform double in [0, 1) keyed the same way (distinct domain tag).
double uniform_at(std::uint64_t stream_key, std::uint64_t step, std::uint32_t substep, std::uint32_t cell);

}  // namespace blab
