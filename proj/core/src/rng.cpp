#include "blab/rng.hpp"

#include <cmath>
#include <numbers>

namespace blab {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::array<std::uint32_t, 4>& c, const std::array<std::uint32_t, 2>& k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> c = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += kWeyl0;
            k[1] += kWeyl1;
        }
        philox_round(c, k);
    }
    return c;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t realization) {
    return splitmix64(splitmix64(seed) + 0x9E3779B97F4A7C15ull * (realization + 1));
}

namespace {

inline std::array<std::uint32_t, 4> draw(std::uint64_t stream_key, std::uint64_t step, std::uint32_t substep,
                                         std::uint32_t cell, std::uint32_t domain) {
    const std::array<std::uint32_t, 4> counter{cell, substep ^ domain, static_cast<std::uint32_t>(step),
                                               static_cast<std::uint32_t>(step >> 32)};
    const std::array<std::uint32_t, 2> key{static_cast<std::uint32_t>(stream_key),
                                           static_cast<std::uint32_t>(stream_key >> 32)};
    return philox4x32(counter, key);
}

inline double to_unit_open(std::uint32_t hi, std::uint32_t lo) {
    // 53 significant bits, result in (0, 1]
    const std::uint64_t bits = (static_cast<std::uint64_t>(hi) << 21) ^ (lo >> 11);
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

}  // namespace

double gaussian_at(std::uint64_t stream_key, std::uint64_t step, std::uint32_t substep, std::uint32_t cell) {
    const auto r = draw(stream_key, step, substep, cell, 0u);
    const double u1 = to_unit_open(r[0], r[1]);
    const double u2 = to_unit_open(r[2], r[3]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double uniform_at(std::uint64_t stream_key, std::uint64_t step, std::uint32_t substep, std::uint32_t cell) {
    const auto r = draw(stream_key, step, substep, cell, 0x5EEDu << 8);
    const std::uint64_t bits = (static_cast<std::uint64_t>(r[0]) << 21) ^ (r[1] >> 11);
    return static_cast<double>(bits) * 0x1.0p-53;
}

}  // namespace blab
