#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "rectdt/geometry.hpp"

namespace rectdt {

enum class Distribution { Uniform, Clustered };

std::optional<Distribution> parse_distribution(std::string_view name);
const char* to_string(Distribution d);

/// Coordinates are multiples of 2^-32 in [0, 1).
inline constexpr std::uint64_t kGridDenominator = std::uint64_t{1} << 32;

/// n points in general position, deterministic in (n, seed, dist). Candidates
/// that would share a coordinate or complete a collinear triple are redrawn.
PointSet generate_points(std::size_t n, std::uint64_t seed, Distribution dist = Distribution::Uniform);

/// Seed for the i-th independent stream derived from `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// True iff adding p to ps keeps distinct x, distinct y and no collinear triple.
/// `skip` excludes one index of ps from the check (used when moving a point).
bool fits_general_position(const PointSet& ps, const Point& p, std::optional<VertexId> skip = std::nullopt);

}  // namespace rectdt
