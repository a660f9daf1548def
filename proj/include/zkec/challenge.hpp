#pragma once

#include <functional>
#include <initializer_list>
#include <span>

#include "zkec/curve.hpp"
#include "zkec/sha1.hpp"

namespace zkec {

using HashFunction = std::function<Digest(std::span<const std::uint8_t>)>;

/// Challenge derived from public points: the encodings (point_bytes() each,
/// no separators) are concatenated in the given order, hashed, and the
/// digest is read big-endian mod n. Order sensitive. This layout is part
/// of the interop format.
///
/// Throws ParameterError for an empty list.
Scalar challenge_from_points(const Curve& curve, std::span<const Point> points);
Scalar challenge_from_points(const Curve& curve, std::span<const Point> points,
                             const HashFunction& hash);
Scalar challenge_from_points(const Curve& curve, std::initializer_list<Point> points);

}  // namespace zkec
