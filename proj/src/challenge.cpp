#include "zkec/challenge.hpp"

#include <vector>

#include "zkec/errors.hpp"

namespace zkec {

Scalar challenge_from_points(const Curve& curve, std::span<const Point> points,
                             const HashFunction& hash) {
  if (points.empty()) throw ParameterError("challenge needs at least one point");
  const std::size_t width = curve.point_bytes();
  std::vector<std::uint8_t> buf(width * points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    curve.encode_into(points[i], std::span(buf).subspan(i * width, width));
  }
  const Digest d = hash(buf);
  return Scalar::from_digest(curve.order(), d);
}

Scalar challenge_from_points(const Curve& curve, std::span<const Point> points) {
  return challenge_from_points(curve, points,
                               [](std::span<const std::uint8_t> b) { return sha1(b); });
}

Scalar challenge_from_points(const Curve& curve, std::initializer_list<Point> points) {
  return challenge_from_points(curve, std::span<const Point>(points.begin(), points.size()));
}

}  // namespace zkec
