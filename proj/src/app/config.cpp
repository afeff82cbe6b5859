#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "instance.hpp"

namespace hexacycle::app {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v)) {
    throw UsageError(fmt::format("malformed {}: '{}'", what, text));
  }
  return v;
}

constexpr double kMinAngle = 10.0 * kPi / 180.0;

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double Stream::uniform(double lo, double hi) {
  state_ += 0x9e3779b97f4a7c15ULL;
  const std::uint64_t bits = splitmix64(state_) >> 11;
  return lo + (hi - lo) * (static_cast<double>(bits) * 0x1.0p-53);
}

std::array<Point, 3> parse_triangle(std::string_view text) {
  const auto parts = split_ws(text);
  if (parts.size() != 3) throw UsageError("triangle must be three points \"x,y x,y x,y\"");
  std::array<Point, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto xy = split(parts[i], ',');
    if (xy.size() != 2) throw UsageError(fmt::format("malformed point: '{}'", parts[i]));
    out[i] = {parse_number(xy[0], "coordinate"), parse_number(xy[1], "coordinate")};
  }
  return out;
}

std::array<double, 3> parse_angles(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 3) throw UsageError("angles must be three degrees \"a,b,c\"");
  return {parse_number(parts[0], "angle"), parse_number(parts[1], "angle"), parse_number(parts[2], "angle")};
}

Layers parse_layers(std::string_view text) {
  Layers out{false, false, false};
  for (std::string_view item : split(text, ',')) {
    item = trim(item);
    if (item == "interior") {
      out.interior = true;
    } else if (item == "exterior") {
      out.exterior = true;
    } else if (item == "circles") {
      out.circles = true;
    } else {
      throw UsageError(fmt::format("unknown layer '{}'", item));
    }
  }
  // The reference triangle, six points and fitted circle are always drawn.
  out.interior = true;
  return out;
}

Triangle checked_triangle(const RunConfig& config) {
  try {
    return Triangle(config.triangle[0], config.triangle[1], config.triangle[2]);
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
}

AngleTriple checked_angles(const RunConfig& config) {
  const auto& d = config.angles_degrees;
  try {
    return AngleTriple::from_degrees(d[0], d[1], d[2], 1e-9);
  } catch (const GeometryError& e) {
    throw UsageError(e.what());
  }
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

Trial make_trial(std::uint64_t master, std::uint64_t index, bool feasible_only) {
  const std::uint64_t seed = trial_seed(master, index);
  Stream stream(seed);
  // With feasible_only the pair is redrawn together: a reference angle above
  // 120 degrees admits no feasible triple at all.
  for (;;) {
    std::optional<Triangle> ref;
    while (!ref) {
      const Point a{stream.uniform(-10, 10), stream.uniform(-10, 10)};
      const Point b{stream.uniform(-10, 10), stream.uniform(-10, 10)};
      const Point c{stream.uniform(-10, 10), stream.uniform(-10, 10)};
      try {
        Triangle t(a, b, c);
        if (t.angle(0) >= kMinAngle && t.angle(1) >= kMinAngle && t.angle(2) >= kMinAngle) ref = t;
      } catch (const GeometryError&) {
      }
    }
    // Uniform on the simplex slice where every angle is at least kMinAngle.
    const double free = kPi - 3.0 * kMinAngle;
    double u = stream.uniform(0, 1);
    double v = stream.uniform(0, 1);
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    const double alpha = kMinAngle + free * u;
    const double beta = kMinAngle + free * v;
    const AngleTriple angles(alpha, beta, kPi - alpha - beta);
    if (!feasible_only || all_assignments_feasible(*ref, angles)) return Trial{seed, *ref, angles};
  }
}

std::string reproducer(const Trial& trial) {
  const auto& t = trial.reference;
  constexpr double kDeg = 180.0 / kPi;
  return fmt::format("hexacycle verify --triangle \"{:.17g},{:.17g} {:.17g},{:.17g} {:.17g},{:.17g}\" "
                     "--angles \"{:.17g},{:.17g},{:.17g}\"",
                     t.a().x, t.a().y, t.b().x, t.b().y, t.c().x, t.c().y, trial.angles.alpha() * kDeg,
                     trial.angles.beta() * kDeg, trial.angles.gamma() * kDeg);
}

}  // namespace hexacycle::app
