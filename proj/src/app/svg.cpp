#include <algorithm>

#include <fmt/format.h>

#include "instance.hpp"

namespace hexacycle::app {

namespace {

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(Point p) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
    max_x = std::max(max_x, p.x);
    max_y = std::max(max_y, p.y);
  }
  void add(const Circle& c) {
    add(c.center() - Point{c.radius(), c.radius()});
    add(c.center() + Point{c.radius(), c.radius()});
  }
};

std::string num(double v) { return fmt::format("{:.10g}", v == 0.0 ? 0.0 : v); }

// y is flipped so the picture keeps the mathematical orientation.
std::string xy(Point p) { return num(p.x) + "," + num(-p.y); }

std::string circle_path(const Circle& c) {
  const double r = c.radius();
  const Point left = c.center() - Point{r, 0.0};
  return fmt::format("M {} a {},{} 0 1,0 {},0 a {},{} 0 1,0 {},0", xy(left), num(r), num(r), num(2 * r), num(r),
                     num(r), num(-2 * r));
}

void label(std::string& out, Point p, const std::string& text, double size, const char* cls) {
  out += fmt::format("    <text class=\"{}\" x=\"{}\" y=\"{}\" font-size=\"{}\">{}</text>\n", cls, num(p.x + 0.6 * size),
                     num(-p.y - 0.6 * size), num(size), text);
}

}  // namespace

CommandResult run_svg(const RunConfig& config) {
  Triangle ref = Triangle({0, 0}, {1, 0}, {0, 1});
  std::optional<AngleTriple> angles;
  try {
    ref = checked_triangle(config);
    angles = checked_angles(config);
    if (!(config.tol.concyclic > 0.0) || !(config.tol.exterior > 0.0)) throw UsageError("tolerances must be positive");
  } catch (const UsageError& e) {
    return CommandResult{kExitUsage, {}, fmt::format("error: {}\n", e.what())};
  }
  SixPointOptions options;
  options.concyclic_tol = config.tol.concyclic;
  options.exterior_tol = config.tol.exterior;
  const SixPointReport report = six_point_theorem_check(ref, *angles, options);
  CommandResult result;

  const bool coincident = report.interior_fit.status == FitStatus::Coincident;
  const std::optional<Circle> fitted =
      report.interior_fit.status == FitStatus::Ok ? report.interior_fit.circle : std::nullopt;
  if (!fitted) {
    result.diagnostics += fmt::format("warning: interior fit {}; circle layer omitted\n",
                                      fit_status_name(report.interior_fit.status));
  }
  std::optional<Circle> exterior_circle;
  if (config.layers.exterior) {
    if (report.exterior_fit && report.exterior_fit->status == FitStatus::Ok) {
      exterior_circle = report.exterior_fit->circle;
    } else {
      result.diagnostics += "warning: exterior fit unavailable; exterior circle omitted\n";
    }
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (!report.entries[i].construction) {
      result.diagnostics += fmt::format("warning: M{} not drawn: {}\n", i + 1, report.entries[i].error);
      result.exit_code = kExitInfeasible;
    }
  }

  Box box;
  for (const Point& v : ref.vertices()) box.add(v);
  for (const auto& e : report.entries) {
    if (e.construction) box.add(e.construction->point);
    if (config.layers.exterior && e.exterior) box.add(*e.exterior);
  }
  if (fitted) box.add(*fitted);
  if (exterior_circle) box.add(*exterior_circle);
  if (config.layers.circles) {
    for (const auto& c : report.defining_circles) {
      if (c) box.add(*c);
    }
  }
  const double extent = std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  const double margin = 0.1 * extent;
  const double vx = box.min_x - margin;
  const double vy = -box.max_y - margin;
  const double vw = box.max_x - box.min_x + 2 * margin;
  const double vh = box.max_y - box.min_y + 2 * margin;
  const double stroke = extent / 400.0;
  // Markers and labels follow the reference triangle so exterior layers do
  // not swell them.
  const double local = std::min(extent, ref.scale());
  const double marker = local / 200.0;
  const double font = local / 30.0;

  std::string& s = result.output;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\">\n",
      num(vx), num(vy), num(vw), num(vh), num(std::round(800.0 * vh / vw)));
  s += "  <style>\n";
  s += fmt::format("    .reference {{ fill: none; stroke: #222; stroke-width: {}; }}\n", num(stroke));
  s += fmt::format("    .fitted-circle {{ fill: none; stroke: #c0392b; stroke-width: {}; }}\n", num(stroke));
  s += fmt::format("    .exterior-circle {{ fill: none; stroke: #2874a6; stroke-width: {}; }}\n", num(stroke));
  s += fmt::format("    .defining-circle {{ fill: none; stroke: #999; stroke-width: {}; stroke-dasharray: {} {}; }}\n",
                   num(stroke / 2), num(4 * stroke), num(2 * stroke));
  s += "    .point { fill: #c0392b; }\n    .point.exterior { fill: #2874a6; }\n";
  s += "    text { font-family: sans-serif; fill: #222; }\n  </style>\n";

  s += "  <g id=\"reference-triangle\">\n";
  s += fmt::format("    <polygon class=\"reference\" points=\"{} {} {}\"/>\n", xy(ref.a()), xy(ref.b()), xy(ref.c()));
  label(s, ref.a(), "A", font, "vertex");
  label(s, ref.b(), "B", font, "vertex");
  label(s, ref.c(), "C", font, "vertex");
  s += "  </g>\n";

  if (config.layers.circles) {
    s += "  <g id=\"defining-circles\">\n";
    for (const auto& c : report.defining_circles) {
      if (c) s += fmt::format("    <path class=\"defining-circle\" d=\"{}\"/>\n", circle_path(*c));
    }
    s += "  </g>\n";
  }

  if (fitted) {
    s += "  <g id=\"fitted-circle\">\n";
    s += fmt::format("    <path class=\"fitted-circle\" d=\"{}\"/>\n", circle_path(*fitted));
    s += "  </g>\n";
  }

  s += "  <g id=\"interior-points\">\n";
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    if (!e.construction) continue;
    const Point p = e.construction->point;
    s += fmt::format("    <circle class=\"point\" id=\"M{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", i + 1, num(p.x), num(-p.y),
                     num(marker));
    // Coincident points get their labels stacked.
    label(s, p + Point{0.0, coincident ? -1.4 * font * static_cast<double>(i) : 0.0}, fmt::format("M{}", i + 1), font,
          "point-label");
  }
  if (coincident) {
    const auto first = std::find_if(report.entries.begin(), report.entries.end(),
                                    [](const SixPointEntry& e) { return e.construction.has_value(); });
    const Point p = first->construction->point;
    s += fmt::format("    <text class=\"annotation\" x=\"{}\" y=\"{}\" font-size=\"{}\">six points coincide "
                     "(degenerate: coincident); no circle</text>\n",
                     num(p.x - 4 * font), num(-p.y + 2 * font), num(font));
  }
  s += "  </g>\n";

  if (config.layers.exterior) {
    s += "  <g id=\"exterior-points\">\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      const auto& e = report.entries[i];
      if (!e.exterior) continue;
      s += fmt::format("    <circle class=\"point exterior\" id=\"N{}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>\n", i + 1,
                       num(e.exterior->x), num(-e.exterior->y), num(marker));
      label(s, *e.exterior, fmt::format("N{}", i + 1), font, "point-label");
    }
    s += "  </g>\n";
    if (exterior_circle) {
      s += "  <g id=\"exterior-circle\">\n";
      s += fmt::format("    <path class=\"exterior-circle\" d=\"{}\"/>\n", circle_path(*exterior_circle));
      s += "  </g>\n";
    }
  }
  s += "</svg>\n";
  return result;
}

}  // namespace hexacycle::app
