#include "cover/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cover/errors.hpp"

namespace cover {

namespace {

constexpr int kContourGrid = 200;  // sample cells per axis
constexpr int kContourLevels = 10;
constexpr double kCanvas = 1000.0;
constexpr double kMargin = 60.0;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct BBox {
  double minx = 0.0, miny = 0.0, maxx = 1.0, maxy = 1.0;
  double width() const { return maxx - minx; }
  double height() const { return maxy - miny; }
};

BBox bbox_of(const ConvexPolygon& poly) {
  BBox b;
  b.minx = b.maxx = poly.vertices()[0].x;
  b.miny = b.maxy = poly.vertices()[0].y;
  for (const Vec2& v : poly.vertices()) {
    b.minx = std::min(b.minx, v.x);
    b.maxx = std::max(b.maxx, v.x);
    b.miny = std::min(b.miny, v.y);
    b.maxy = std::max(b.maxy, v.y);
  }
  return b;
}

// World-to-canvas mapping with a uniform scale and a flipped y axis.
struct Mapper {
  BBox box;
  double scale = 1.0;

  explicit Mapper(const BBox& b) : box(b) {
    scale = (kCanvas - 2.0 * kMargin) / std::max(b.width(), b.height());
  }
  double x(double wx) const { return kMargin + (wx - box.minx) * scale; }
  double y(double wy) const { return kCanvas - kMargin - (wy - box.miny) * scale; }
};

struct Segment {
  double x1, y1, x2, y2;
};

// Marching squares over a regular sample grid of the field. Ambiguous
// saddles (cases 5 and 10) are split using the cell-center value.
std::vector<std::vector<Segment>> contour_segments(const DensityField& field,
                                                   const ConvexPolygon& domain,
                                                   const BBox& box,
                                                   std::vector<double>* levels_out) {
  const int n = kContourGrid;
  std::vector<double> values(static_cast<std::size_t>((n + 1) * (n + 1)));
  const double dx = box.width() / n;
  const double dy = box.height() / n;
  double vmin = 0.0;
  double vmax = 0.0;
  for (int iy = 0; iy <= n; ++iy) {
    for (int ix = 0; ix <= n; ++ix) {
      const double v = field.value({box.minx + ix * dx, box.miny + iy * dy});
      values[static_cast<std::size_t>(iy * (n + 1) + ix)] = v;
      if (ix == 0 && iy == 0) {
        vmin = vmax = v;
      }
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
  }

  std::vector<double> levels;
  for (int l = 1; l <= kContourLevels; ++l) {
    levels.push_back(vmin + (vmax - vmin) * l / (kContourLevels + 1.0));
  }
  if (levels_out != nullptr) {
    *levels_out = levels;
  }

  const auto at = [&](int ix, int iy) {
    return values[static_cast<std::size_t>(iy * (n + 1) + ix)];
  };
  // t such that the level crosses between values a and b.
  const auto lerp = [](double a, double b, double lev) {
    return (lev - a) / (b - a);
  };

  std::vector<std::vector<Segment>> per_level(levels.size());
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const double lev = levels[li];
    for (int iy = 0; iy < n; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const double v00 = at(ix, iy);
        const double v10 = at(ix + 1, iy);
        const double v11 = at(ix + 1, iy + 1);
        const double v01 = at(ix, iy + 1);
        const int c = (v00 >= lev ? 1 : 0) | (v10 >= lev ? 2 : 0) |
                      (v11 >= lev ? 4 : 0) | (v01 >= lev ? 8 : 0);
        if (c == 0 || c == 15) {
          continue;
        }
        const double x0 = box.minx + ix * dx;
        const double y0 = box.miny + iy * dy;
        // Edge crossing points: bottom, right, top, left.
        const Vec2 pb{x0 + dx * lerp(v00, v10, lev), y0};
        const Vec2 pr{x0 + dx, y0 + dy * lerp(v10, v11, lev)};
        const Vec2 pt{x0 + dx * lerp(v01, v11, lev), y0 + dy};
        const Vec2 pl{x0, y0 + dy * lerp(v00, v01, lev)};
        const auto emit = [&](Vec2 a, Vec2 b) {
          const Vec2 mid = 0.5 * (a + b);
          if (domain.contains(mid, 1e-9)) {
            per_level[li].push_back({a.x, a.y, b.x, b.y});
          }
        };
        switch (c) {
          case 1: case 14: emit(pl, pb); break;
          case 2: case 13: emit(pb, pr); break;
          case 3: case 12: emit(pl, pr); break;
          case 4: case 11: emit(pr, pt); break;
          case 6: case 9:  emit(pb, pt); break;
          case 7: case 8:  emit(pl, pt); break;
          case 5: case 10: {
            const double center = 0.25 * (v00 + v10 + v11 + v01);
            const bool joined = (center >= lev) == (c == 5);
            if (joined) {
              emit(pl, pb);
              emit(pr, pt);
            } else {
              emit(pl, pt);
              emit(pb, pr);
            }
            break;
          }
          default: break;
        }
      }
    }
  }
  return per_level;
}

void write_file(const std::string& path, const std::string& text,
                std::vector<std::string>& written) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << text;
  if (!out) {
    throw IoError("write failed: " + path);
  }
  written.push_back(path);
}

std::string sensor_color(std::size_t i, std::size_t k) {
  const int hue = static_cast<int>(360.0 * static_cast<double>(i) /
                                   static_cast<double>(std::max<std::size_t>(k, 1)));
  return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

std::string layout_svg(const DescentTrace& trace,
                       const std::vector<std::vector<Segment>>& contours,
                       const VoronoiPartition& part,
                       const ConvexPolygon& domain, const Mapper& m) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas
      << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " "
      << kCanvas << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const auto poly_points = [&](const ConvexPolygon& poly) {
    std::string pts;
    for (const Vec2& v : poly.vertices()) {
      pts += fmt(m.x(v.x)) + "," + fmt(m.y(v.y)) + " ";
    }
    return pts;
  };
  svg << "<polygon points=\"" << poly_points(domain)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  for (const auto& level : contours) {
    for (const Segment& s : level) {
      svg << "<line x1=\"" << fmt(m.x(s.x1)) << "\" y1=\"" << fmt(m.y(s.y1))
          << "\" x2=\"" << fmt(m.x(s.x2)) << "\" y2=\"" << fmt(m.y(s.y2))
          << "\" stroke=\"#9db2c8\" stroke-width=\"1\"/>\n";
    }
  }

  for (const ConvexPolygon& cell : part.cells) {
    if (!cell.empty()) {
      svg << "<polygon points=\"" << poly_points(cell)
          << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\" "
             "stroke-dasharray=\"4 3\"/>\n";
    }
  }

  const std::size_t k = trace.iterates.empty() ? 0 : trace.iterates[0].size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::string color = sensor_color(i, k);
    std::string pts;
    for (const SensorConfiguration& config : trace.iterates) {
      pts += fmt(m.x(config[i].x)) + "," + fmt(m.y(config[i].y)) + " ";
    }
    svg << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    const Vec2 start = trace.iterates.front()[i];
    const Vec2 end = trace.iterates.back()[i];
    svg << "<circle cx=\"" << fmt(m.x(start.x)) << "\" cy=\""
        << fmt(m.y(start.y)) << "\" r=\"5\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    svg << "<circle cx=\"" << fmt(m.x(end.x)) << "\" cy=\"" << fmt(m.y(end.y))
        << "\" r=\"6\" fill=\"" << color << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string coverage_svg(const DescentTrace& trace) {
  const double w = kCanvas;
  const double h = 600.0;
  const double ml = 90.0, mr = 30.0, mt = 30.0, mb = 60.0;
  const std::vector<double>& hist = trace.coverage_history;
  double hmin = hist.front();
  double hmax = hist.front();
  for (double v : hist) {
    hmin = std::min(hmin, v);
    hmax = std::max(hmax, v);
  }
  if (hmax == hmin) {
    hmax = hmin + 1.0;
  }
  const double nmax = static_cast<double>(hist.size() - 1);
  const auto px = [&](double it) {
    return ml + (w - ml - mr) * (nmax > 0.0 ? it / nmax : 0.0);
  };
  const auto py = [&](double v) {
    return h - mb - (h - mt - mb) * (v - hmin) / (hmax - hmin);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";

  std::string pts;
  for (std::size_t i = 0; i < hist.size(); ++i) {
    pts += fmt(px(static_cast<double>(i))) + "," + fmt(py(hist[i])) + " ";
  }
  svg << "<polyline points=\"" << pts
      << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\"/>\n";

  svg << "<text x=\"" << ml - 8 << "\" y=\"" << py(hmax)
      << "\" text-anchor=\"end\" font-size=\"16\">" << fmt(hmax)
      << "</text>\n";
  svg << "<text x=\"" << ml - 8 << "\" y=\"" << py(hmin)
      << "\" text-anchor=\"end\" font-size=\"16\">" << fmt(hmin)
      << "</text>\n";
  svg << "<text x=\"" << px(nmax) << "\" y=\"" << h - mb + 24
      << "\" text-anchor=\"end\" font-size=\"16\">" << hist.size() - 1
      << "</text>\n";
  svg << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - mb + 44
      << "\" text-anchor=\"middle\" font-size=\"16\">iteration</text>\n";
  svg << "<text x=\"20\" y=\"" << (mt + h - mb) / 2
      << "\" text-anchor=\"middle\" font-size=\"16\" transform=\"rotate(-90 20 "
      << (mt + h - mb) / 2 << ")\">coverage cost</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

PlotFiles emit_plots(const DescentTrace& trace, const DensityField& field,
                     const ConvexPolygon& domain, const std::string& directory,
                     const std::string& prefix) {
  if (trace.iterates.empty() || trace.coverage_history.empty()) {
    throw Error("emit_plots needs a nonempty descent trace");
  }
  if (domain.empty()) {
    throw InvalidPolygonError("emit_plots needs a nonempty domain");
  }
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) {
    throw IoError("cannot create directory: " + directory);
  }
  const std::string base = directory + "/" + prefix;

  const BBox box = bbox_of(domain);
  const Mapper mapper(box);
  std::vector<double> levels;
  const auto contours = contour_segments(field, domain, box, &levels);
  const VoronoiPartition part =
      voronoi_partition(trace.iterates.back(), domain);

  PlotFiles out;
  write_file(base + "_layout.svg",
             layout_svg(trace, contours, part, domain, mapper), out.files);
  write_file(base + "_coverage.svg", coverage_svg(trace), out.files);

  std::string traj = "iteration,sensor,x,y\n";
  for (std::size_t t = 0; t < trace.iterates.size(); ++t) {
    for (std::size_t i = 0; i < trace.iterates[t].size(); ++i) {
      traj += std::to_string(t) + "," + std::to_string(i) + "," +
              fmt12(trace.iterates[t][i].x) + "," +
              fmt12(trace.iterates[t][i].y) + "\n";
    }
  }
  write_file(base + "_trajectories.csv", traj, out.files);

  std::string cov = "iteration,coverage\n";
  for (std::size_t t = 0; t < trace.coverage_history.size(); ++t) {
    cov += std::to_string(t) + "," + fmt12(trace.coverage_history[t]) + "\n";
  }
  write_file(base + "_coverage.csv", cov, out.files);

  std::string cont = "level,segment,x1,y1,x2,y2\n";
  for (std::size_t li = 0; li < contours.size(); ++li) {
    for (std::size_t si = 0; si < contours[li].size(); ++si) {
      const Segment& s = contours[li][si];
      cont += fmt12(levels[li]) + "," + std::to_string(si) + "," +
              fmt12(s.x1) + "," + fmt12(s.y1) + "," + fmt12(s.x2) + "," +
              fmt12(s.y2) + "\n";
    }
  }
  write_file(base + "_contours.csv", cont, out.files);

  std::string vor = "cell,vertex,x,y\n";
  for (std::size_t c = 0; c < part.cells.size(); ++c) {
    const std::vector<Vec2>& vs = part.cells[c].vertices();
    for (std::size_t v = 0; v < vs.size(); ++v) {
      vor += std::to_string(c) + "," + std::to_string(v) + "," +
             fmt12(vs[v].x) + "," + fmt12(vs[v].y) + "\n";
    }
  }
  write_file(base + "_voronoi.csv", vor, out.files);
  return out;
}

}  // namespace cover
