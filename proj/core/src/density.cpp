#include "cover/density.hpp"

#include <cmath>
#include <utility>

#include "cover/errors.hpp"
#include "cover/quadrature.hpp"

namespace cover {

DensityField::DensityField(std::vector<GaussianTerm> terms,
                           double normalization)
    : terms_(std::move(terms)), normalization_(normalization) {
  if (!(normalization_ > 0.0) || !std::isfinite(normalization_)) {
    throw ZeroMassError("density normalization must be positive and finite");
  }
}

double DensityField::value(Vec2 q) const {
  double sum = 0.0;
  for (const GaussianTerm& t : terms_) {
    const double dx = q.x - t.cx;
    const double dy = q.y - t.cy;
    sum += t.amplitude * std::exp(-t.ax * dx * dx - t.ay * dy * dy);
  }
  return sum / normalization_;
}

DensityField DensityField::uniform(double amplitude) {
  GaussianTerm t;
  t.amplitude = amplitude;
  return DensityField({t});
}

DensityField normalize(const DensityField& field, const ConvexPolygon& domain,
                       int depth) {
  double mass = 0.0;
  for_each_polygon_point(domain, depth, [&](Vec2 q, double w) {
    mass += w * field.value(q);
  });
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw ZeroMassError("density field has zero mass over the domain");
  }
  return DensityField(field.terms(), field.normalization() * mass);
}

Vec2 PolygonMoments::mass_centroid() const {
  if (weight <= 0.0) {
    return pivot;
  }
  return first_moment / weight;
}

double PolygonMoments::inertia_about(Vec2 ref) const {
  const Vec2 d = ref - pivot;
  return second_moment - 2.0 * dot(d, first_moment - weight * pivot) +
         norm2(d) * weight;
}

PolygonMoments polygon_moments(const DensityField& field,
                               const ConvexPolygon& poly, int depth) {
  PolygonMoments m;
  if (poly.empty()) {
    return m;
  }
  m.pivot = poly.centroid();
  for_each_polygon_point(poly, depth, [&](Vec2 q, double w) {
    const double f = w * field.value(q);
    m.weight += f;
    m.first_moment = m.first_moment + f * q;
    m.second_moment += f * dist2(q, m.pivot);
  });
  return m;
}

}  // namespace cover
