#pragma once

#include <vector>

#include "cover/geometry.hpp"

namespace cover {

// One anisotropic Gaussian bump amplitude * exp(-ax*(x-cx)^2 - ay*(y-cy)^2).
// ax = ay = 0 degenerates to the constant `amplitude`.
struct GaussianTerm {
  double amplitude = 1.0;
  double cx = 0.0;
  double cy = 0.0;
  double ax = 0.0;
  double ay = 0.0;
};

// Sum of Gaussian terms scaled by 1/normalization. The raw field (as loaded
// from a scenario) has normalization 1; normalize() returns a copy whose
// integral over the domain is 1.
class DensityField {
 public:
  DensityField() = default;
  explicit DensityField(std::vector<GaussianTerm> terms,
                        double normalization = 1.0);

  double value(Vec2 q) const;

  const std::vector<GaussianTerm>& terms() const { return terms_; }
  double normalization() const { return normalization_; }

  // Constant field of the given amplitude.
  static DensityField uniform(double amplitude = 1.0);

 private:
  std::vector<GaussianTerm> terms_;
  double normalization_ = 1.0;
};

// Default subdivision depth for per-polygon moments; grid cells are small, so
// two levels of the degree-5 rule already leave errors far below the 1e-6
// mass-conservation budget.
inline constexpr int kDefaultQuadratureDepth = 2;

// Depth for one-shot whole-domain integrals (normalization constant), where
// fan triangles are as large as the domain itself.
inline constexpr int kNormalizeQuadratureDepth = 6;

// Returns a copy of `field` whose integral over `domain` equals 1. Throws
// ZeroMassError when the raw integral is not positive. Re-normalizing a
// normalized field is a no-op up to quadrature error.
DensityField normalize(const DensityField& field, const ConvexPolygon& domain,
                       int depth = kNormalizeQuadratureDepth);

// Mass, first moment, and second moment of the field over a polygon. The
// second moment is stored about the polygon's geometric centroid (the pivot);
// inertia_about() shifts it to any reference point algebraically, so changing
// the reference costs no additional quadrature.
struct PolygonMoments {
  double weight = 0.0;       // integral of the field
  Vec2 first_moment{};       // integral of q * field(q)
  double second_moment = 0.0;  // integral of |q - pivot|^2 * field(q)
  Vec2 pivot{};

  // first_moment / weight; falls back to the pivot for massless polygons.
  Vec2 mass_centroid() const;

  // Integral of |q - ref|^2 * field(q), via the parallel-axis shift
  //   I(ref) = I(pivot) - 2 (ref - pivot) . (M1 - weight * pivot)
  //            + |ref - pivot|^2 * weight.
  double inertia_about(Vec2 ref) const;
};

PolygonMoments polygon_moments(const DensityField& field,
                               const ConvexPolygon& poly,
                               int depth = kDefaultQuadratureDepth);

}  // namespace cover
