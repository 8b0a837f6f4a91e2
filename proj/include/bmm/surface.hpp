#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bmm/vec3.hpp"

namespace bmm {

enum class SurfaceKind { sphere, ellipsoid, perturbed_sphere };

std::string to_string(SurfaceKind kind);
SurfaceKind surface_kind_from_string(const std::string& name);

/// Parametric family of a closed convex-type surface embedded in R^3.
///   sphere:           params = {radius}
///   ellipsoid:        params = {a, b, c} (semi-axes)
///   perturbed-sphere: params = {epsilon[, mix]}, radial graph
///                     r(u) = 1 + epsilon * Y(u) over the unit sphere with
///                     Y = (1-mix)*(3 u_z^2 - 1)/2 + mix*(u_x^3 - 3 u_x u_y^2),
///                     |Y| <= 1, epsilon <= 0.1, mix in [0, 1] (default 0.5).
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::sphere;
  std::vector<double> params{1.0};
  int ambient_dim = 3;

  void validate() const;  // throws ConfigInvalid / PerturbationTooLarge
};

/// Numerical knobs. Defaults are well below the acceptance tolerances.
struct Tolerances {
  double surf = 1e-10;    // on-surface residual (distance units)
  double tan = 1e-10;     // tangency residual
  double geo = 1e-8;      // geodesic solve accuracy
  double bvp = 1e-8;      // shooting endpoint miss
  double speed = 1e-6;    // relative speed conservation along an IVP
  double param = 1e-4;    // relative sample-spacing uniformity
  double quad_rel = 5e-4; // quadrature-consistency assertions, relative
  double quad_abs = 1e-9; //   ... absolute floor
  double equiv = 1e-4;    // three-step / four-step agreement (W^{1,2})
  int max_newton = 50;
  double max_step_arc = 0.1;  // RK4 arclength step (surfaces are normalized)
};

class SurfaceGeometry;  // internal level-set + chart implementation

using SurfacePoint = Vec3;  // invariant: |implicit| / |grad| < tol.surf

struct TangentVector {
  SurfacePoint base;
  Vec3 dir;  // invariant: <dir, n(base)> ~ 0
};

/// Minimizing constant-speed geodesic between two surface points.
struct GeodesicSegment {
  SurfacePoint start, end;
  std::vector<SurfacePoint> samples;  // m+1 points, uniform arclength spacing
  double length = 0.0;
};

/// A normalized embedded surface: the spec's embedding scaled by `scale` so
/// that sup |A| <= 1/16, injectivity radius >= 8*pi and curvature <= 1/64
/// hold. Immutable after construction; safe to share across threads.
class Surface {
 public:
  SurfaceSpec spec;
  double scale = 1.0;
  double second_form_bound = 0.0;  // sup |A| after scaling
  double gauss_max = 0.0;          // max Gauss curvature after scaling
  double inj_radius_lower = 0.0;   // certified lower bound
  double area = 0.0;               // total surface area after scaling

  const SurfaceGeometry& geometry() const { return *geom_; }

  double implicit(const Vec3& p) const;
  Vec3 implicit_gradient(const Vec3& p) const;
  Mat3 implicit_hessian(const Vec3& p) const;
  Vec3 unit_normal(const SurfacePoint& p) const;

  /// Embedding chart over (polar, azimuth) in [0,pi] x [0,2pi).
  Vec3 chart(double theta, double phi) const;
  void chart_jacobian(double theta, double phi, Vec3& d_theta, Vec3& d_phi) const;

  /// |A| at a surface point (root-sum-square of principal curvatures).
  double second_form_norm(const SurfacePoint& p) const;
  /// Gauss curvature at a surface point.
  double gauss_curvature(const SurfacePoint& p) const;

  static Surface make(const SurfaceSpec& spec, double scale, const Tolerances& tol);

 private:
  std::shared_ptr<const SurfaceGeometry> geom_;
};

/// Smallest scale making (M1) and (M2) hold; analytic for the sphere, grid
/// maximization of |A| with a 1% margin otherwise. (M3) is sample-checked.
Surface normalize(const SurfaceSpec& spec, const Tolerances& tol = {});

/// Nearest-point projection onto the surface.
SurfacePoint project(const Surface& surface, const Vec3& p,
                     const Tolerances& tol = {});

/// Remove the normal component of v at p.
TangentVector tangent_project(const Surface& surface, const SurfacePoint& p,
                              const Vec3& v);

/// Integrate the geodesic equation (acceleration normal to the surface) with
/// fixed-step RK4 plus per-step projection; returns position and velocity at
/// parameter t.
TangentVector geodesic_ivp(const Surface& surface, const TangentVector& start,
                           double t, const Tolerances& tol = {});

/// Minimizing geodesic from p to q with m+1 constant-speed samples, solved by
/// single shooting with the tangent-projected chord as the initial guess.
GeodesicSegment geodesic_bvp(const Surface& surface, const SurfacePoint& p,
                             const SurfacePoint& q, int m,
                             const Tolerances& tol = {});

double intrinsic_distance(const Surface& surface, const SurfacePoint& p,
                          const SurfacePoint& q, const Tolerances& tol = {});

}  // namespace bmm
