#include "cmclab/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmclab {

namespace {

constexpr double kPi = std::numbers::pi;

AmbientVec vec3(double x, double y, double z) {
  AmbientVec v(3);
  v << x, y, z;
  return v;
}

AmbientVec vec4(double x, double y, double z, double w) {
  AmbientVec v(4);
  v << x, y, z, w;
  return v;
}

// unit 2-sphere chart and derivatives: omega(psi, theta)
struct Sphere2Chart {
  double sp, cp, st, ct;
  explicit Sphere2Chart(double psi, double theta)
      : sp(std::sin(psi)), cp(std::cos(psi)), st(std::sin(theta)), ct(std::cos(theta)) {}
  AmbientVec omega() const { return vec3(sp * ct, sp * st, cp); }
  AmbientVec d_psi() const { return vec3(cp * ct, cp * st, -sp); }
  AmbientVec d_theta() const { return vec3(-sp * st, sp * ct, 0.0); }
  AmbientVec d_psi_psi() const { return -omega(); }
  AmbientVec d_psi_theta() const { return vec3(-cp * st, cp * ct, 0.0); }
  AmbientVec d_theta_theta() const { return vec3(-sp * ct, -sp * st, 0.0); }
};

double orient_sign(const std::function<Jet(const ParamVec&)>& jet, const ParamVec& seed,
                   const AmbientVec& desired) {
  Jet j = jet(seed);
  return hodge_normal(j.dx).dot(desired) >= 0.0 ? 1.0 : -1.0;
}

ParamVec pv2(double a, double b) {
  ParamVec u(2);
  u << a, b;
  return u;
}

ParamVec pv3(double a, double b, double c) {
  ParamVec u(3);
  u << a, b, c;
  return u;
}

CatalogEntry make_disk_2(int curvature) {
  const RadiusConvention conv =
      curvature == 1 ? RadiusConvention::GeodesicUnit : RadiusConvention::GaugeUnit;
  AmbientModel model = AmbientModel::make(curvature, 3, conv);
  const double r = model.radius();

  CatalogEntry e;
  e.immersion.model = model;
  e.immersion.domain.axes = {{0.0, 1.0, false, true, false},
                             {0.0, 2.0 * kPi, true, false, false}};
  e.immersion.domain.marked_faces = {{0, true}};
  e.immersion.jet = [r](const ParamVec& u) {
    const double rho = u(0), ct = std::cos(u(1)), st = std::sin(u(1));
    Jet j;
    j.x = vec3(r * rho * ct, r * rho * st, 0.0);
    j.dx.resize(3, 2);
    j.dx.col(0) = vec3(r * ct, r * st, 0.0);
    j.dx.col(1) = vec3(-r * rho * st, r * rho * ct, 0.0);
    j.second(0, 0, 2) = vec3(0.0, 0.0, 0.0);
    j.second(0, 1, 2) = vec3(-r * st, r * ct, 0.0);
    j.second(1, 0, 2) = j.second(0, 1, 2);
    j.second(1, 1, 2) = vec3(-r * rho * ct, -r * rho * st, 0.0);
    return j;
  };
  e.immersion.normal_sign = 1.0;
  e.immersion.h_decl = 0.0;
  e.free_boundary = true;
  e.totally_umbilical = true;
  e.gauge_identities = curvature == 0 || conv == RadiusConvention::GaugeUnit;
  e.chi_expected = 1.0;
  e.components = {{{0, true}, 0.0, "circle"}};
  e.kappa_uniform = 0.0;
  return e;
}

CatalogEntry make_disk_3(int curvature) {
  const RadiusConvention conv =
      curvature == 1 ? RadiusConvention::GeodesicUnit : RadiusConvention::GaugeUnit;
  AmbientModel model = AmbientModel::make(curvature, 4, conv);
  const double r = model.radius();

  CatalogEntry e;
  e.immersion.model = model;
  e.immersion.domain.axes = {{0.0, 1.0, false, true, false},
                             {0.0, kPi, false, true, true},
                             {0.0, 2.0 * kPi, true, false, false}};
  e.immersion.domain.marked_faces = {{0, true}};
  e.immersion.jet = [r](const ParamVec& u) {
    const double rho = u(0);
    Sphere2Chart s(u(1), u(2));
    auto lift = [](const AmbientVec& v3v) { return vec4(v3v(0), v3v(1), v3v(2), 0.0); };
    Jet j;
    j.x = lift(r * rho * s.omega());
    j.dx.resize(4, 3);
    j.dx.col(0) = lift(r * s.omega());
    j.dx.col(1) = lift(r * rho * s.d_psi());
    j.dx.col(2) = lift(r * rho * s.d_theta());
    j.second(0, 0, 3) = vec4(0, 0, 0, 0);
    j.second(0, 1, 3) = lift(r * s.d_psi());
    j.second(0, 2, 3) = lift(r * s.d_theta());
    j.second(1, 1, 3) = lift(r * rho * s.d_psi_psi());
    j.second(1, 2, 3) = lift(r * rho * s.d_psi_theta());
    j.second(2, 2, 3) = lift(r * rho * s.d_theta_theta());
    j.second(1, 0, 3) = j.second(0, 1, 3);
    j.second(2, 0, 3) = j.second(0, 2, 3);
    j.second(2, 1, 3) = j.second(1, 2, 3);
    return j;
  };
  e.immersion.normal_sign = 1.0;
  e.immersion.h_decl = 0.0;
  e.free_boundary = true;
  e.totally_umbilical = true;
  e.gauge_identities = curvature == 0 || conv == RadiusConvention::GaugeUnit;
  e.chi_expected = 1.0;
  e.components = {{{0, true}, 2.0, "sphere"}};
  e.kappa_uniform = 0.0;
  return e;
}

}  // namespace

double critical_catenoid_parameter() {
  static const double t0 = [] {
    double lo = 1.0, hi = 1.5;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (mid * std::tanh(mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return t0;
}

CatalogEntry equatorial_disk(int n, int curvature) {
  if (n != 2 && n != 3) throw std::invalid_argument("equatorial_disk: n must be 2 or 3");
  CatalogEntry e = n == 2 ? make_disk_2(curvature) : make_disk_3(curvature);

  std::string suffix = curvature == 0 ? "0" : (curvature == 1 ? "p1_geodesic" : "m1");
  e.id = "equatorial_disk_" + std::to_string(n) + "_" + suffix;
  e.description = "totally geodesic slice through the center of the ball";

  // closed-form measures
  if (n == 2) {
    if (curvature == 0) {
      e.area_closed_form = kPi;
      e.boundary_measure_closed_form = 2.0 * kPi;
    } else if (curvature == -1) {
      e.area_closed_form = 2.0 * kPi * (std::sqrt(2.0) - 1.0);
      e.boundary_measure_closed_form = 2.0 * kPi;
    } else {
      e.area_closed_form = 2.0 * kPi * (1.0 - std::cos(1.0));
      e.boundary_measure_closed_form = 2.0 * kPi * std::sin(1.0);
    }
  } else {
    if (curvature == 0) {
      e.area_closed_form = 4.0 * kPi / 3.0;
      e.boundary_measure_closed_form = 4.0 * kPi;
    } else if (curvature == -1) {
      const double rho = std::log(1.0 + std::sqrt(2.0));  // geodesic radius of the gauge ball
      e.area_closed_form = kPi * (std::sinh(2.0 * rho) - 2.0 * rho);
      e.boundary_measure_closed_form = 4.0 * kPi * std::sinh(rho) * std::sinh(rho);
    } else {
      e.area_closed_form = kPi * (2.0 - std::sin(2.0)); // int 4 pi sin^2 over [0,1]
      e.boundary_measure_closed_form = 4.0 * kPi * std::sin(1.0) * std::sin(1.0);
    }
  }
  return e;
}

CatalogEntry spherical_cap(int n, double R) {
  if (n != 2 && n != 3) throw std::invalid_argument("spherical_cap: n must be 2 or 3");
  if (!(R > 0.0)) throw std::invalid_argument("spherical_cap: R must be positive");
  const double d = std::sqrt(1.0 + R * R);
  const double alpha_max = std::atan2(1.0, R);  // cos = R/d, sin = 1/d

  CatalogEntry e;
  AmbientModel model = AmbientModel::make(0, n + 1, RadiusConvention::GaugeUnit);
  e.immersion.model = model;
  e.id = "spherical_cap_" + std::to_string(n) + "_r" +
         (R == 0.5 ? std::string("05") : std::to_string(static_cast<int>(R)));
  e.description = "spherical cap meeting the unit sphere orthogonally";

  if (n == 2) {
    e.immersion.domain.axes = {{0.0, alpha_max, false, true, false},
                               {0.0, 2.0 * kPi, true, false, false}};
    e.immersion.domain.marked_faces = {{0, true}};
    e.immersion.jet = [R, d](const ParamVec& u) {
      const double sa = std::sin(u(0)), ca = std::cos(u(0));
      const double ct = std::cos(u(1)), st = std::sin(u(1));
      Jet j;
      j.x = vec3(R * sa * ct, R * sa * st, d - R * ca);
      j.dx.resize(3, 2);
      j.dx.col(0) = vec3(R * ca * ct, R * ca * st, R * sa);
      j.dx.col(1) = vec3(-R * sa * st, R * sa * ct, 0.0);
      j.second(0, 0, 2) = vec3(-R * sa * ct, -R * sa * st, R * ca);
      j.second(0, 1, 2) = vec3(-R * ca * st, R * ca * ct, 0.0);
      j.second(1, 0, 2) = j.second(0, 1, 2);
      j.second(1, 1, 2) = vec3(-R * sa * ct, -R * sa * st, 0.0);
      return j;
    };
    // orient away from the sphere center: kappa = -1/R, H = -2/R
    const ParamVec seed = pv2(0.5 * alpha_max, 0.0);
    Jet js = e.immersion.jet(seed);
    AmbientVec desired = js.x - vec3(0.0, 0.0, d);
    e.immersion.normal_sign = orient_sign(e.immersion.jet, seed, desired);
    e.immersion.h_decl = -2.0 / R;
    e.kappa_uniform = -1.0 / R;
    e.area_closed_form = 2.0 * kPi * R * R * (1.0 - R / d);
    e.boundary_measure_closed_form = 2.0 * kPi * R / d;
    e.components = {{{0, true}, 0.0, "circle"}};
  } else {
    e.immersion.domain.axes = {{0.0, alpha_max, false, true, false},
                               {0.0, kPi, false, true, true},
                               {0.0, 2.0 * kPi, true, false, false}};
    e.immersion.domain.marked_faces = {{0, true}};
    e.immersion.jet = [R, d](const ParamVec& u) {
      const double sa = std::sin(u(0)), ca = std::cos(u(0));
      Sphere2Chart s(u(1), u(2));
      auto emb = [&](const AmbientVec& sphere_part, double last) {
        return vec4(sphere_part(0), sphere_part(1), sphere_part(2), last);
      };
      Jet j;
      j.x = emb(R * sa * s.omega(), d - R * ca);
      j.dx.resize(4, 3);
      j.dx.col(0) = emb(R * ca * s.omega(), R * sa);
      j.dx.col(1) = emb(R * sa * s.d_psi(), 0.0);
      j.dx.col(2) = emb(R * sa * s.d_theta(), 0.0);
      j.second(0, 0, 3) = emb(-R * sa * s.omega(), R * ca);
      j.second(0, 1, 3) = emb(R * ca * s.d_psi(), 0.0);
      j.second(0, 2, 3) = emb(R * ca * s.d_theta(), 0.0);
      j.second(1, 1, 3) = emb(R * sa * s.d_psi_psi(), 0.0);
      j.second(1, 2, 3) = emb(R * sa * s.d_psi_theta(), 0.0);
      j.second(2, 2, 3) = emb(R * sa * s.d_theta_theta(), 0.0);
      j.second(1, 0, 3) = j.second(0, 1, 3);
      j.second(2, 0, 3) = j.second(0, 2, 3);
      j.second(2, 1, 3) = j.second(1, 2, 3);
      return j;
    };
    const ParamVec seed = pv3(0.5 * alpha_max, 0.4 * kPi, 0.0);
    Jet js = e.immersion.jet(seed);
    AmbientVec desired = js.x - vec4(0.0, 0.0, 0.0, d);
    e.immersion.normal_sign = orient_sign(e.immersion.jet, seed, desired);
    e.immersion.h_decl = -3.0 / R;
    e.kappa_uniform = -1.0 / R;
    e.area_closed_form =
        2.0 * kPi * R * R * R * (alpha_max - std::sin(alpha_max) * std::cos(alpha_max));
    e.boundary_measure_closed_form = 4.0 * kPi * (R / d) * (R / d);
    e.components = {{{0, true}, 2.0, "sphere"}};
  }
  e.free_boundary = true;
  e.totally_umbilical = true;
  e.chi_expected = 1.0;
  return e;
}

CatalogEntry critical_catenoid() {
  const double t0 = critical_catenoid_parameter();
  const double s = 1.0 / std::sqrt(std::cosh(t0) * std::cosh(t0) + t0 * t0);

  CatalogEntry e;
  e.id = "critical_catenoid";
  e.description = "rescaled catenoid meeting the unit sphere orthogonally";
  e.immersion.model = AmbientModel::make(0, 3, RadiusConvention::GaugeUnit);
  e.immersion.domain.axes = {{-t0, t0, false, false, false},
                             {0.0, 2.0 * kPi, true, false, false}};
  e.immersion.domain.marked_faces = {{0, false}, {0, true}};
  e.immersion.jet = [s](const ParamVec& u) {
    const double ch = std::cosh(u(0)), sh = std::sinh(u(0));
    const double ct = std::cos(u(1)), st = std::sin(u(1));
    Jet j;
    j.x = vec3(s * ch * ct, s * ch * st, s * u(0));
    j.dx.resize(3, 2);
    j.dx.col(0) = vec3(s * sh * ct, s * sh * st, s);
    j.dx.col(1) = vec3(-s * ch * st, s * ch * ct, 0.0);
    j.second(0, 0, 2) = vec3(s * ch * ct, s * ch * st, 0.0);
    j.second(0, 1, 2) = vec3(-s * sh * st, s * sh * ct, 0.0);
    j.second(1, 0, 2) = j.second(0, 1, 2);
    j.second(1, 1, 2) = vec3(-s * ch * ct, -s * ch * st, 0.0);
    return j;
  };
  e.immersion.normal_sign = 1.0;
  e.immersion.h_decl = 0.0;
  e.free_boundary = true;
  e.totally_umbilical = false;
  e.chi_expected = 0.0;
  e.components = {{{0, false}, 0.0, "circle"}, {{0, true}, 0.0, "circle"}};
  e.area_closed_form = 2.0 * kPi / t0;
  e.boundary_measure_closed_form = 4.0 * kPi / t0;  // = 4 pi tanh t0
  return e;
}

CatalogEntry boundary_sphere(int curvature, RadiusConvention conv) {
  AmbientModel model = AmbientModel::make(curvature, 3, conv);
  const double r = model.radius();
  const double b0 = model.boundary_gauge_norm();

  CatalogEntry e;
  std::string suffix = curvature == 0 ? "0" : (curvature == 1 ? "p1" : "m1");
  if (conv == RadiusConvention::GeodesicUnit && curvature != 0) suffix += "_geodesic";
  e.id = "boundary_sphere_2_" + suffix;
  e.description = "the boundary sphere as a closed immersed hypersurface";
  e.immersion.model = model;
  e.immersion.domain.axes = {{0.0, kPi, false, true, true},
                             {0.0, 2.0 * kPi, true, false, false}};
  e.immersion.jet = [r](const ParamVec& u) {
    Sphere2Chart s(u(0), u(1));
    Jet j;
    j.x = r * s.omega();
    j.dx.resize(3, 2);
    j.dx.col(0) = r * s.d_psi();
    j.dx.col(1) = r * s.d_theta();
    j.second(0, 0, 2) = r * s.d_psi_psi();
    j.second(0, 1, 2) = r * s.d_psi_theta();
    j.second(1, 0, 2) = j.second(0, 1, 2);
    j.second(1, 1, 2) = r * s.d_theta_theta();
    return j;
  };
  const ParamVec seed = pv2(0.4 * kPi, 0.0);
  Jet js = e.immersion.jet(seed);
  e.immersion.normal_sign = orient_sign(e.immersion.jet, seed, js.x);  // outward
  const double kappa = -model.mu0() / b0;
  e.immersion.h_decl = 2.0 * kappa;
  e.free_boundary = false;
  e.totally_umbilical = true;
  e.gauge_identities = curvature == 0 || conv == RadiusConvention::GaugeUnit;
  e.chi_expected = 2.0;
  e.kappa_uniform = kappa;
  e.area_closed_form = 4.0 * kPi * b0 * b0;  // gauge norm scales the round metric
  return e;
}

CatalogEntry spherical_cylinder(double a) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("spherical_cylinder: need 0 < a < 1");
  const double L = std::sqrt(1.0 - a * a);

  CatalogEntry e;
  e.id = "spherical_cylinder_3";
  e.description = "sphere-cross-segment tube with boundary on the unit sphere";
  e.immersion.model = AmbientModel::make(0, 4, RadiusConvention::GaugeUnit);
  e.immersion.domain.axes = {{-L, L, false, false, false},
                             {0.0, kPi, false, true, true},
                             {0.0, 2.0 * kPi, true, false, false}};
  e.immersion.domain.marked_faces = {{0, false}, {0, true}};
  e.immersion.jet = [a](const ParamVec& u) {
    Sphere2Chart s(u(1), u(2));
    auto emb = [&](const AmbientVec& sphere_part, double last) {
      return vec4(sphere_part(0), sphere_part(1), sphere_part(2), last);
    };
    Jet j;
    j.x = emb(a * s.omega(), u(0));
    j.dx.resize(4, 3);
    j.dx.col(0) = vec4(0, 0, 0, 1);
    j.dx.col(1) = emb(a * s.d_psi(), 0.0);
    j.dx.col(2) = emb(a * s.d_theta(), 0.0);
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) j.second(i, k, 3) = vec4(0, 0, 0, 0);
    j.second(1, 1, 3) = emb(a * s.d_psi_psi(), 0.0);
    j.second(1, 2, 3) = emb(a * s.d_psi_theta(), 0.0);
    j.second(2, 1, 3) = j.second(1, 2, 3);
    j.second(2, 2, 3) = emb(a * s.d_theta_theta(), 0.0);
    return j;
  };
  const ParamVec seed = pv3(0.0, 0.4 * kPi, 0.0);
  Jet js = e.immersion.jet(seed);
  AmbientVec inward = -vec4(js.x(0), js.x(1), js.x(2), 0.0);
  e.immersion.normal_sign = orient_sign(e.immersion.jet, seed, inward);
  e.immersion.h_decl = 2.0 / a;
  e.free_boundary = false;  // boundary on the sphere but not orthogonal
  e.totally_umbilical = false;
  e.chi_expected = 2.0;
  e.components = {{{0, false}, 2.0, "sphere"}, {{0, true}, 2.0, "sphere"}};
  e.area_closed_form = 8.0 * kPi * a * a * L;
  e.boundary_measure_closed_form = 8.0 * kPi * a * a;
  return e;
}

CatalogEntry negative_variants(const CatalogEntry& base, NegativeKind kind) {
  switch (kind) {
    case NegativeKind::Truncate: {
      if (base.id != "critical_catenoid")
        throw std::invalid_argument("negative_variants: Truncate applies to the catenoid");
      const double t0 = critical_catenoid_parameter();
      const double t1 = 0.8 * t0;
      const double s = 1.0 / std::sqrt(std::cosh(t1) * std::cosh(t1) + t1 * t1);
      CatalogEntry e = critical_catenoid();
      e.id = "truncated_catenoid";
      e.description = "catenoid truncated to 0.8 of the critical profile, rescaled to the sphere";
      e.immersion.domain.axes[0].a = -t1;
      e.immersion.domain.axes[0].b = t1;
      e.immersion.jet = [s](const ParamVec& u) {
        const double ch = std::cosh(u(0)), sh = std::sinh(u(0));
        const double ct = std::cos(u(1)), st = std::sin(u(1));
        Jet j;
        j.x = vec3(s * ch * ct, s * ch * st, s * u(0));
        j.dx.resize(3, 2);
        j.dx.col(0) = vec3(s * sh * ct, s * sh * st, s);
        j.dx.col(1) = vec3(-s * ch * st, s * ch * ct, 0.0);
        j.second(0, 0, 2) = vec3(s * ch * ct, s * ch * st, 0.0);
        j.second(0, 1, 2) = vec3(-s * sh * st, s * sh * ct, 0.0);
        j.second(1, 0, 2) = j.second(0, 1, 2);
        j.second(1, 1, 2) = vec3(-s * ch * ct, -s * ch * st, 0.0);
        return j;
      };
      e.free_boundary = false;
      e.area_closed_form = 2.0 * kPi * s * s * (t1 + std::sinh(t1) * std::cosh(t1));
      e.boundary_measure_closed_form = 4.0 * kPi * s * std::cosh(t1);
      return e;
    }
    case NegativeKind::Translate: {
      if (base.id != "equatorial_disk_2_0")
        throw std::invalid_argument("negative_variants: Translate applies to the flat disk");
      CatalogEntry e = base;
      e.id = "translated_disk";
      e.description = "equatorial disk shifted in its own plane off the center";
      auto inner = base.immersion.jet;
      e.immersion.jet = [inner](const ParamVec& u) {
        Jet j = inner(u);
        j.x(0) += 0.1;
        return j;
      };
      e.free_boundary = false;
      e.area_closed_form = kPi;
      e.boundary_measure_closed_form = 2.0 * kPi;
      return e;
    }
    case NegativeKind::GraphPerturb: {
      if (base.id.rfind("spherical_cap_2", 0) != 0)
        throw std::invalid_argument("negative_variants: GraphPerturb applies to a 2d cap");
      // bump h(alpha) = eps sin^2(pi alpha / alpha_max): h and h' vanish at the
      // rim, so the free-boundary contact survives while H does not.
      CatalogEntry e = base;
      e.id = "perturbed_cap";
      e.description = "spherical cap with a radial bump breaking constant mean curvature";
      const double R = -2.0 / *base.immersion.h_decl;
      const double d = std::sqrt(1.0 + R * R);
      const double alpha_max = std::atan2(1.0, R);
      const double eps = 1e-2;
      e.immersion.jet = [R, d, alpha_max, eps](const ParamVec& u) {
        const double w = kPi / alpha_max;
        const double rr = R + eps * std::pow(std::sin(w * u(0)), 2);
        const double dr = eps * w * std::sin(2.0 * w * u(0));
        const double ddr = 2.0 * eps * w * w * std::cos(2.0 * w * u(0));
        const double sa = std::sin(u(0)), ca = std::cos(u(0));
        const double ct = std::cos(u(1)), st = std::sin(u(1));
        // m(alpha, theta) = (sa ct, sa st, -ca); X = C + rr * m
        auto m = vec3(sa * ct, sa * st, -ca);
        auto m_a = vec3(ca * ct, ca * st, sa);
        auto m_aa = vec3(-sa * ct, -sa * st, ca);
        auto m_t = vec3(-sa * st, sa * ct, 0.0);
        auto m_at = vec3(-ca * st, ca * ct, 0.0);
        auto m_tt = vec3(-sa * ct, -sa * st, 0.0);
        Jet j;
        j.x = vec3(0.0, 0.0, d) + rr * m;
        j.dx.resize(3, 2);
        j.dx.col(0) = dr * m + rr * m_a;
        j.dx.col(1) = rr * m_t;
        j.second(0, 0, 2) = ddr * m + 2.0 * dr * m_a + rr * m_aa;
        j.second(0, 1, 2) = dr * m_t + rr * m_at;
        j.second(1, 0, 2) = j.second(0, 1, 2);
        j.second(1, 1, 2) = rr * m_tt;
        return j;
      };
      e.cmc_exact = false;
      e.totally_umbilical = false;
      e.kappa_uniform.reset();
      e.area_closed_form = std::numeric_limits<double>::quiet_NaN();
      e.boundary_measure_closed_form = base.boundary_measure_closed_form;
      return e;
    }
  }
  throw std::invalid_argument("negative_variants: unknown kind");
}

CatalogEntry perturbed_disk_probe(double eps) {
  CatalogEntry e = equatorial_disk(3, 0);
  e.id = "perturbed_disk_3";
  e.description = "equatorial 3-disk with a graph bump; free boundary kept, CMC broken softly";
  auto inner = e.immersion.jet;
  e.immersion.jet = [inner, eps](const ParamVec& u) {
    // b(rho) = (1 - rho^2)^2: b(1) = b'(1) = 0 keeps the rim and the contact angle
    const double rho = u(0);
    const double q = 1.0 - rho * rho;
    const double b = q * q;
    const double db = -4.0 * rho * q;
    const double ddb = 12.0 * rho * rho - 4.0;
    Jet j = inner(u);
    j.x(3) += eps * b;
    j.dx(3, 0) += eps * db;
    j.second(0, 0, 3)(3) += eps * ddb;
    return j;
  };
  e.totally_umbilical = false;
  e.cmc_exact = false;  // an evaluation probe, not a CMC hypersurface
  e.kappa_uniform.reset();
  e.immersion.h_decl = 0.0;
  e.immersion.h_tol = 50.0;
  e.area_closed_form = std::numeric_limits<double>::quiet_NaN();
  e.components = {{{0, true}, 2.0, "sphere"}};
  return e;
}

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  out.push_back(equatorial_disk(2, 0));
  out.push_back(equatorial_disk(2, -1));
  out.push_back(equatorial_disk(2, 1));
  out.push_back(equatorial_disk(3, 0));
  out.push_back(equatorial_disk(3, -1));
  out.push_back(spherical_cap(2, 0.5));
  out.push_back(spherical_cap(2, 1.0));
  out.push_back(spherical_cap(2, 2.0));
  out.push_back(spherical_cap(3, 1.0));
  out.push_back(spherical_cap(3, 2.0));
  out.push_back(critical_catenoid());
  out.push_back(boundary_sphere(0, RadiusConvention::GaugeUnit));
  out.push_back(boundary_sphere(-1, RadiusConvention::GaugeUnit));
  out.push_back(boundary_sphere(1, RadiusConvention::GeodesicUnit));
  out.push_back(spherical_cylinder());
  out.push_back(negative_variants(critical_catenoid(), NegativeKind::Truncate));
  out.push_back(negative_variants(equatorial_disk(2, 0), NegativeKind::Translate));
  out.push_back(negative_variants(spherical_cap(2, 1.0), NegativeKind::GraphPerturb));
  out.push_back(perturbed_disk_probe(0.4));
  return out;
}

CatalogEntry find_entry(const std::string& id) {
  for (auto& e : all_entries())
    if (e.id == id) return e;
  throw std::invalid_argument("unknown catalog entry: " + id);
}

std::vector<std::string> entry_ids() {
  std::vector<std::string> ids;
  for (const auto& e : all_entries()) ids.push_back(e.id);
  return ids;
}

}  // namespace cmclab
