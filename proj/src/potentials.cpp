#include "gravnano/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace gravnano {
namespace {

// Overlap polynomial p(x), x = d/R in [0, 2]: v_eff = (G M^2/R) p(x).
double overlap_poly(double x) {
  return -6.0 / 5.0 + x * x / 2.0 - (3.0 / 16.0) * x * x * x +
         (1.0 / 160.0) * x * x * x * x * x;
}

// Spring shape K(x) = p'(x)/x: piecewise quintic slope over the overlap region,
// 1/x^3 beyond; continuous with continuous slope at x = 2.
double spring_shape(double x) {
  if (x < 2.0) return 1.0 - (9.0 / 16.0) * x + (1.0 / 32.0) * x * x * x;
  return 1.0 / (x * x * x);
}

double shape_value(double x) {
  if (x < 2.0) return overlap_poly(x);
  return -1.0 / x;
}

// Composite Simpson with `panels` panels (2*panels subintervals).
template <class F>
double simpson(F f, double a, double b, int panels) {
  int n = 2 * std::max(panels, 1);
  double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; i += 2) s += 4.0 * f(a + i * h);
  for (int i = 2; i < n; i += 2) s += 2.0 * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace

PotentialBranch v_eff_branch(double d_m, const SphereSpec& spec) {
  if (d_m < 0.0) throw std::invalid_argument("v_eff_branch: negative distance");
  return d_m < 2.0 * spec.radius_m ? PotentialBranch::Overlap : PotentialBranch::Coulomb;
}

double v_eff_sphere(double d_m, const SphereSpec& spec, const PhysicalConstants& c) {
  if (d_m < 0.0) throw std::invalid_argument("v_eff_sphere: negative distance");
  double M = spec.mass_kg();
  double R = spec.radius_m;
  return c.G * M * M / R * shape_value(d_m / R);
}

QuadratureResult v_eff_sphere_quadrature(double d_m, const SphereSpec& spec,
                                         const PhysicalConstants& c, int subdivisions,
                                         double rel_tol) {
  if (d_m < 0.0) throw std::invalid_argument("v_eff_sphere_quadrature: negative distance");
  if (subdivisions < 8) throw std::invalid_argument("v_eff_sphere_quadrature: subdivisions < 8");

  double M = spec.mass_kg();
  double R = spec.radius_m;
  double d = d_m;

  // Potential of sphere 1 at radius r from its center.
  auto phi1 = [&](double r) {
    if (r < R) return -(c.G * M / R) * (1.5 - r * r / (2.0 * R * R));
    return -c.G * M / r;
  };
  // Solid-angle fraction of the radius-r shell lying inside the displaced copy.
  auto fraction = [&](double r) {
    if (d == 0.0) return r <= R ? 1.0 : 0.0;
    if (r <= 0.0) return 0.0;
    double f = (R * R - (r - d) * (r - d)) / (4.0 * r * d);
    return std::clamp(f, 0.0, 1.0);
  };
  auto integrand = [&](double r) {
    return (3.0 * M / (R * R * R)) * fraction(r) * r * r * phi1(r);
  };

  // Segment endpoints: the full-shell/partial-shell split and the phi1 branch
  // split at r = R.
  std::vector<double> pts;
  if (d == 0.0) {
    pts = {0.0, R};
  } else if (d < R) {
    pts = {0.0, R - d, R, R + d};
  } else if (d < 2.0 * R) {
    pts = {d - R, R, d + R};
  } else {
    pts = {d - R, d + R};
  }

  double total = 0.0;  // combined segment length for panel allocation
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += std::max(0.0, pts[i + 1] - pts[i]);
  double coarse = 0.0, fine = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i], b = pts[i + 1];
    if (!(b > a)) continue;
    int share = std::max(2, (int)std::lround(subdivisions * (b - a) / total));
    fine += simpson(integrand, a, b, share);
    coarse += simpson(integrand, a, b, std::max(1, share / 2));
  }
  double err = std::abs(fine - coarse) / 15.0;
  bool ok = err <= rel_tol * std::abs(fine);
  return {fine, err, ok};
}

double spring_constant(double width_m, const SphereSpec& spec, const PhysicalConstants& c,
                       const PotentialModel& model) {
  model.validate();
  double M = spec.mass_kg();
  double R = spec.radius_m;
  double k0 = c.G * M * M / (R * R * R);
  switch (model.variant) {
    case PotentialModel::Variant::DiosiHarmonic:
      return k0;
    case PotentialModel::Variant::HyperbolicOnly: {
      if (!(width_m > 0.0)) throw std::invalid_argument("spring_constant: width must be > 0");
      double aw = model.alpha * width_m;
      return c.G * M * M / (aw * aw * aw);
    }
    case PotentialModel::Variant::PiecewiseSpring: {
      if (width_m < 0.0) throw std::invalid_argument("spring_constant: negative width");
      return k0 * spring_shape(model.alpha * width_m / R);
    }
  }
  throw std::logic_error("spring_constant: unreachable");
}

double v_eff_antiderivative(double width_m, const SphereSpec& spec, const PhysicalConstants& c,
                            const PotentialModel& model) {
  model.validate();
  double M = spec.mass_kg();
  double R = spec.radius_m;
  switch (model.variant) {
    case PotentialModel::Variant::DiosiHarmonic: {
      if (width_m < 0.0) throw std::invalid_argument("v_eff_antiderivative: negative width");
      double k0 = c.G * M * M / (R * R * R);
      return -(6.0 / 5.0) * c.G * M * M / R + 0.5 * k0 * width_m * width_m;
    }
    case PotentialModel::Variant::HyperbolicOnly: {
      if (!(width_m > 0.0))
        throw std::invalid_argument("v_eff_antiderivative: width must be > 0");
      double a3 = model.alpha * model.alpha * model.alpha;
      return -c.G * M * M / (a3 * width_m);
    }
    case PotentialModel::Variant::PiecewiseSpring: {
      if (width_m < 0.0) throw std::invalid_argument("v_eff_antiderivative: negative width");
      return c.G * M * M / R * shape_value(model.alpha * width_m / R) /
             (model.alpha * model.alpha);
    }
  }
  throw std::logic_error("v_eff_antiderivative: unreachable");
}

double schmidt_kernel(double d_m, const SphereSpec& spec, const PhysicalConstants& c) {
  if (!(d_m > 0.0)) throw std::invalid_argument("schmidt_kernel: distance must be > 0");
  double N = spec.atom_count();
  double m = spec.atom_mass_kg;
  return -c.G * N * m * m / d_m;
}

double nuclear_kernel(double d_m, const SphereSpec& spec, const PhysicalConstants& c) {
  if (d_m < 0.0) throw std::invalid_argument("nuclear_kernel: negative distance");
  double N = spec.atom_count();
  double m = spec.atom_mass_kg;
  double rn = spec.nucleus_radius_m;
  return N * c.G * m * m / rn * shape_value(d_m / rn);
}

double structure_corrected_spring(const SphereSpec& spec, const PhysicalConstants& c) {
  double M = spec.mass_kg();
  double a0 = spec.lattice_constant_m;
  double zp = spec.nucleus_radius_m;
  double N = spec.atom_count();
  return c.G * M * M / (a0 * a0 * a0) + c.G * M * M / (N * zp * zp * zp);
}

double structure_spring_ratio(const SphereSpec& spec) {
  double q = spec.lattice_constant_m / spec.nucleus_radius_m;
  return q * q * q / spec.atom_count();
}

}  // namespace gravnano
