#include "symcurv/geodesic.hpp"

#include <cmath>
#include <stdexcept>

namespace symcurv {

GeodesicSystem geodesic_system(const LeftInvariantConnection& conn) {
  const int d = conn.dim();
  GeodesicSystem sys;
  sys.dim = d;
  sys.a.resize(static_cast<std::size_t>(d) * d * d);
  sys.r.resize(static_cast<std::size_t>(d) * d * d * d);
  sys.omega.resize(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      sys.omega[static_cast<std::size_t>(i * d + j)] = to_double(conn.alg.omega.matrix().at({i, j}));
      for (int k = 0; k < d; ++k)
        sys.a[static_cast<std::size_t>((i * d + j) * d + k)] = to_double(conn.a.at({i, j, k}));
    }
  Tensor rm = curvature_mixed(conn);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          sys.r[static_cast<std::size_t>(((i * d + j) * d + k) * d + l)] =
              to_double(rm.at({i, j, k, l}));
  return sys;
}

namespace {

void apply_a(const GeodesicSystem& sys, const std::vector<double>& x, const std::vector<double>& y,
             std::vector<double>& out) {
  const int d = sys.dim;
  out.assign(static_cast<std::size_t>(d), 0.0);
  for (int i = 0; i < d; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j) {
      double xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      if (xy == 0) continue;
      for (int k = 0; k < d; ++k)
        out[static_cast<std::size_t>(k)] += sys.a[static_cast<std::size_t>((i * d + j) * d + k)] * xy;
    }
  }
}

void curvature_vjv(const GeodesicSystem& sys, const std::vector<double>& v,
                   const std::vector<double>& j, std::vector<double>& out) {
  const int d = sys.dim;
  out.assign(static_cast<std::size_t>(d), 0.0);
  for (int i = 0; i < d; ++i)
    for (int jj = 0; jj < d; ++jj) {
      double vj = v[static_cast<std::size_t>(i)] * j[static_cast<std::size_t>(jj)];
      if (vj == 0) continue;
      for (int k = 0; k < d; ++k) {
        double vjk = vj * v[static_cast<std::size_t>(k)];
        if (vjk == 0) continue;
        for (int l = 0; l < d; ++l)
          out[static_cast<std::size_t>(l)] +=
              sys.r[static_cast<std::size_t>(((i * d + jj) * d + k) * d + l)] * vjk;
      }
    }
}

double omega_pair(const GeodesicSystem& sys, const std::vector<double>& x,
                  const std::vector<double>& y) {
  const int d = sys.dim;
  double s = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      s += sys.omega[static_cast<std::size_t>(i * d + j)] * x[static_cast<std::size_t>(i)] *
           y[static_cast<std::size_t>(j)];
  return s;
}

struct Deriv {
  std::vector<double> dv, dj, dk;
};

// v' = -A(v)v, J' = K - A(v)J, K' = R(v,J)v - A(v)K.
void rhs(const GeodesicSystem& sys, const State& s, Deriv& out) {
  std::vector<double> tmp;
  apply_a(sys, s.v, s.v, tmp);
  out.dv.resize(tmp.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) out.dv[i] = -tmp[i];
  apply_a(sys, s.v, s.j, tmp);
  out.dj.resize(tmp.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) out.dj[i] = s.jdot[i] - tmp[i];
  std::vector<double> curv;
  curvature_vjv(sys, s.v, s.j, curv);
  apply_a(sys, s.v, s.jdot, tmp);
  out.dk.resize(tmp.size());
  for (std::size_t i = 0; i < tmp.size(); ++i) out.dk[i] = curv[i] - tmp[i];
}

State axpy(const State& s, double c, const Deriv& d) {
  State out = s;
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    out.v[i] += c * d.dv[i];
    out.j[i] += c * d.dj[i];
    out.jdot[i] += c * d.dk[i];
  }
  return out;
}

bool finite(const State& s) {
  auto ok = [](const std::vector<double>& x) {
    for (double v : x)
      if (!std::isfinite(v) || std::abs(v) > 1e12) return false;
    return true;
  };
  return ok(s.v) && ok(s.j) && ok(s.jdot);
}

}  // namespace

Trajectory integrate(const GeodesicSystem& sys, const State& initial, double duration, double h) {
  if (!(h > 0) || duration < h) throw std::invalid_argument("integrate: need 0 < h <= duration");
  const int steps = static_cast<int>(std::llround(duration / h));
  Trajectory traj;
  traj.h = h;
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
  State s = initial;
  traj.samples.push_back(s);
  Deriv k1, k2, k3, k4;
  for (int step = 0; step < steps; ++step) {
    rhs(sys, s, k1);
    rhs(sys, axpy(s, h / 2, k1), k2);
    rhs(sys, axpy(s, h / 2, k2), k3);
    rhs(sys, axpy(s, h, k3), k4);
    State next = s;
    for (std::size_t i = 0; i < s.v.size(); ++i) {
      next.v[i] += h / 6 * (k1.dv[i] + 2 * k2.dv[i] + 2 * k3.dv[i] + k4.dv[i]);
      next.j[i] += h / 6 * (k1.dj[i] + 2 * k2.dj[i] + 2 * k3.dj[i] + k4.dj[i]);
      next.jdot[i] += h / 6 * (k1.dk[i] + 2 * k2.dk[i] + 2 * k3.dk[i] + k4.dk[i]);
    }
    if (!finite(next)) {
      traj.blew_up = true;
      traj.blowup_time = (step + 1) * h;
      return traj;
    }
    s = std::move(next);
    traj.samples.push_back(s);
  }
  return traj;
}

ConvexityReport convexity_check(const GeodesicSystem& sys, const Trajectory& traj,
                                bool assume_nonpositive) {
  ConvexityReport rep;
  const auto& ss = traj.samples;
  const std::size_t n = ss.size();
  if (n < 5) throw std::invalid_argument("convexity_check: trajectory too short");
  const double h = traj.h;

  std::vector<double> phi(n), phidot(n), f(n), fpp(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = omega_pair(sys, ss[i].j, ss[i].v);
    phidot[i] = omega_pair(sys, ss[i].jdot, ss[i].v);
    f[i] = 0.5 * phi[i] * phi[i];
    std::vector<double> curv;
    curvature_vjv(sys, ss[i].v, ss[i].j, curv);
    // f'' = om(K,v)^2 - om(v,J) om(R(v,J)v, v)
    fpp[i] = phidot[i] * phidot[i] -
             omega_pair(sys, ss[i].v, ss[i].j) * omega_pair(sys, curv, ss[i].v);
  }

  // (a) fourth-order stencil for phi' against om(K, v).
  for (std::size_t i = 2; i + 2 < n; ++i) {
    double d1 = (-phi[i + 2] + 8 * phi[i + 1] - 8 * phi[i - 1] + phi[i - 2]) / (12 * h);
    rep.max_resid_first_derivative =
        std::max(rep.max_resid_first_derivative, std::abs(d1 - phidot[i]));
  }
  // (b) central second difference of f against the curvature expression.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    double d2 = (f[i + 1] - 2 * f[i] + f[i - 1]) / (h * h);
    double denom = std::max(1.0, std::abs(fpp[i]));
    rep.max_resid_second_derivative =
        std::max(rep.max_resid_second_derivative, std::abs(d2 - fpp[i]) / denom);
  }

  double maxphi = 0;
  for (double p : phi) maxphi = std::max(maxphi, std::abs(p));
  rep.phi_identically_zero = maxphi <= 1e-12;
  int last_sign = 0;
  for (double p : phi) {
    int sgn = p > 1e-12 ? 1 : (p < -1e-12 ? -1 : 0);
    if (sgn != 0) {
      if (last_sign != 0 && sgn != last_sign) ++rep.zero_count;
      last_sign = sgn;
    }
  }

  rep.convexity_asserted = assume_nonpositive;
  if (assume_nonpositive) {
    rep.convexity_holds = true;
    for (std::size_t i = 0; i < n; ++i)
      if (fpp[i] < -1e-9) rep.convexity_holds = false;
    rep.zero_count_ok = rep.phi_identically_zero || rep.zero_count <= 1;
  }
  return rep;
}

namespace {

double state_distance(const State& a, const State& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    m = std::max(m, std::abs(a.v[i] - b.v[i]));
    m = std::max(m, std::abs(a.j[i] - b.j[i]));
    m = std::max(m, std::abs(a.jdot[i] - b.jdot[i]));
  }
  return m;
}

double state_norm(const State& a) {
  double m = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    m = std::max(m, std::abs(a.v[i]));
    m = std::max(m, std::abs(a.j[i]));
    m = std::max(m, std::abs(a.jdot[i]));
  }
  return m;
}

}  // namespace

double convergence_order(const GeodesicSystem& sys, const State& initial, double duration,
                         double h) {
  State s1 = integrate(sys, initial, duration, h).samples.back();
  State s2 = integrate(sys, initial, duration, h / 2).samples.back();
  State s3 = integrate(sys, initial, duration, h / 4).samples.back();
  double e1 = state_distance(s1, s2), e2 = state_distance(s2, s3);
  if (e2 == 0) return 16.0;
  return std::log2(e1 / e2);
}

double step_halving_error(const GeodesicSystem& sys, const State& initial, double duration,
                          double h) {
  State coarse = integrate(sys, initial, duration, h).samples.back();
  State fine = integrate(sys, initial, duration, h / 2).samples.back();
  // Richardson extrapolation of a fourth-order method.
  State ref = fine;
  for (std::size_t i = 0; i < ref.v.size(); ++i) {
    ref.v[i] = fine.v[i] + (fine.v[i] - coarse.v[i]) / 15.0;
    ref.j[i] = fine.j[i] + (fine.j[i] - coarse.j[i]) / 15.0;
    ref.jdot[i] = fine.jdot[i] + (fine.jdot[i] - coarse.jdot[i]) / 15.0;
  }
  return state_distance(coarse, ref) / std::max(1.0, state_norm(ref));
}

}  // namespace symcurv
