#pragma once

#include <vector>

#include "symcurv/connection.hpp"

namespace symcurv {

// Connection data converted once to doubles; ODE flows are
// transcendental, so this module works in floating point.
struct GeodesicSystem {
  int dim = 0;
  std::vector<double> a;      // A_{ij}^k, row-major (i*d + j)*d + k
  std::vector<double> r;      // R_{ijk}^l mixed
  std::vector<double> omega;  // Om_{ij}
};

GeodesicSystem geodesic_system(const LeftInvariantConnection& conn);

struct State {
  std::vector<double> v;     // gamma-dot in the left trivialization
  std::vector<double> j;     // Jacobi field
  std::vector<double> jdot;  // covariant derivative D_t J
};

struct Trajectory {
  double h = 0;
  std::vector<State> samples;  // at t = 0, h, 2h, ...
  bool blew_up = false;
  double blowup_time = 0;
};

// Classical RK4 on v' = -A(v)v, J' = K - A(v)J, K' = R(v,J)v - A(v)K.
Trajectory integrate(const GeodesicSystem& sys, const State& initial, double duration, double h);

struct ConvexityReport {
  double max_resid_first_derivative = 0;  // d/dt om(J, v) vs om(K, v)
  double max_resid_second_derivative = 0;  // f'' vs om(K,v)^2 - om(v,J) om(R(v,J)v, v), relative
  int zero_count = 0;                      // sign changes of om(J, v)
  bool phi_identically_zero = false;
  bool convexity_asserted = false;  // only when nonpositive curvature was sampled
  bool convexity_holds = false;
  bool zero_count_ok = false;
};

ConvexityReport convexity_check(const GeodesicSystem& sys, const Trajectory& traj,
                                bool assume_nonpositive);

// log2(|x_h(T) - x_{h/2}(T)| / |x_{h/2}(T) - x_{h/4}(T)|) on the full state.
double convergence_order(const GeodesicSystem& sys, const State& initial, double duration,
                         double h);

// Max-norm distance at final time between step h and an h/2 Richardson
// reference, relative to the reference magnitude.
double step_halving_error(const GeodesicSystem& sys, const State& initial, double duration,
                          double h);

}  // namespace symcurv
