#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gmec/state.hpp"

namespace gmec {

// Parameters of the real three-qubit X-state family: p on the |000> corner,
// 1-p on |111>, r on the antidiagonal. Positivity needs r^2 <= p(1-p).
struct XStateParams {
  double p = 0.0;
  double r = 0.0;
};

XStateParams make_xstate_params(double p, double r);

// Measurement directions, one pair per setting: party 1 uses theta1
// (setting 0) and theta2 (setting 1); parties 2 and 3 share theta3
// (setting 0) and theta4 (setting 1).
struct MeasurementAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double theta4 = 0.0;
};

MeasurementAngles make_angles(double t1, double t2, double t3, double t4);

// The 8x8 density matrix with p at (0,0), 1-p at (7,7), r at (0,7)/(7,0).
DensityMatrix build_xstate(const XStateParams& params);

// Signed six-term probability combination evaluated by the Born rule on an
// arbitrary three-qubit state. Outcome projectors follow the fixed
// labeling: the all-zero term and the three single-flip terms project every
// party onto cos(t)|0> + sin(t)|1> of its setting's direction; the two
// double-flip terms project the two setting-1 parties onto
// sin(t)|0> - cos(t)|1>.
double hardy_from_state(const DensityMatrix& rho, const MeasurementAngles& angles);

// Explicit trigonometric form of the same quantity for the X-state family;
// an independent code path from hardy_from_state.
double hardy_closed_form(const MeasurementAngles& angles, const XStateParams& params);

struct HardyResult {
  double h_max = 0.0;
  MeasurementAngles best;
  XStateParams params;
  int restarts = 0;
  bool converged = false;
};

// Multistart ascent of the closed form over [0, pi]^4. The first start is
// the fixed point (pi/2, pi/2, 3pi/4, 0); remaining starts are uniform.
// Deterministic under a fixed seed.
HardyResult maximize_hardy(const XStateParams& params, int restarts,
                           std::uint64_t seed);

struct SweepRow {
  double p = 0.0;
  double r = 0.0;
  double h_max = 0.0;
  MeasurementAngles angles;
  bool converged = false;
};

struct SweepResult {
  int p_steps = 0;
  int r_steps = 0;
  std::vector<SweepRow> rows;  // ordered by (p index, r index)
  // fixed-p rows whose h_max is not nondecreasing in r (report-only)
  std::vector<int> non_monotone_p_indices;
};

// Grid over p in [0, 0.5] and, per p, r in [0, sqrt(p(1-p))]; each cell is
// maximized independently with a cell-derived seed, so the result does not
// depend on evaluation order.
SweepResult sweep_hardy(int p_steps, int r_steps, int restarts, std::uint64_t seed);

// CSV with header p,r,h_max,theta1,theta2,theta3,theta4,converged and 12
// significant digits.
std::string sweep_to_csv(const SweepResult& sweep);

struct CorrelationFlags {
  bool gmnl = false;          // computed: h_max above the violation threshold
  bool gms = false;           // asserted equal to gmnl for this state family
  bool gme_positive = false;  // computed: closed-form GME concurrence > 0
  double h_max = 0.0;
  double gme_concurrence = 0.0;
};

inline constexpr double kViolationThreshold = 1e-6;

CorrelationFlags gmnl_gms_flags(const XStateParams& params, int restarts,
                                std::uint64_t seed);

// Exploration mode beyond the shared-angle family: six independent angles
// (two per party).
struct FreeAnglesResult {
  double h_max = 0.0;
  std::array<double, 6> angles{};
  bool converged = false;
};

FreeAnglesResult maximize_hardy_free(const XStateParams& params, int restarts,
                                     std::uint64_t seed);

}  // namespace gmec
