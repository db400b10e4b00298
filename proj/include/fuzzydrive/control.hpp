#pragma once

#include <cstdint>

#include "fuzzydrive/fuzzy.hpp"

namespace fuzzydrive {

/// Planar robot state. theta is a heading in degrees, kept as an
/// unwrapped accumulator; wrap on demand with wrap_error.
struct Pose {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double theta = 0.0;  // deg
};

/// Geometry of the differential-drive robot.
struct RobotParams {
  double b = 0.094;         ///< axle (back-shaft) length, m
  double c = 0.028;         ///< wheel radius, m
  double per = 0.179;       ///< wheel perimeter, m
  int ticks_per_rev = 360;  ///< encoder counts per wheel revolution

  /// Throws std::invalid_argument on non-positive dimensions.
  void validate() const;

  /// True when per agrees with 2*pi*c within the given relative
  /// tolerance. A mismatch is a warning condition, not an error.
  bool perimeter_consistent(double rel_tol = 0.05) const;
};

/// PD loop memory: the previous wrapped error and a step counter.
struct ControllerState {
  double prev_error = 0.0;  // deg
  long step_index = 0;
};

/// Dead-reckoning state: the pose estimate plus the last raw tick
/// readings (cumulative wheel rotation in degrees).
struct OdometryState {
  Pose pose;
  double prev_ticks_left = 0.0;
  double prev_ticks_right = 0.0;
};

/// Normalized motor powers, each in [-100, 100].
struct MotorCommand {
  double power_left = 0.0;
  double power_right = 0.0;
};

enum class HeadingSource { Odometry, Compass };

/// Configuration of one waypoint-tracking control loop.
struct TrackingConfig {
  FuzzyPdConfig fuzzy;
  double Kp = 0.25;             ///< linear-velocity gain, 1/s
  double waypoint_x = 0.0;      ///< m
  double waypoint_y = 0.0;      ///< m
  double goal_tolerance = 0.02; ///< m
  HeadingSource heading_source = HeadingSource::Odometry;

  void validate() const;
};

/// Signed angular error theta_ref - theta_actual reduced into
/// (-180, 180]; the boundary maps to +180.
double wrap_error(double theta_ref, double theta_actual);

/// One step of the heading-regulation loop, plus the intermediate
/// quantities a trace record wants.
struct OrientationStepResult {
  MotorCommand cmd;
  ControllerState next;
  double error = 0.0;  // deg, wrapped
  double rate = 0.0;   // deg per step
  double u = 0.0;      // controller output after the output gain
  Region region;
};

/// Heading regulation: e = wrap_error(theta_ref, theta_meas),
/// r = e - prev_error, u = fuzzy_pd(e, r), powers = (-u, +u) clamped to
/// [-100, 100]. Positive u commands an anticlockwise spin (the v = 0
/// specialization of the tracking wheel mixing), so e = 0 with zero rate
/// is a fixed point and negating the error negates the command.
OrientationStepResult orientation_step(const ControllerState& state,
                                       double theta_ref, double theta_meas,
                                       const FuzzyPdConfig& cfg);

/// Midpoint dead-reckoning update from cumulative encoder readings:
///   dist_i  = (ticks_i - prev_ticks_i) * per / 360
///   d_theta = (dist_r - dist_l) / b              [rad]
///   d_x     = dist_ave * cos(theta + d_theta/2)
///   d_y     = dist_ave * sin(theta + d_theta/2)
/// The pose heading accumulates d_theta in degrees, unwrapped.
OdometryState odometry_update(const OdometryState& state, double ticks_left,
                              double ticks_right, const RobotParams& params);

struct GoalGeometry {
  double theta_ref = 0.0;  // deg, four-quadrant bearing to the waypoint
  double R = 0.0;          // m, Euclidean distance to the waypoint
};

/// Bearing and distance from a pose to a waypoint. At R = 0 the bearing
/// is degenerate and the current heading is returned.
GoalGeometry goal_geometry(const Pose& pose, double x_ref, double y_ref);

/// Odd soft saturation sign(w) * (1 - exp(-0.8 |w|)), range (-1, 1).
double soft_saturate(double w);

/// Commanded wheel angular velocities from linear velocity v (m/s) and
/// heading-controller output u (deg/s):
///   w_l = (v - u_rad * b/2) / c,  w_r = (v + u_rad * b/2) / c.
struct WheelSpeeds {
  double w_left = 0.0;   // rad/s
  double w_right = 0.0;  // rad/s
};
WheelSpeeds wheel_speeds(double v, double u_deg_per_s,
                         const RobotParams& params);

struct TrackingStepResult {
  MotorCommand cmd;
  ControllerState next;
  bool reached = false;
  double theta_ref = 0.0;  // deg
  double R = 0.0;          // m
  double error = 0.0;      // deg
  double rate = 0.0;       // deg per step
  double u = 0.0;          // deg/s, after output gain and [-L, L] clamp
  Region region;
};

/// One step of the waypoint-tracking loop. If R < goal_tolerance the
/// command is zero and reached is set; otherwise the fuzzy heading
/// controller output (clamped to [-L, L]) is mixed with v = Kp * R into
/// wheel speeds, soft-saturated and scaled to [-100, 100] motor powers.
TrackingStepResult tracking_step(const ControllerState& ctrl,
                                 const OdometryState& odo,
                                 const TrackingConfig& cfg,
                                 const RobotParams& params,
                                 double heading_meas);

}  // namespace fuzzydrive
