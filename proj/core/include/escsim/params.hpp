#pragma once

namespace escsim {

/// Controller, filter, and run-loop tuning constants.
///
/// `lambda` is the amplitude-adaptation gain per measurement interval; the
/// continuous-time rate used by the integrator is adaptation_rate() =
/// lambda / dt_meas. Configured values stay directly comparable to the
/// published tunings while the amplitude ODE remains a plain linear law.
struct EscParams {
  double omega = 0.0;     // excitation frequency [rad/s]
  double c = 0.0;         // velocity-law gain [-]
  double Omega = 0.0;     // fixed angular velocity [rad/s]
  double lambda = 0.0;    // amplitude adaptation gain per measurement interval [-]
  double h = 0.0;         // washout filter constant [1/s]
  double a0 = 0.0;        // initial excitation amplitude [-]
  double epsilon = 0.0;   // stop threshold on the amplitude [-]
  double dt_meas = 0.0;   // measurement interval [s]
  int n_substeps = 1;     // filter prediction substeps per interval
  double q_scale = 0.0;   // process covariance diagonal [-]
  double r_scale = 0.0;   // measurement noise variance [-]
  double p0 = 0.0;        // initial state covariance diagonal [-]

  /// Continuous-time amplitude adaptation rate [1/s].
  double adaptation_rate() const { return lambda / dt_meas; }

  /// Excitation period 2*pi/omega [s].
  double excitation_period() const;

  /// Rotation period 2*pi/Omega [s].
  double rotation_period() const;

  /// Throws ConfigError naming the key and violated constraint.
  void validate() const;
};

/// The four integrated plant states plus simulation time. The heading is
/// derived (theta = Omega * t), never stored.
struct PlantState {
  double x = 0.0;   // [m]
  double y = 0.0;   // [m]
  double e = 0.0;   // washout state [field units]
  double a = 0.0;   // excitation amplitude [-]
  double t = 0.0;   // [s]
  bool stopped = false;
};

}  // namespace escsim
