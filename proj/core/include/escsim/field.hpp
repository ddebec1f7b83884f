#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "escsim/rng.hpp"

namespace escsim {

/// Piecewise-constant source position: the source sits at a waypoint's
/// position from its time until the next waypoint's time (instantaneous
/// relocation, no interpolation).
struct SourceSchedule {
  struct Waypoint {
    double t = 0.0;                           // [s]
    Eigen::Vector2d position{0.0, 0.0};       // [m]
  };

  std::vector<Waypoint> waypoints;

  /// Throws ConfigError unless times are strictly increasing with the first
  /// waypoint at t = 0.
  void validate() const;
};

/// Position of the last waypoint with time <= t. Throws InvalidInputError
/// for t < 0.
Eigen::Vector2d source_position(const SourceSchedule& schedule, double t);

enum class FieldKind {
  kQuadratic,
  kGaussian,
  kCustomPolynomial,
};

/// One monomial of a custom field, evaluated in source-centered coordinates.
struct PolyTerm {
  double coef = 0.0;
  int px = 0;
  int py = 0;
};

/// Scalar field with a unique interior maximum at center(t).
///
/// quadratic:  f = peak - curvature.x()*dx^2 - curvature.y()*dy^2
/// gaussian:   f = peak * exp(-(dx^2/(2*width.x()^2) + dy^2/(2*width.y()^2)))
/// polynomial: f = sum coef * dx^px * dy^py   (no analytic oracle)
///
/// with (dx, dy) = pos - center(t).
struct FieldModel {
  FieldKind kind = FieldKind::kQuadratic;
  double peak = 0.0;
  Eigen::Vector2d center{0.0, 0.0};
  std::optional<SourceSchedule> schedule;
  Eigen::Vector2d curvature{0.0, 0.0};  // quadratic
  Eigen::Vector2d width{0.0, 0.0};      // gaussian
  std::vector<PolyTerm> terms;          // custom polynomial

  Eigen::Vector2d center_at(double t) const;
  void validate() const;
};

/// Field value at pos with the source at its scheduled position for time t.
/// Throws InvalidInputError for non-finite pos.
double sample_field(const FieldModel& field, const Eigen::Vector2d& pos, double t);

/// Exact analytic gradient; only quadratic and gaussian fields support it.
/// Throws UnsupportedOracleError otherwise. Test oracle only -- the
/// controller never reads it.
Eigen::Vector2d oracle_gradient(const FieldModel& field, const Eigen::Vector2d& pos, double t);

/// Additive Gaussian sensor noise. sigma = 0 reproduces sample_field
/// bit-exactly and consumes no draws.
struct NoiseModel {
  double sigma = 0.0;  // [field units]
  std::uint64_t seed = 0;
};

/// Per-run measurement stream; one instance per scenario run.
class NoiseStream {
 public:
  explicit NoiseStream(const NoiseModel& model, std::uint64_t run_seed = 0)
      : sigma_(model.sigma), gauss_(mix_seed(model.seed, run_seed)) {}

  double sigma() const { return sigma_; }

  /// sample_field plus one N(0, sigma^2) draw (none when sigma = 0).
  double measure(const FieldModel& field, const Eigen::Vector2d& pos, double t) {
    const double value = sample_field(field, pos, t);
    if (sigma_ == 0.0) return value;
    return value + sigma_ * gauss_.next();
  }

 private:
  double sigma_;
  GaussianStream gauss_;
};

}  // namespace escsim
