#include "escsim/field.hpp"

#include <cmath>

#include "escsim/errors.hpp"

namespace escsim {

void SourceSchedule::validate() const {
  if (waypoints.empty()) {
    throw ConfigError("schedule must contain at least one waypoint");
  }
  if (waypoints.front().t != 0.0) {
    throw ConfigError("schedule must start at t = 0");
  }
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    if (!(waypoints[i].t > waypoints[i - 1].t)) {
      throw ConfigError("schedule times must be strictly increasing");
    }
  }
  for (const auto& wp : waypoints) {
    if (!wp.position.allFinite() || !std::isfinite(wp.t)) {
      throw ConfigError("schedule waypoints must be finite");
    }
  }
}

Eigen::Vector2d source_position(const SourceSchedule& schedule, double t) {
  if (!(t >= 0.0)) {
    throw InvalidInputError("source_position: t must be >= 0");
  }
  schedule.validate();
  const Eigen::Vector2d* current = &schedule.waypoints.front().position;
  for (const auto& wp : schedule.waypoints) {
    if (wp.t <= t) {
      current = &wp.position;
    } else {
      break;
    }
  }
  return *current;
}

Eigen::Vector2d FieldModel::center_at(double t) const {
  if (schedule) return source_position(*schedule, t);
  return center;
}

void FieldModel::validate() const {
  switch (kind) {
    case FieldKind::kQuadratic:
      if (!(curvature.x() > 0.0) || !(curvature.y() > 0.0)) {
        throw ConfigError("field.curvature entries must be positive");
      }
      break;
    case FieldKind::kGaussian:
      if (!(width.x() > 0.0) || !(width.y() > 0.0)) {
        throw ConfigError("field.width entries must be positive");
      }
      if (!(peak > 0.0)) {
        throw ConfigError("field.peak must be positive for a gaussian field");
      }
      break;
    case FieldKind::kCustomPolynomial:
      if (terms.empty()) {
        throw ConfigError("field.terms must not be empty for a polynomial field");
      }
      break;
  }
  if (!center.allFinite()) {
    throw ConfigError("field.center must be finite");
  }
  if (schedule) schedule->validate();
}

namespace {

double poly_eval(const std::vector<PolyTerm>& terms, double dx, double dy) {
  double sum = 0.0;
  for (const auto& term : terms) {
    sum += term.coef * std::pow(dx, term.px) * std::pow(dy, term.py);
  }
  return sum;
}

}  // namespace

double sample_field(const FieldModel& field, const Eigen::Vector2d& pos, double t) {
  if (!pos.allFinite()) {
    throw InvalidInputError("sample_field: pos must be finite");
  }
  const Eigen::Vector2d d = pos - field.center_at(t);
  switch (field.kind) {
    case FieldKind::kQuadratic:
      return field.peak - field.curvature.x() * d.x() * d.x() -
             field.curvature.y() * d.y() * d.y();
    case FieldKind::kGaussian: {
      const double ex = d.x() * d.x() / (2.0 * field.width.x() * field.width.x());
      const double ey = d.y() * d.y() / (2.0 * field.width.y() * field.width.y());
      return field.peak * std::exp(-(ex + ey));
    }
    case FieldKind::kCustomPolynomial:
      return poly_eval(field.terms, d.x(), d.y());
  }
  throw InvalidInputError("sample_field: unknown field kind");
}

Eigen::Vector2d oracle_gradient(const FieldModel& field, const Eigen::Vector2d& pos, double t) {
  if (!pos.allFinite()) {
    throw InvalidInputError("oracle_gradient: pos must be finite");
  }
  const Eigen::Vector2d d = pos - field.center_at(t);
  switch (field.kind) {
    case FieldKind::kQuadratic:
      return {-2.0 * field.curvature.x() * d.x(), -2.0 * field.curvature.y() * d.y()};
    case FieldKind::kGaussian: {
      const double value = sample_field(field, pos, t);
      return {-value * d.x() / (field.width.x() * field.width.x()),
              -value * d.y() / (field.width.y() * field.width.y())};
    }
    case FieldKind::kCustomPolynomial:
      throw UnsupportedOracleError(
          "oracle_gradient: custom polynomial fields have no analytic oracle");
  }
  throw InvalidInputError("oracle_gradient: unknown field kind");
}

}  // namespace escsim
