#include "escsim/params.hpp"

#include <cmath>

#include "escsim/errors.hpp"

namespace escsim {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

double EscParams::excitation_period() const { return kTwoPi / omega; }

double EscParams::rotation_period() const { return kTwoPi / Omega; }

void EscParams::validate() const {
  if (!(omega > 0.0)) throw ConfigError("omega must be positive");
  if (!(c > 0.0)) throw ConfigError("c must be positive");
  if (!(Omega > 0.0)) throw ConfigError("Omega must be positive");
  if (!(omega > Omega)) throw ConfigError("omega must be greater than Omega");
  if (!(lambda > 0.0)) throw ConfigError("lambda must be positive");
  if (!(lambda < 1.0)) throw ConfigError("lambda must be less than 1");
  if (!(h >= 0.0)) throw ConfigError("h must be nonnegative");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(dt_meas > 0.0)) throw ConfigError("dt_meas must be positive");
  if (n_substeps < 1) throw ConfigError("n_substeps must be at least 1");
  if (!(q_scale >= 0.0)) throw ConfigError("q_scale must be nonnegative");
  if (!(r_scale > 0.0)) throw ConfigError("r_scale must be positive");
  if (!(p0 >= 0.0)) throw ConfigError("p0 must be nonnegative");
  if (!std::isfinite(a0)) throw ConfigError("a0 must be finite");
}

}  // namespace escsim
