#include "fracnash/caputo.hpp"

#include <cmath>

#include "fracnash/errors.hpp"

namespace fracnash {

L1Weights l1_weights(double gamma, int steps, double tau) {
  if (!(gamma > 0.0) || gamma > 1.0)
    throw InvalidArgument("l1_weights: gamma must lie in (0, 1]");
  if (steps < 1) throw InvalidArgument("l1_weights: need at least one step");
  if (!(tau > 0.0)) throw InvalidArgument("l1_weights: step size must be positive");

  L1Weights w;
  w.gamma = gamma;
  w.beta = std::pow(tau, -gamma) / std::tgamma(2.0 - gamma);
  w.b.resize(steps);
  const double e = 1.0 - gamma;
  w.b[0] = 1.0;  // (1)^e - (0)^e; avoids pow(0, 0) = 1 at gamma = 1
  for (int j = 1; j < steps; ++j)
    w.b[j] = std::pow(double(j + 1), e) - std::pow(double(j), e);
  return w;
}

}  // namespace fracnash
