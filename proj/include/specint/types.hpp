#pragma once

#include <stdexcept>

namespace specint {

// Interval [theta0 - epsilon, theta0 + epsilon] that carries substantial
// prior belief.  epsilon == 0 denotes the degenerate point case.
class SpecialInterval {
 public:
  SpecialInterval(double theta0, double epsilon)
      : theta0_(theta0), epsilon_(epsilon) {
    if (!(epsilon >= 0.0))
      throw std::invalid_argument("SpecialInterval: epsilon must be >= 0");
  }

  double theta0() const { return theta0_; }
  double epsilon() const { return epsilon_; }
  double lower() const { return theta0_ - epsilon_; }
  double upper() const { return theta0_ + epsilon_; }
  bool is_point() const { return epsilon_ == 0.0; }
  bool contains(double x) const { return x >= lower() && x <= upper(); }

 private:
  double theta0_;
  double epsilon_;
};

// Normal summary of the data: the estimate is distributed N(theta, se^2),
// and as a function of theta the likelihood is N(estimate, se^2).
class NormalLikelihood {
 public:
  NormalLikelihood(double estimate, double se)
      : estimate_(estimate), se_(se) {
    if (!(se > 0.0))
      throw std::invalid_argument("NormalLikelihood: se must be > 0");
  }

  double estimate() const { return estimate_; }
  double se() const { return se_; }

 private:
  double estimate_;
  double se_;
};

}  // namespace specint
