// F-shape derivation from discrete processing-time distributions: the level-l
// processing time is the c_l-quantile of the task's distribution.
#pragma once

#include "mcs/core.hpp"

namespace mcs {

// Discrete distribution over integer processing times. support strictly
// increasing with values >= 1; masses positive and summing to 1 within 1e-9.
class DiscreteDistribution {
  public:
    DiscreteDistribution(std::vector<Time> support, std::vector<double> mass);

    const std::vector<Time>& support() const { return support_; }
    const std::vector<double>& mass() const { return mass_; }

  private:
    std::vector<Time> support_;
    std::vector<double> mass_;
};

// Confidence levels (c_1, ..., c_L): strictly increasing, each in (0, 1].
class ConfidenceLevels {
  public:
    explicit ConfidenceLevels(std::vector<double> levels);

    const std::vector<double>& levels() const { return levels_; }
    std::size_t count() const { return levels_.size(); }

  private:
    std::vector<double> levels_;
};

// Smallest support value t with CDF(t) >= c, for 0 < c <= 1. Comparisons use
// a 1e-12 slack so accumulated rounding in the CDF cannot push a quantile one
// support point too high.
Time quantile(const DiscreteDistribution& dist, double c);

// proc = (F^-1(c_1), ..., F^-1(c_X)) with consecutive duplicate quantiles
// collapsed; the duplicate collapse reduces the effective criticality (the
// higher level is already met at the lower one). All quantiles identical
// degenerates to a criticality-1 task; that is a valid result, not an error.
FShape derive_fshape(const DiscreteDistribution& dist, const ConfidenceLevels& levels,
                     Level criticality, TaskId id = 0);

}  // namespace mcs
