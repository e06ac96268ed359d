#pragma once

#include <stdexcept>

namespace momunc {

// A moment or bound requested outside its convergence region
// (lambda <= d/(d+l), or a momentum order b >= 2L+5).
struct DivergentMomentError : std::domain_error {
  using std::domain_error::domain_error;
};

// Hypergeometric series with no terminating upper parameter.
struct UnsupportedSeriesError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A lower Pochhammer factor hits a non-positive integer before termination.
struct SeriesPoleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// beta > alpha*: the entropy-power product is only trivially non-negative.
struct NoUncertaintyRelationError : std::domain_error {
  using std::domain_error::domain_error;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OptimizerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace momunc
