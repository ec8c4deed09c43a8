#pragma once

#include <stdexcept>
#include <string>

namespace thermopurity {

struct NonPositiveParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnstablePotential : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveBeta : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotPositiveDefinite : std::domain_error {
  using std::domain_error::domain_error;
};

struct NonIntegrableDirection : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegenerateKernel : std::domain_error {
  using std::domain_error::domain_error;
};

struct OutOfRange : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnderResolvedGrid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonMonotoneBeta : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace thermopurity
