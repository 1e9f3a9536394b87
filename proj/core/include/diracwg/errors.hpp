#pragma once

#include <stdexcept>
#include <string>

namespace diracwg {

struct NonPositiveWidth : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WidthTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// 1 - eps*t*kappa dropped below the admissible margin: the tube map is no
// longer a diffeomorphism at the evaluation point.
struct DegenerateJacobian : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedProfile : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPositiveCertificate : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroField : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndefiniteMass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal defect: a root bracket that the theory guarantees to contain a
// sign change does not.
struct NoSignChange : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace diracwg
