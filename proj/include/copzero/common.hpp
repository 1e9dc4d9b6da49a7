#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "copzero/rational.hpp"

namespace copzero {

enum class Mode { exact, floating };
enum class Exec { serial, parallel };

/// Thresholds for the float path. Ignored entirely in exact mode.
struct Tolerances {
  double rank_eps = 1e-9;        // relative singular-value / pivot cutoff
  double zero_eps = 1e-10;       // scalar-is-zero cutoff
  double positivity_eps = 1e-10; // strict-positivity cutoff

  void validate() const {
    if (rank_eps <= 0 || zero_eps <= 0 || positivity_eps <= 0)
      throw std::invalid_argument("tolerances must be strictly positive");
  }
};

struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int row = -1;  // 1-based, -1 when not applicable
  int col = -1;
  ParseError(const std::string& msg, int r = -1, int c = -1)
      : std::runtime_error(msg), row(r), col(c) {}
};

// Mode-dispatched predicates. `scale` folds the matrix magnitude into the
// absolute float tests; exact tests ignore both knobs.
inline bool scalar_is_zero(const Rational& x, const Tolerances&, double = 1.0) {
  return x.sign() == 0;
}
inline bool scalar_is_zero(double x, const Tolerances& tol, double scale = 1.0) {
  return std::fabs(x) < tol.zero_eps * scale;
}
inline bool scalar_is_positive(const Rational& x, const Tolerances&, double = 1.0) {
  return x.sign() > 0;
}
inline bool scalar_is_positive(double x, const Tolerances& tol, double scale = 1.0) {
  return x > tol.positivity_eps * scale;
}
inline bool scalar_is_nonnegative(const Rational& x, const Tolerances&) {
  return x.sign() >= 0;
}
inline bool scalar_is_nonnegative(double x, const Tolerances& tol) {
  return x > -tol.zero_eps;
}

template <typename S>
inline constexpr Mode mode_of = Mode::exact;
template <>
inline constexpr Mode mode_of<double> = Mode::floating;

inline const char* mode_name(Mode m) {
  return m == Mode::exact ? "exact" : "float";
}

inline double scalar_to_double(const Rational& x) { return x.to_double(); }
inline double scalar_to_double(double x) { return x; }

inline std::string scalar_str(const Rational& x) { return x.str(); }
std::string scalar_str(double x);

}  // namespace copzero
