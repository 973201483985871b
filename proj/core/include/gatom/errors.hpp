#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace gatom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

// g1 + g2 e^{i phi0} vanished: the bound-state channel coefficients are
// genuinely singular there, even though every physical kernel tends to zero.
class DecoupledPoint : public Error {
 public:
  using Error::Error;
};

// All kappa probe amplitudes fell below the resolvable floor.
class DegenerateProbe : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, std::complex<double> best, double err)
      : Error(what), best_estimate(best), achieved_error(err) {}
  std::complex<double> best_estimate;
  double achieved_error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = -1) : Error(what), line(line) {}
  int line;
};

// More than the tolerated fraction of grid points failed to converge.
class MaskedGridError : public Error {
 public:
  MaskedGridError(const std::string& what, std::size_t masked, std::size_t total)
      : Error(what), masked(masked), total(total) {}
  std::size_t masked;
  std::size_t total;
};

}  // namespace gatom
