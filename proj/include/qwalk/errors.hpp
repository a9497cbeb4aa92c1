#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// A step would push amplitude past the allocated lattice window.
/// Windows are sized up front; hitting this means the horizon given at
/// construction was exceeded, never a silent truncation.
class WindowOverflowError : public std::runtime_error {
 public:
  explicit WindowOverflowError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Total norm drifted outside the guard band during evolution.
class NormDriftError : public std::runtime_error {
 public:
  NormDriftError(const std::string& what, double norm)
      : std::runtime_error(what), norm_(norm) {}
  double norm() const { return norm_; }

 private:
  double norm_;
};

/// side_ratio over a half-line with zero probability mass.
class UndefinedRatioError : public std::runtime_error {
 public:
  explicit UndefinedRatioError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qwalk
