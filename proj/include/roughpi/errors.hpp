#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roughpi {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (non-prime k, k = 1, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A RoughSet whose elements contradict its claimed rough index.
class IntegrityError : public Error {
public:
  using Error::Error;
};

/// Polynomial division that leaves a nonzero remainder.
class RemainderError : public Error {
public:
  using Error::Error;
};

/// Series coefficients are not +-1 exactly on the shifted k-rough numbers.
class NotRoughSupported : public Error {
public:
  NotRoughSupported(std::uint64_t exponent, const std::string& what)
      : Error(what + " (exponent " + std::to_string(exponent) + ")"), exponent_(exponent) {}

  std::uint64_t exponent() const noexcept { return exponent_; }

private:
  std::uint64_t exponent_;
};

/// Neither sign of the recursion preserves rough support.
class FamilyBreak : public Error {
public:
  using Error::Error;
};

/// Both signs of the recursion preserve rough support.
class AmbiguousSign : public Error {
public:
  using Error::Error;
};

/// Numerator is not palindromic of degree P-2, so the quarter-line identity fails.
class SymmetryError : public Error {
public:
  using Error::Error;
};

/// Denominator 1 - x^P puts poles on the real axis.
class NotResidueEligible : public Error {
public:
  using Error::Error;
};

/// Denominator vanishes on [0, 1] after all exact cancellation.
class PoleOnPath : public Error {
public:
  using Error::Error;
};

/// Requested accuracy not reached; carries the best estimate found.
class ToleranceError : public Error {
public:
  ToleranceError(const std::string& what, std::string best_estimate, std::string error_estimate)
      : Error(what), best_(std::move(best_estimate)), err_(std::move(error_estimate)) {}

  const std::string& best_estimate() const noexcept { return best_; }
  const std::string& error_estimate() const noexcept { return err_; }

private:
  std::string best_;
  std::string err_;
};

/// More than one closed form matches a value within tolerance.
class AmbiguousMatch : public Error {
public:
  AmbiguousMatch(std::vector<std::string> candidates)
      : Error(describe(candidates)), candidates_(std::move(candidates)) {}

  const std::vector<std::string>& candidates() const noexcept { return candidates_; }

private:
  static std::string describe(const std::vector<std::string>& c) {
    std::string s = "ambiguous closed form:";
    for (const auto& x : c) s += " " + x;
    return s;
  }
  std::vector<std::string> candidates_;
};

}  // namespace roughpi
