#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqdist {

// Why a computation rejected its input.
enum class ErrorKind {
  length_mismatch,
  element_not_shared,
  count_mismatch,
  ties_not_allowed,
  penalty_out_of_range,
  size_limit_exceeded,
  undefined_for_length,
};

// Base type for all domain errors raised by this library. Carries a kind so
// callers can branch without string matching.
class DistanceError : public std::invalid_argument {
public:
  DistanceError(ErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// The two inputs have different lengths.
class LengthMismatchError final : public DistanceError {
public:
  LengthMismatchError(std::size_t len1, std::size_t len2)
      : DistanceError(ErrorKind::length_mismatch,
                      "unequal length sequences: " + std::to_string(len1) +
                          " vs " + std::to_string(len2)),
        len1_(len1),
        len2_(len2) {}

  std::size_t len1() const noexcept { return len1_; }
  std::size_t len2() const noexcept { return len2_; }

private:
  std::size_t len1_;
  std::size_t len2_;
};

// The second sequence contains an element the first does not.
class ElementNotSharedError final : public DistanceError {
public:
  explicit ElementNotSharedError(std::string element)
      : DistanceError(ErrorKind::element_not_shared,
                      "sequences contain different elements: \"" + element +
                          "\" does not appear in the first sequence"),
        element_(std::move(element)) {}

  const std::string& element() const noexcept { return element_; }

private:
  std::string element_;
};

// Both sequences contain the element, but a different number of times.
class CountMismatchError final : public DistanceError {
public:
  CountMismatchError(std::string element, std::uint64_t count1,
                     std::uint64_t count2)
      : DistanceError(ErrorKind::count_mismatch,
                      "sequences contain different number of copies of \"" +
                          element + "\": " + std::to_string(count1) + " vs " +
                          std::to_string(count2)),
        element_(std::move(element)),
        count1_(count1),
        count2_(count2) {}

  const std::string& element() const noexcept { return element_; }
  std::uint64_t count1() const noexcept { return count1_; }
  std::uint64_t count2() const noexcept { return count2_; }

private:
  std::string element_;
  std::uint64_t count1_;
  std::uint64_t count2_;
};

// A ranking contains tied ranks where a total ranking is required.
class TiesNotAllowedError final : public DistanceError {
public:
  TiesNotAllowedError()
      : DistanceError(ErrorKind::ties_not_allowed,
                      "ranking contains tied ranks; a total ranking "
                      "(distinct ranks) is required") {}
};

// Penalty parameter outside [0, 1].
class PenaltyOutOfRangeError final : public DistanceError {
public:
  explicit PenaltyOutOfRangeError(double p)
      : DistanceError(ErrorKind::penalty_out_of_range,
                      "penalty parameter " + std::to_string(p) +
                          " is outside [0, 1]"),
        p_(p) {}

  double penalty() const noexcept { return p_; }

private:
  double p_;
};

// Input exceeds a hard size guard (exhaustive reference paths only).
class SizeLimitExceededError final : public DistanceError {
public:
  SizeLimitExceededError(std::size_t n, std::size_t limit)
      : DistanceError(ErrorKind::size_limit_exceeded,
                      "sequence length " + std::to_string(n) +
                          " exceeds the limit of " + std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  std::size_t length() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

private:
  std::size_t n_;
  std::size_t limit_;
};

}  // namespace seqdist
