#pragma once

#include <stdexcept>
#include <string>

namespace ainfty {

struct ParseError : std::runtime_error {
  int line = -1;
  explicit ParseError(const std::string& msg, int line_no = -1)
      : std::runtime_error(line_no >= 0 ? "parse error at line " + std::to_string(line_no) + ": " + msg
                                        : "parse error: " + msg),
        line(line_no) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A simplex is present without one of its faces.
struct NotClosedError : ValidationError {
  std::string simplex, missing_face;
  NotClosedError(std::string s, std::string f)
      : ValidationError("complex not closed: " + s + " present without face " + f),
        simplex(std::move(s)),
        missing_face(std::move(f)) {}
};

// A face enters the filtration strictly later than a coface.
struct NonMonotoneError : ValidationError {
  std::string simplex, face;
  NonMonotoneError(std::string s, std::string f)
      : ValidationError("filtration not monotone: face " + f + " enters after " + s),
        simplex(std::move(s)),
        face(std::move(f)) {}
};

// Transferred structures beyond the pairing stage need the coefficient
// signs to vanish; only characteristic 2 is supported there.
struct UnsupportedSignsError : std::runtime_error {
  UnsupportedSignsError(int n_max, unsigned p)
      : std::runtime_error("n_max = " + std::to_string(n_max) + " requires field F2, got F" +
                           std::to_string(p)) {}
};

struct DisconnectedError : std::runtime_error {
  DisconnectedError() : std::runtime_error("positive-degree reduction applied globally to a disconnected complex") {}
};

// The structure fails the vanishing condition required for rank-n kernels
// to be functorial: some lower coproduct is nonzero.
struct TopNViolationError : std::runtime_error {
  std::string grade;
  int failing_m;
  int degree;
  std::string witness;
  TopNViolationError(std::string grade_, int m, int deg, std::string witness_)
      : std::runtime_error("top-" + std::to_string(m + 1) + " condition fails at grade " + grade_ +
                           ": delta_" + std::to_string(m) + " nonzero on degree " + std::to_string(deg) +
                           " class " + witness_),
        grade(std::move(grade_)),
        failing_m(m),
        degree(deg),
        witness(std::move(witness_)) {}
};

struct ContainmentFailureError : std::runtime_error {
  std::string grade;
  explicit ContainmentFailureError(std::string grade_)
      : std::runtime_error("kernel image escapes the next kernel at grade " + grade_),
        grade(std::move(grade_)) {}
};

struct CarrierMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySetError : std::runtime_error {
  EmptySetError() : std::runtime_error("distance undefined for an empty point set") {}
};

}  // namespace ainfty
