#pragma once

#include <stdexcept>
#include <string>

namespace hsr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (d, n) outside 1 <= d < n.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Operation needs 2d <= n.
class ConjectureDomain : public Error {
 public:
  using Error::Error;
};

class InvalidTermIndex : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// |p(z)| vanished in scaled arithmetic, so p'/p is undefined.
class EvaluationAtRoot : public Error {
 public:
  using Error::Error;
};

/// phi was requested at a zero of the s = 0 term.
class DivisionByZeroTerm : public Error {
 public:
  using Error::Error;
};

/// A bound check was asked to run outside its hypothesis.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class DomainViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hsr
