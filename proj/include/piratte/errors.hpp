#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace piratte {

// Base class for every error thrown by this library. Callers that want a
// single catch site can catch this; everything below refines it.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Group/scalar operands belong to different bilinear contexts.
class ContextMismatch : public Error {
 public:
  explicit ContextMismatch(const std::string& what) : Error(what) {}
};

// Attribute name is empty or not normalizable.
class InvalidAttribute : public Error {
 public:
  explicit InvalidAttribute(const std::string& what) : Error(what) {}
};

// Polynomial degree outside the accepted range.
class InvalidDegree : public Error {
 public:
  explicit InvalidDegree(const std::string& what) : Error(what) {}
};

// Interpolation input contains a repeated x-coordinate.
class DuplicatePoint : public Error {
 public:
  explicit DuplicatePoint(const std::string& what) : Error(what) {}
};

// Interpolation target coincides with an input x-coordinate.
class DegenerateTarget : public Error {
 public:
  explicit DegenerateTarget(const std::string& what) : Error(what) {}
};

// Secret reconstruction given inconsistent or insufficient shares.
class ReconstructionFailure : public Error {
 public:
  explicit ReconstructionFailure(const std::string& what) : Error(what) {}
};

// Policy text could not be parsed; `position` is a 0-based byte offset into
// the input at which the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Threshold gate with k < 1 or k > number of children.
class ThresholdError : public Error {
 public:
  explicit ThresholdError(const std::string& what) : Error(what) {}
};

// Key generation request with an empty or malformed attribute set.
class InvalidAttributeSet : public Error {
 public:
  explicit InvalidAttributeSet(const std::string& what) : Error(what) {}
};

// Delegation request for attributes the source key does not hold.
class NotASubset : public Error {
 public:
  explicit NotASubset(const std::string& what) : Error(what) {}
};

// More users (or users-per-attribute) revoked than the proxy polynomial
// degree supports.
class RevocationCapacityExceeded : public Error {
 public:
  explicit RevocationCapacityExceeded(const std::string& what) : Error(what) {}
};

// Named user was never issued a key by this master key.
class UnknownUser : public Error {
 public:
  explicit UnknownUser(const std::string& what) : Error(what) {}
};

// Conversion requested by (or on behalf of) a currently revoked identity.
class RequesterRevoked : public Error {
 public:
  explicit RequesterRevoked(const std::string& what) : Error(what) {}
};

// Conversion request carrying no leaves.
class EmptyRequest : public Error {
 public:
  explicit EmptyRequest(const std::string& what) : Error(what) {}
};

// Conversion bundle does not cover the leaves a decryption needs, or was
// produced for a different ciphertext or identity.
class BundleMismatch : public Error {
 public:
  explicit BundleMismatch(const std::string& what) : Error(what) {}
};

// Delegation with a zero or otherwise unusable conversion coefficient.
class InvalidCoefficient : public Error {
 public:
  explicit InvalidCoefficient(const std::string& what) : Error(what) {}
};

// Wire bytes that do not parse as the requested component.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what) : Error(what) {}
};

// Wire bytes that parse but fail a structural or group-membership check.
class InvalidComponent : public Error {
 public:
  explicit InvalidComponent(const std::string& what) : Error(what) {}
};

// Authenticated decryption of a hybrid container failed: wrong key material
// (e.g. a revoked requester's garbage group element) or tampered payload.
class DecryptionFailed : public Error {
 public:
  explicit DecryptionFailed(const std::string& what) : Error(what) {}
};

// Internal decryption inconsistency that is not a policy mismatch, e.g. a
// malformed component mix that slipped past structural checks.
class DecryptionError : public Error {
 public:
  explicit DecryptionError(const std::string& what) : Error(what) {}
};

// Policy is well formed but the presented attribute set does not satisfy it.
// Used by high-level wrappers (file/CLI paths); the core decrypt APIs report
// this case as an empty optional rather than by throwing.
class PolicyNotSatisfied : public Error {
 public:
  explicit PolicyNotSatisfied(const std::string& what) : Error(what) {}
};

}  // namespace piratte
