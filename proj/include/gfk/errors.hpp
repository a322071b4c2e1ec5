#pragma once

#include <stdexcept>
#include <string>

namespace gfk {

/// Base class of every error raised by the library. The CLI maps the kind
/// onto its exit status.
class Error : public std::runtime_error {
 public:
  enum class Kind { Domain, Parse };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Mathematical domain errors. Each names the invariant that failed.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(Kind::Domain, what) {}
};

class DimensionError : public DomainError {
 public:
  explicit DimensionError(const std::string& what) : DomainError("dimension error: " + what) {}
};

class RegionError : public DomainError {
 public:
  explicit RegionError(const std::string& what) : DomainError("region error: " + what) {}
};

class FreenessError : public DomainError {
 public:
  explicit FreenessError(const std::string& what) : DomainError("freeness error: " + what) {}
};

class CapabilityError : public DomainError {
 public:
  explicit CapabilityError(const std::string& what) : DomainError("capability error: " + what) {}
};

class ProjectionError : public DomainError {
 public:
  explicit ProjectionError(const std::string& what) : DomainError("projection error: " + what) {}
};

class IntegrityError : public DomainError {
 public:
  explicit IntegrityError(const std::string& what) : DomainError("integrity error: " + what) {}
};

class DegreeError : public DomainError {
 public:
  explicit DegreeError(const std::string& what) : DomainError("degree error: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(Kind::Parse, "parse error: " + what) {}
};

}  // namespace gfk
