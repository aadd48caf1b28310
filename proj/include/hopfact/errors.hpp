#ifndef HOPFACT_ERRORS_HPP
#define HOPFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfact {

/// Malformed or inconsistent caller input (bad JSON, degree mismatch,
/// non-subgroup arguments). CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured bound was exceeded (coset enumeration cap, materialization
/// bound). CLI maps this to exit code 2.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal construction produced an object that fails its own
/// verification. Indicates a bug, not bad input.
class ConstructionError : public std::logic_error {
public:
  explicit ConstructionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hopfact

#endif
