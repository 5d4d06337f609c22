#pragma once

#include <stdexcept>
#include <string>

namespace hma {

/// A field was queried for derivatives at a point outside its declared domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A derivative query on a field that only defines values.
class NotSmoothError : public std::logic_error {
 public:
  explicit NotSmoothError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hma
