#pragma once

#include <stdexcept>
#include <string>

namespace bosonhopf {

// A parameter point lies outside the domain on which the algebra or map is
// stated. The runner reports these as skips, citing the proviso.
class ProvisoError : public std::domain_error {
public:
  ProvisoError(std::string proviso, const std::string& what)
      : std::domain_error(what), proviso_(std::move(proviso)) {}

  const std::string& proviso() const { return proviso_; }

private:
  std::string proviso_;
};

}  // namespace bosonhopf
