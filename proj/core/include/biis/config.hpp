#pragma once

#include <cstdint>
#include <exception>
#include <string>

namespace biis {

/// Global resource limits.
///
/// Defaults come from the environment on first access (BIIS_MAX_FACETS,
/// BIIS_THREADS); command-line flags overwrite the fields afterwards, so
/// flags win over the environment.
struct Limits {
  /// Hard cap on the facet count any construction may produce.
  std::int64_t max_facets = 10'000'000;
  /// Upper bound on worker threads used by parallel construction.
  int threads = 1;
};

Limits& limits();

/// Thrown when a construction would exceed Limits::max_facets.
class ResourceCapExceeded : public std::exception {
 public:
  explicit ResourceCapExceeded(std::int64_t predicted, std::int64_t cap);
  const char* what() const noexcept override { return message_.c_str(); }
  std::int64_t predicted() const { return predicted_; }
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t predicted_;
  std::int64_t cap_;
  std::string message_;
};

}  // namespace biis
