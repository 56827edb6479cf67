#include "biis/config.hpp"

#include <cstdlib>
#include <string>

namespace biis {

namespace {

std::int64_t env_int64(const char* name, std::int64_t fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  char* end = nullptr;
  const long long parsed = std::strtoll(value, &end, 10);
  if (end == value || *end != '\0' || parsed <= 0) return fallback;
  return parsed;
}

Limits make_default_limits() {
  Limits l;
  l.max_facets = env_int64("BIIS_MAX_FACETS", l.max_facets);
  l.threads = static_cast<int>(env_int64("BIIS_THREADS", l.threads));
  return l;
}

}  // namespace

Limits& limits() {
  static Limits instance = make_default_limits();
  return instance;
}

ResourceCapExceeded::ResourceCapExceeded(std::int64_t predicted,
                                         std::int64_t cap)
    : predicted_(predicted),
      cap_(cap),
      message_("facet cap exceeded: construction would produce " +
               std::to_string(predicted) + " facets, cap is " +
               std::to_string(cap)) {}

}  // namespace biis
