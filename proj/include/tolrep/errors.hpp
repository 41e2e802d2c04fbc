#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tolrep {

// Bad user-supplied data: files, CLI arguments, out-of-range elements.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller broke an inter-module precondition (e.g. kernel of an unverified map).
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A theorem-backed verification failed. Indicates a bug, not bad input.
struct contradiction_error : std::logic_error {
  using std::logic_error::logic_error;
};

// A configured size or search budget was exceeded.
struct resource_error : std::runtime_error {
  resource_error(const std::string& what, std::uint64_t computed)
      : std::runtime_error(what), computed_size(computed) {}
  std::uint64_t computed_size;
};

inline constexpr std::uint64_t kDefaultSizeBudget = 1'000'000;

}  // namespace tolrep
