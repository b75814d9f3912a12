#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace subcol {

using Vertex = int;

// Sentinel for unbounded distances, girths and reach parameters.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

enum class Errc {
  invalid_argument,
  parse_error,
  budget_exceeded,
  not_a_path,
  invalid_decomposition,
  not_a_triangulation,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// mt19937_64 plus an unbiased bounded draw. std::uniform_int_distribution is
// implementation-defined, so bounded draws use rejection sampling to keep
// generated instances byte-identical across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw Error(Errc::invalid_argument, "Rng::below: bound must be positive");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return x % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

private:
  std::mt19937_64 eng_;
};

}  // namespace subcol
