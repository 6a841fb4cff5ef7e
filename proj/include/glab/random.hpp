#ifndef GLAB_RANDOM_HPP
#define GLAB_RANDOM_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace glab {

/// Seeded generator with hand-rolled distributions so that streams are
/// identical across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform over {0, ..., n-1}.
  int index(int n) { return n <= 1 ? 0 : static_cast<int>(eng_() % static_cast<std::uint64_t>(n)); }

  bool coin() { return (eng_() & 1) != 0; }

  /// Coefficient drawn uniformly from the complex unit square [0,1) x [0,1)i.
  std::complex<double> unit_square() { return {uniform(), uniform()}; }

  /// Re and Im uniform in [-1, 1).
  std::complex<double> symmetric_square() { return {uniform(-1.0, 1.0), uniform(-1.0, 1.0)}; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace glab

#endif  // GLAB_RANDOM_HPP
