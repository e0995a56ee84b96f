#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace portal {

// SplitMix64 finalizer; used to derive stream seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// mt19937_64 wrapper with hand-rolled sampling helpers so that sequences do
// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return (gen_() >> 11) * (1.0 / 9007199254740992.0); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform over {0, ..., n-1}.
  int uniform_int(int n) {
    if (n <= 0) throw std::invalid_argument("uniform_int: n must be positive");
    int v = static_cast<int>(uniform() * n);
    return v < n ? v : n - 1;
  }

  // Categorical draw from nonnegative weights (need not be normalized).
  int sample_weights(const double* w, int n) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += w[i];
    if (!(total > 0.0)) throw std::invalid_argument("sample_weights: total weight must be positive");
    double u = uniform() * total;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      acc += w[i];
      if (u < acc) return i;
    }
    return n - 1;
  }

  int sample_weights(const std::vector<double>& w) {
    return sample_weights(w.data(), static_cast<int>(w.size()));
  }

  // Exponential(1); building block for Dirichlet draws.
  double exponential() {
    double u = uniform();
    return -std::log(1.0 - u);
  }

  // Flat Dirichlet over n coordinates.
  std::vector<double> dirichlet(int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    double total = 0.0;
    for (auto& v : x) {
      v = exponential();
      total += v;
    }
    for (auto& v : x) v /= total;
    return x;
  }

  std::uint64_t next_raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

// One master seed fanned out into independent named streams. Adding a new
// consumer (a new name) leaves existing streams untouched.
class SeedSplitter {
 public:
  explicit SeedSplitter(std::uint64_t master) : master_(master) {}

  std::uint64_t master() const { return master_; }

  Rng stream(std::string_view name, std::uint64_t index = 0) const {
    std::uint64_t tag = fnv1a64(name) + 0x9e3779b97f4a7c15ull * (index + 1);
    return Rng(splitmix64(master_ ^ splitmix64(tag)));
  }

 private:
  std::uint64_t master_;
};

}  // namespace portal
