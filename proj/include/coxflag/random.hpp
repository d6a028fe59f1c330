#ifndef COXFLAG_RANDOM_HPP_
#define COXFLAG_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace coxflag {

  constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  // Seeded generator with reproducible substreams. Bounded draws use plain
  // modular reduction so results do not depend on the standard library.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _seed(seed), _engine(seed) {}

    std::uint64_t seed() const noexcept {
      return _seed;
    }

    std::mt19937_64& engine() noexcept {
      return _engine;
    }

    std::uint64_t next() {
      return _engine();
    }

    std::size_t below(std::size_t n) {
      return n == 0 ? 0 : static_cast<std::size_t>(_engine() % n);
    }

    bool coin() {
      return (_engine() & 1U) != 0;
    }

    Rng split(std::uint64_t stream) const {
      return Rng(splitmix64(_seed ^ splitmix64(stream + 1)));
    }

   private:
    std::uint64_t   _seed;
    std::mt19937_64 _engine;
  };

}  // namespace coxflag

#endif  // COXFLAG_RANDOM_HPP_
