#ifndef MAJORKIT_RNG_HPP
#define MAJORKIT_RNG_HPP

#include <cstdint>

namespace majorkit {

/// Deterministic splittable PRNG (splitmix64). All randomized operations in
/// the library take a seed and derive their stream from it, so results are
/// reproducible across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Uniform integer in [lo, hi] inclusive.
    long long between(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Independent child stream; distinct tags give distinct streams.
    Rng split(std::uint64_t tag) {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 0x632be59bd9b4e019ULL)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace majorkit

#endif
