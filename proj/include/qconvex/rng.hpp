#pragma once

#include <cstdint>

namespace qconvex {

// splitmix64.  Hand-rolled instead of <random> distributions so that seeded
// runs produce identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, n); the modulo bias is irrelevant at the sizes used.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // Inclusive range.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace qconvex
