#ifndef UQ_RNG_HPP
#define UQ_RNG_HPP

#include <cstdint>

#include "uq/rational.hpp"

namespace uq {

// Small splitmix64-based generator. Hand-rolled so that seeded runs are
// byte-identical across standard libraries (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    int uniform_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Exact Bernoulli with rational probability in [0, 1].
    bool bernoulli(const Rational& p) {
        if (p.num() <= 0) return false;
        if (p >= Rational(1)) return true;
        return below(static_cast<std::uint64_t>(p.den())) <
               static_cast<std::uint64_t>(p.num());
    }

private:
    std::uint64_t state_;
};

}  // namespace uq

#endif
