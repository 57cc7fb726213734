#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "tusi/rational.hpp"

namespace tusi::test {

// TUSI_SEED fixes every randomized sample in the suite.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("TUSI_SEED")) {
        return std::strtoull(s, nullptr, 10);
    }
    return 0x5eed0a17;
}

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t salt = 0) : gen(seed() ^ salt) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    // n/m with 1 <= n, m <= top.
    Rational rational(long top = 1000) {
        return Rational(integer(1, top), integer(1, top));
    }

    // Strictly inside (0, 1).
    Rational unit() { return Rational(integer(1, 1 << 20), (1 << 20) + 1); }
};

} // namespace tusi::test
