#pragma once

#include <cstdint>
#include <random>

namespace vulncover::rng {

// splitmix64 mixing step. Used to derive independent child seeds from a
// master seed so parallel and serial execution see identical streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
    return splitmix64(master ^ splitmix64(salt));
}

// Uniform double in [0, 1) built from the top 53 bits of the generator
// output. Avoids std::uniform_real_distribution, which is not guaranteed
// to produce the same values across standard library implementations.
inline double canonical(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace vulncover::rng
