#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace vat {

/// SplitMix64 output function. Stateless: maps any 64-bit value to a
/// well-mixed 64-bit value. Used for seed derivation only.
std::uint64_t splitmix64(std::uint64_t x);

/// Combine two 64-bit values into a new sub-seed. Deterministic and
/// documented so ensembles are reproducible across runs and platforms:
///   mix_seed(a, b) = splitmix64(splitmix64(a) ^ (b + 0x9e3779b97f4a7c15))
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Derive the seed for one unit of work from the master seed.
/// Fan-out order: tag (FNV-1a of the experiment tag), trial, channel, observer.
std::uint64_t fan_out_seed(std::uint64_t master, std::string_view tag,
                           std::uint64_t trial = 0, std::uint64_t channel = 0,
                           std::uint64_t observer = 0);

/// xoshiro256++ generator. Bit-stable across platforms and standard
/// libraries, unlike std:: distributions; every stochastic result in this
/// project is a pure function of the 64-bit seed.
class Xoshiro256PlusPlus {
public:
    explicit Xoshiro256PlusPlus(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01();

private:
    std::array<std::uint64_t, 4> state_;
};

/// Standard normal deviates via Box-Muller on xoshiro256++.
/// Consumes exactly two uniforms per pair; the stream layout is part of
/// the determinism contract.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double next();

private:
    Xoshiro256PlusPlus rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace vat
