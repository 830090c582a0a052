#pragma once

#include <cstdint>

#include "skinnyqr/types.hpp"

namespace skinnyqr {

enum class SpectrumDecay { geometric, linear };

//! Controls for the test-matrix generator: target 2-norm condition number
//! and singular value decay, under a 64-bit seed.
struct SpectrumSpec {
  double kappa = 1.0;
  SpectrumDecay decay = SpectrumDecay::geometric;
  std::uint64_t seed = 0;
};

//! Counter-based random stream: the SplitMix64 finalizer applied to
//! seed + (index+1) * 0x9E3779B97F4A7C15. Stateless, so any language can
//! reproduce the stream exactly.
//!   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
//!   z ^= z >> 27; z *= 0x94D049BB133111EB
//!   z ^= z >> 31
std::uint64_t mix64(std::uint64_t seed, std::uint64_t index);

//! Uniform double in [0,1): top 53 bits of mix64 scaled by 2^-53.
double uniform01(std::uint64_t seed, std::uint64_t index);

//! X = U diag(sigma) V^T with sigma_1 = 1, sigma_n = 1/kappa (geometric:
//! sigma_i = kappa^(-(i-1)/(n-1)); linear: equally spaced in [1/kappa, 1]).
//! U is m x n with exactly orthonormal columns built by applying n seeded
//! random Householder reflectors to the first n columns of the identity;
//! V is an n x n seeded random orthogonal matrix built the same way.
//! Deterministic: identical inputs give bit-identical output.
DenseMatrix generate(std::size_t m, std::size_t n, const SpectrumSpec& spec);

}  // namespace skinnyqr
