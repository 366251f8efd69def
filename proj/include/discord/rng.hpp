#ifndef DISCORD_RNG_HPP
#define DISCORD_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "discord/qmat.hpp"

namespace discord {

using Rng = std::mt19937_64;

// Per-trial seed derived deterministically from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// rows x cols matrix of independent standard complex Gaussians.
Mat ginibre(int rows, int cols, Rng& rng);

// Haar-random unitary via QR of a Ginibre matrix, R diagonal phase-fixed.
Mat haar_unitary(int d, Rng& rng);

// Uniform sample from the probability simplex (Dirichlet(1,...,1)).
std::vector<double> dirichlet_uniform(int n, Rng& rng);

}  // namespace discord

#endif
