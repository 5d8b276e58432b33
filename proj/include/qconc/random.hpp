// random.hpp — Seeded, platform-stable sampling: SplitMix64 streams, Haar
// states and unitaries, and state sets constructed to hit a target
// orthogonality class.

#pragma once

#include "qconc/ortho.hpp"
#include "qconc/state.hpp"

#include <cstdint>
#include <vector>

namespace qconc {

// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", 2014): 64-bit counter advanced by a fixed odd gamma, output
// run through a murmur-style finalizer. Integer path is bit-stable across
// platforms; normals come from an explicit Box-Muller transform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 significant bits.
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; safe under log().
    double next_double_open() { return double((next_u64() >> 11) + 1) * 0x1.0p-53; }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    // Index uniform in [0, n).
    std::uint64_t next_below(std::uint64_t n);

    // Standard normal via Box-Muller; the paired value is cached.
    double next_normal();

    Complex next_complex_normal() { return {next_normal(), next_normal()}; }

  private:
    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0;
};

// Independent stream for (seed, stream-index): offsets the seed by a mixed
// function of the index so trials can run in any order.
SplitMix64 derive_stream(std::uint64_t seed, std::uint64_t stream);

// Haar-uniform unit vector (i.i.d. complex Gaussians, normalized).
Vector random_unit_vector(Index dim, SplitMix64& rng);

// Haar random pure state on C^{n1} x C^{n2}.
PureState random_pure_state(Index n1, Index n2, SplitMix64& rng);

// Haar-distributed coefficients for an m-term superposition.
Vector random_coefficients(Index m, SplitMix64& rng);

// Unitary from the QR factorization of a complex Ginibre matrix, phases fixed
// by the R diagonal.
Matrix random_unitary(Index n, SplitMix64& rng);

// m states whose classify_set result is exactly `target`:
//   Biorthogonal — disjoint Schmidt-support blocks on both sides, per-state
//                  rank drawn from {1, 2} within the budget min(n1, n2);
//   OneSidedA    — disjoint A-side blocks (budget n1), full shared B support;
//   Orthogonal   — Gram-Schmidt on Haar draws in the joint space;
//   Arbitrary    — independent Haar draws.
// Accidentally-stronger draws (measure zero) are rejected and redrawn.
std::vector<PureState> random_class_set(OrthoClass target, Index n1, Index n2, int m,
                                        SplitMix64& rng);

// True when random_class_set can satisfy the request.
bool class_set_feasible(OrthoClass target, Index n1, Index n2, int m);

}  // namespace qconc
