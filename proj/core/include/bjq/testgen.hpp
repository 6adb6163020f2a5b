#pragma once

#include <cstdint>
#include <random>

#include "bjq/classical.hpp"
#include "bjq/grid.hpp"

namespace bjq::testgen {

/// Seed for the randomized suites: the BJQ_SEED environment variable when
/// set, otherwise a fixed default so runs are reproducible.
std::uint64_t default_seed();

enum class VarSet { All, QOnly, POnly };

/// Random nonzero polynomial: up to max_terms monomials of total degree at
/// most max_degree, with small rational coefficients. Unless real_hbar_free,
/// coefficients may pick up a factor of i and powers of hbar.
ClassicalPoly random_poly(std::mt19937_64& rng, int dof, int max_degree, int max_terms,
                          VarSet vars = VarSet::All, bool real_hbar_free = false);

/// Uniform random real samples in [-1, 1].
PhaseSpaceGridFunction random_real_samples(std::mt19937_64& rng, const GridSpec& spec);

/// Random real function synthesized from a few Fourier components strictly
/// inside the window (no Nyquist-edge modes), so quantization of it is
/// Hermitian to roundoff.
PhaseSpaceGridFunction random_band_limited(std::mt19937_64& rng, const GridSpec& spec,
                                           int components);

GridState random_state(std::mt19937_64& rng, const GridSpec& spec);

}  // namespace bjq::testgen
