#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "actionwin/barcode.hpp"
#include "actionwin/complex.hpp"
#include "actionwin/dga.hpp"
#include "actionwin/pwc.hpp"

namespace actionwin {

/// 64-bit Mersenne twister; draws go through index() so sequences do not
/// depend on the standard library's distribution implementations.
using Rng = std::mt19937_64;

/// Uniform in [0, n).
std::size_t index(Rng& rng, std::size_t n);
/// Uniform in [lo, hi].
long uniform(Rng& rng, long lo, long hi);
bool coin(Rng& rng, unsigned percent);

Scalar random_scalar(const FieldSpec& field, Rng& rng, bool nonzero = false);

struct RandomComplexOptions {
    std::size_t min_generators = 1;
    std::size_t max_generators = 20;
    int min_degree = 0;
    int max_degree = 3;
    /// Actions are k / action_denominator with k in [action_min, action_max].
    long action_min = 0;
    long action_max = 40;
    long action_denominator = 4;
    /// Chance (percent) of pairing an eligible generator.
    unsigned pairing_percent = 70;
};

/// A canonical form (d x = u y on random pairs) conjugated by a random
/// degree- and action-preserving upper-triangular base change.
FilteredComplex random_complex(const FieldSpec& field, Rng& rng, const RandomComplexOptions& options = {});

/// Same construction on fixed generators (actions and degrees given).
FilteredComplex random_complex_on(const FieldSpec& field, Rng& rng, const Window& window,
                                  std::vector<Generator> generators, unsigned pairing_percent = 70);

/// Invertible upper-triangular matrix in the complex's canonical order with
/// entries only between generators of equal degree and non-decreasing
/// action; diagonal entries are random units.
Matrix random_action_preserving_matrix(const FilteredComplex& complex, Rng& rng, unsigned fill_percent = 50);

/// Bars with endpoints k / 4 for k in [0, 40]; about a quarter infinite.
Barcode random_barcode(Rng& rng, std::size_t max_bars = 12);

struct RandomTimelineOptions {
    std::size_t max_generators = 12;
    std::size_t events = 10;
    std::size_t initial_generators = 6;
    /// Attempts per event before settling for a handle-slide or stopping.
    std::size_t attempts = 60;
};

/// Timeline on the window [0, 20) alternating drift segments of unit length
/// with singular events of every kind; each step is kept only if the prefix
/// simulates. Always ends with a drift.
Timeline random_timeline(const FieldSpec& field, Rng& rng, const RandomTimelineOptions& options = {});

struct RandomDga {
    ChordDGA dga;
    /// Augmentation of the whole DGA.
    Augmentation augmentation;
};

struct RandomDgaOptions {
    std::size_t min_chords = 6;
    std::size_t max_chords = 14;
    long length_max = 40;
    long length_denominator = 2;
};

/// Two-component DGA psi o d0 o psi^-1 where d0 pairs chords of the same
/// kind linearly and psi is a length-triangular tame automorphism adding
/// composable words; the augmentation is eps0 o psi^-1.
RandomDga random_two_component_dga(const FieldSpec& field, Rng& rng, const RandomDgaOptions& options = {});

/// Restriction of an augmentation to pure chords shorter than l.
Augmentation restrict_augmentation(const ChordDGA& dga, const Augmentation& eps, const Action& l);

/// Two clusters of odd sizes: actions in [l, l + width) and in
/// [l + width + gap, l + 2 width + gap), with a random differential.
FilteredComplex random_two_cluster_complex(const FieldSpec& field, Rng& rng, const Rational& l,
                                           const Rational& gap, const Rational& width, std::size_t max_cluster = 7);

}  // namespace actionwin
