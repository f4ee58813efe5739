#pragma once

#include "actionwin/complex.hpp"
#include "actionwin/dga.hpp"

namespace actionwin {

/// Checks eps as an augmentation of the pure sub-DGA on chords of length < l:
/// support on pure degree-0 chords shorter than l, eps(d c) = 0 for each such
/// chord (mixed letters evaluate to 0).
DgaReport check_partial_augmentation(const ChordDGA& dga, const Augmentation& eps, const Action& l);

/// Complex on the mixed chords running from component 0 to component 1 with
/// length in [a, b). For such a chord m, d(m) is projected to words with
/// exactly one such chord in the window and all other letters pure of length
/// < l; substituting c -> c + eps(c) and keeping the one-letter part gives
/// the differential.
/// Throws WindowTooWide (b - a > l), AugmentationInvalid, and
/// PureChordOfForbiddenLength if a contributing word carries a pure chord of
/// length >= l (impossible for a valid DGA when b - a <= l).
FilteredComplex partial_linearization(const ChordDGA& dga, const Augmentation& eps, const Action& a,
                                      const Action& b, const Action& l);

}  // namespace actionwin
