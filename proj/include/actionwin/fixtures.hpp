#pragma once

#include <string>
#include <vector>

#include "actionwin/complex.hpp"
#include "actionwin/dga.hpp"
#include "actionwin/pwc.hpp"

namespace actionwin::fixtures {

/// One generator c, d c = 0: barcode {[action, inf)}.
FilteredComplex one_generator(const FieldSpec& field = FieldSpec::f2(), const Rational& action = 2, int degree = 1);

/// c0 (action a0, degree d), c1 (action a1, degree d + 1), d c1 = c0:
/// barcode {[a0, a1)}.
FilteredComplex acyclic_pair(const FieldSpec& field = FieldSpec::f2(), const Rational& a0 = 1, const Rational& a1 = 2,
                             int degree = 0);

/// y1 < y2 < x1 < x2 with d x1 = y1 + y2, d x2 = y2 (actions 1, 2, 3, 4).
FilteredComplex four_generator(const FieldSpec& field = FieldSpec::f2());

/// Two cycles at the same action.
FilteredComplex equal_action_pair(const FieldSpec& field = FieldSpec::f2());

/// Handle-slide e_b -> e_b + e_a at t = 1 on a three-generator complex.
Timeline handle_slide_timeline(const FieldSpec& field = FieldSpec::f2());
/// Birth of (x, y) at level 2 at t = 1; x then rises at rate 1/10.
Timeline birth_timeline(const FieldSpec& field = FieldSpec::f2());
/// The pair y (action 1), x (action 21/20) meets and dies at t = 1.
Timeline death_timeline(const FieldSpec& field = FieldSpec::f2());
/// The start generator of the bar [1, 3) exits below at t = 1.
Timeline exit_below_timeline(const FieldSpec& field = FieldSpec::f2());
/// One event of every kind.
Timeline bifurcation_tour(const FieldSpec& field = FieldSpec::f2());
/// Two events at t = 1 with no drift between them (rejected by simulate).
Timeline simultaneous_events(const FieldSpec& field = FieldSpec::f2());

/// Mixed chords m1 (length 1), m2 (length 2), d m2 = m1.
ChordDGA mixed_pair(const FieldSpec& field = FieldSpec::f2());

struct DgaWithAugmentation {
    ChordDGA dga;
    Augmentation augmentation;
};

/// d m2 = p m1 with a short degree-0 pure chord p and eps(p) = 1.
DgaWithAugmentation mixed_pair_with_pure(const FieldSpec& field = FieldSpec::f2());

struct HandleSlideFixture {
    ChordDGA minus;
    ChordDGA plus;
    std::string a;
    Word word;
    Scalar unit;
};

/// a -> a + 1 on chords b (1), a (2), c (3) with d- c = a, d+ c = a + 1.
HandleSlideFixture handle_slide_unit(const FieldSpec& field = FieldSpec::f2());
/// a -> a + b on the same chords with d- c = a, d+ c = a + b.
HandleSlideFixture handle_slide_word(const FieldSpec& field = FieldSpec::f2());

struct BirthFixture {
    ChordDGA minus_stabilized;
    ChordDGA plus;
    std::string a;
    std::string b;
    std::vector<std::string> ordering;
    Scalar unit;
};

/// Chords p (1/4), b (1), a (2), a1 (5); d+ a = b, d+ a1 = p b, d- a1 = 0.
/// The correction is a1 -> a1 - p a.
BirthFixture birth_example(const FieldSpec& field = FieldSpec::f2());
/// Only the born pair: d a = b on both sides.
BirthFixture birth_bare(const FieldSpec& field = FieldSpec::f2());

/// One degree-1 chord c of length a, d c = 0.
ChordDGA standard_unknot_shape(const FieldSpec& field = FieldSpec::f2(), const Rational& a = 1);

/// Chords c1, c2 of degree 1 with d c1 = d c2 = 1 (no augmentation).
ChordDGA stabilized_unknot_shape(const FieldSpec& field = FieldSpec::f2(), const Rational& l1 = 1,
                                 const Rational& l2 = 2);

/// Two copies of the standard unknot shape, the second shifted by N: pure
/// chords c^0, c^1 of length a, mixed chords p- (N - a), p+ (N + a) and
/// Morse chords x_min (N), x_max (N + morse) from component 0 to 1.
ChordDGA two_copy_template(const FieldSpec& field = FieldSpec::f2(), const Rational& n = 10, const Rational& a = 1,
                           const Rational& morse = Rational(1, 8));

struct FixtureInfo {
    std::string name;
    std::string kind;  // "complex", "timeline", "dga", "dga+augmentation"
    std::string description;
};

std::vector<FixtureInfo> catalog();

}  // namespace actionwin::fixtures
