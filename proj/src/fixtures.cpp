#include "actionwin/fixtures.hpp"

namespace actionwin::fixtures {

namespace {

Scalar one(const FieldSpec& field) { return Scalar::one(field); }

DriftSegment drift(long t0, std::map<std::string, Rational> rates = {}) {
    return DriftSegment{Rational(t0), Rational(t0 + 1), std::move(rates), 0, 0, false, {}};
}

Window window(long lower, long upper) { return Window{Action(lower), Action(upper)}; }

AlgebraElement letter(const FieldSpec& field, const std::string& label) { return AlgebraElement::letter(field, label); }

AlgebraElement word(const FieldSpec& field, Word w, long coeff = 1) {
    return AlgebraElement::word(field, std::move(w), Scalar(field, coeff));
}

}  // namespace

FilteredComplex one_generator(const FieldSpec& field, const Rational& action, int degree) {
    return FilteredComplex::build(field, Window{}, {{"c", action, degree}}, {});
}

FilteredComplex acyclic_pair(const FieldSpec& field, const Rational& a0, const Rational& a1, int degree) {
    return FilteredComplex::build(field, Window{}, {{"c0", a0, degree}, {"c1", a1, degree + 1}},
                                  {{"c1", ChainVector{{"c0", one(field)}}}});
}

FilteredComplex four_generator(const FieldSpec& field) {
    return FilteredComplex::build(field, Window{},
                                  {{"y1", 1, 0}, {"y2", 2, 0}, {"x1", 3, 1}, {"x2", 4, 1}},
                                  {{"x1", ChainVector{{"y1", one(field)}, {"y2", one(field)}}},
                                   {"x2", ChainVector{{"y2", one(field)}}}});
}

FilteredComplex equal_action_pair(const FieldSpec& field) {
    return FilteredComplex::build(field, Window{}, {{"u", 1, 0}, {"v", 1, 0}}, {});
}

Timeline handle_slide_timeline(const FieldSpec& field) {
    auto c = FilteredComplex::build(field, window(0, 10), {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 1}},
                                    {{"c", ChainVector{{"b", one(field)}}}});
    return Timeline{c, 0,
                    {drift(0), SingularEvent{1, HandleSlide{"b", ChainVector{{"a", one(field)}}, one(field)}},
                     drift(1)}};
}

Timeline birth_timeline(const FieldSpec& field) {
    auto c = FilteredComplex::build(field, window(0, 10), {{"g", 5, 0}}, {});
    return Timeline{c, 0,
                    {drift(0), SingularEvent{1, Birth{"x", "y", 1, 2, one(field)}},
                     drift(1, {{"x", Rational(1, 10)}})}};
}

Timeline death_timeline(const FieldSpec& field) {
    auto c = FilteredComplex::build(field, window(0, 10), {{"y", 1, 0}, {"x", Rational(21, 20), 1}, {"g", 4, 0}},
                                    {{"x", ChainVector{{"y", one(field)}}}});
    return Timeline{c, 0, {drift(0, {{"x", Rational(-1, 20)}}), SingularEvent{1, Death{"x", "y"}}, drift(1)}};
}

Timeline exit_below_timeline(const FieldSpec& field) {
    auto c = FilteredComplex::build(field, window(0, 10), {{"y", 1, 0}, {"x", 3, 1}},
                                    {{"x", ChainVector{{"y", one(field)}}}});
    return Timeline{c, 0, {drift(0, {{"y", Rational(-1)}}), SingularEvent{1, ExitBelow{"y"}}, drift(1)}};
}

Timeline bifurcation_tour(const FieldSpec& field) {
    auto c = FilteredComplex::build(field, window(0, 10), {{"y", 1, 0}, {"x", 3, 1}, {"z", 6, 0}},
                                    {{"x", ChainVector{{"y", one(field)}}}});
    Rational q(1, 4);
    return Timeline{c, 0,
                    {drift(0, {{"y", Rational(-1)}}),
                     SingularEvent{1, ExitBelow{"y"}},
                     drift(1),
                     SingularEvent{2, EntryBelow{{"w", 0, 0}, ChainVector{{"x", one(field)}}}},
                     drift(2, {{"w", Rational(1, 2)}}),
                     SingularEvent{3, Birth{"p", "q", 1, 8, one(field)}},
                     drift(3, {{"p", q}, {"q", Rational(-q)}}),
                     SingularEvent{4, HandleSlide{"z", ChainVector{{"w", one(field)}}, one(field)}},
                     drift(4, {{"p", Rational(-q)}, {"q", q}}),
                     SingularEvent{5, Death{"p", "q"}},
                     drift(5, {{"z", Rational(4)}}),
                     SingularEvent{6, ExitAbove{"z"}},
                     drift(6),
                     SingularEvent{7, EntryAbove{{"u", 10, 1}, ChainVector{}}},
                     drift(7, {{"u", Rational(-1)}})}};
}

Timeline simultaneous_events(const FieldSpec& field) {
    auto c = FilteredComplex::build(field, window(0, 10), {{"a", 1, 0}, {"b", 2, 0}}, {});
    return Timeline{c, 0,
                    {drift(0), SingularEvent{1, HandleSlide{"b", ChainVector{{"a", one(field)}}, one(field)}},
                     SingularEvent{1, Birth{"x", "y", 1, 5, one(field)}}, drift(1)}};
}

ChordDGA mixed_pair(const FieldSpec& field) {
    return ChordDGA::build(field, {Chord::mixed("m1", 1, 0), Chord::mixed("m2", 2, 1)}, {{"m2", letter(field, "m1")}});
}

DgaWithAugmentation mixed_pair_with_pure(const FieldSpec& field) {
    auto dga = ChordDGA::build(field,
                               {Chord::pure("p", Rational(1, 4), 0, 0), Chord::mixed("m1", 1, 0), Chord::mixed("m2", 2, 1)},
                               {{"m2", word(field, {"p", "m1"})}});
    return {dga, {{"p", one(field)}}};
}

namespace {

std::vector<Chord> slide_chords() {
    return {Chord::pure("b", 1, 0), Chord::pure("a", 2, 0), Chord::pure("c", 3, 1)};
}

}  // namespace

HandleSlideFixture handle_slide_unit(const FieldSpec& field) {
    auto minus = ChordDGA::build(field, slide_chords(), {{"c", letter(field, "a")}});
    auto plus = ChordDGA::build(field, slide_chords(), {{"c", letter(field, "a") + word(field, {})}});
    return {minus, plus, "a", {}, one(field)};
}

HandleSlideFixture handle_slide_word(const FieldSpec& field) {
    auto minus = ChordDGA::build(field, slide_chords(), {{"c", letter(field, "a")}});
    auto plus = ChordDGA::build(field, slide_chords(), {{"c", letter(field, "a") + letter(field, "b")}});
    return {minus, plus, "a", {"b"}, one(field)};
}

BirthFixture birth_example(const FieldSpec& field) {
    std::vector<Chord> chords{Chord::pure("p", Rational(1, 4), 0), Chord::pure("b", 1, 0), Chord::pure("a", 2, 1),
                              Chord::pure("a1", 5, 1)};
    auto minus = ChordDGA::build(field, chords, {{"a", letter(field, "b")}});
    auto plus = ChordDGA::build(field, chords, {{"a", letter(field, "b")}, {"a1", word(field, {"p", "b"})}});
    return {minus, plus, "a", "b", {"a1"}, Scalar(field, -1L)};
}

BirthFixture birth_bare(const FieldSpec& field) {
    std::vector<Chord> chords{Chord::pure("b", 1, 0), Chord::pure("a", 2, 1)};
    auto dga = ChordDGA::build(field, chords, {{"a", letter(field, "b")}});
    return {dga, dga, "a", "b", {}, one(field)};
}

ChordDGA standard_unknot_shape(const FieldSpec& field, const Rational& a) {
    return ChordDGA::build(field, {Chord::pure("c", a, 1)}, {});
}

ChordDGA stabilized_unknot_shape(const FieldSpec& field, const Rational& l1, const Rational& l2) {
    return ChordDGA::build(field, {Chord::pure("c1", l1, 1), Chord::pure("c2", l2, 1)},
                           {{"c1", word(field, {})}, {"c2", word(field, {})}});
}

ChordDGA two_copy_template(const FieldSpec& field, const Rational& n, const Rational& a, const Rational& morse) {
    if (!(a < n) || !(morse < a) || morse <= 0) {
        throw Error(ErrorCode::InvalidChord, "two_copy_template needs 0 < morse < a < N");
    }
    return ChordDGA::build(field,
                           {Chord::pure("c^0", a, 1, 0), Chord::pure("c^1", a, 1, 1),
                            Chord::mixed("p-", Rational(n - a), 0), Chord::mixed("x_min", n, 0),
                            Chord::mixed("x_max", Rational(n + morse), 1), Chord::mixed("p+", Rational(n + a), 1)},
                           {});
}

std::vector<FixtureInfo> catalog() {
    return {
        {"one_generator", "complex", "single cycle at action 2, degree 1"},
        {"acyclic_pair", "complex", "d c1 = c0 with actions 1 < 2"},
        {"four_generator", "complex", "d x1 = y1 + y2, d x2 = y2"},
        {"equal_action_pair", "complex", "two cycles at the same action"},
        {"handle_slide_timeline", "timeline", "one handle-slide"},
        {"birth_timeline", "timeline", "birth at level 2, then a short bar opens"},
        {"death_timeline", "timeline", "the bar [1, 21/20) dies"},
        {"exit_below_timeline", "timeline", "start of the bar [1, 3) exits below"},
        {"bifurcation_tour", "timeline", "one event of every kind"},
        {"simultaneous_events", "timeline", "two events at one time (invalid)"},
        {"mixed_pair", "dga", "mixed chords with d m2 = m1"},
        {"mixed_pair_with_pure", "dga+augmentation", "d m2 = p m1 with eps(p) = 1"},
        {"standard_unknot_shape", "dga", "one degree-1 chord, zero differential"},
        {"stabilized_unknot_shape", "dga", "d c1 = d c2 = 1"},
        {"two_copy_template", "dga", "two copies shifted by N with Morse chords near N"},
    };
}

}  // namespace actionwin::fixtures
