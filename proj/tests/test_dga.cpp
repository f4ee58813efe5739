#include "doctest.h"

#include "actionwin/fixtures.hpp"
#include "actionwin/linearization.hpp"
#include "actionwin/random.hpp"
#include "oracle.hpp"

using namespace actionwin;

namespace {

AlgebraElement letter(const FieldSpec& f, const std::string& l) { return AlgebraElement::letter(f, l); }
AlgebraElement word(const FieldSpec& f, Word w, long k = 1) { return AlgebraElement::word(f, std::move(w), Scalar(f, k)); }

bool has_issue(const DgaReport& r, ErrorCode code) {
    for (const auto& i : r.issues)
        if (i.code == code) return true;
    return false;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::IoError;
}

const std::vector<FieldSpec>& fields() {
    static const std::vector<FieldSpec> f{FieldSpec::f2(), FieldSpec::fp(5), FieldSpec::rationals()};
    return f;
}

// Phi(d c) == d'(Phi(c)) on every generator, computed directly.
bool commutes(const DgaMorphism& phi, const ChordDGA& source, const ChordDGA& target) {
    for (const auto& c : source.chords()) {
        if (!(phi.apply(source.differential(c.label)) == target.apply(phi.image(c.label)))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("validate") {
    auto f2 = FieldSpec::f2();
    CHECK(ChordDGA::build(f2, {Chord::pure("c", 1, 1)}, {}).validate().ok());
    CHECK(fixtures::stabilized_unknot_shape().validate().ok());
    CHECK(fixtures::two_copy_template().validate().ok());
    CHECK(fixtures::mixed_pair().validate().ok());

    auto long_word = ChordDGA::build(f2, {Chord::pure("a", 1, 0), Chord::pure("b", 2, 1)}, {{"b", word(f2, {"a", "a"})}});
    CHECK(has_issue(long_word.validate(), ErrorCode::LengthIncrease));

    auto degree = ChordDGA::build(f2, {Chord::pure("a", 1, 0), Chord::pure("b", 2, 0)}, {{"b", letter(f2, "a")}});
    CHECK(has_issue(degree.validate(), ErrorCode::DegreeMismatch));

    auto mixed_out = ChordDGA::build(f2, {Chord::pure("p", 1, 0), Chord::mixed("m", 2, 1)}, {{"m", letter(f2, "p")}});
    CHECK(has_issue(mixed_out.validate(), ErrorCode::MixedOutputViolation));

    auto not_square_zero = ChordDGA::build(
        f2, {Chord::pure("a", 1, 0), Chord::pure("b", 2, 1), Chord::pure("c", 4, 2)},
        {{"b", letter(f2, "a")}, {"c", letter(f2, "b")}});
    auto report = not_square_zero.validate();
    REQUIRE(has_issue(report, ErrorCode::NotSquareZero));
    CHECK(report.issues[0].witness == "c");
    CHECK_THROWS_AS(not_square_zero.require_valid(), Error);
}

TEST_CASE("build rejects structural errors") {
    auto f2 = FieldSpec::f2();
    CHECK(code_of([&] { ChordDGA::build(f2, {Chord::pure("a", 0, 0)}, {}); }) == ErrorCode::InvalidChord);
    CHECK(code_of([&] { ChordDGA::build(f2, {Chord::pure("a", 1, 0), Chord::pure("a", 2, 0)}, {}); }) ==
          ErrorCode::DuplicateId);
    CHECK(code_of([&] { ChordDGA::build(f2, {Chord::mixed("m", 1, 0, 0, 0)}, {}); }) == ErrorCode::InvalidChord);
    CHECK(code_of([&] { ChordDGA::build(f2, {Chord::pure("a", 1, 1)}, {{"a", letter(f2, "z")}}); }) ==
          ErrorCode::ForeignGenerator);
}

TEST_CASE("Leibniz rule with Koszul signs") {
    auto q = FieldSpec::rationals();
    auto dga = ChordDGA::build(q, {Chord::pure("r", 1, 0), Chord::pure("p", 2, 1), Chord::pure("s", 3, 1)},
                               {{"p", letter(q, "r")}, {"s", letter(q, "r")}});
    CHECK(dga.apply(word(q, {"p", "s"})) == word(q, {"r", "s"}) - word(q, {"p", "r"}));
    CHECK(dga.apply(word(q, {"r", "p"})) == word(q, {"r", "r"}));
    CHECK(dga.length(word(q, {"p", "s"})) == 5);
    CHECK(dga.length(AlgebraElement::scalar(Scalar(q, 3))) == 0);
}

TEST_CASE("sub_dga") {
    auto stab = fixtures::stabilized_unknot_shape(FieldSpec::f2(), 1, 2);
    CHECK(stab.sub_dga(Action::pos_inf()) == stab);
    CHECK(stab.sub_dga(Action(1)).chords().empty());
    CHECK(stab.sub_dga(Action(Rational(1, 2))).chords().empty());
    CHECK(stab.sub_dga(Action(Rational(3, 2))).chords().size() == 1);
}

TEST_CASE("augmentations") {
    auto f2 = FieldSpec::f2();
    CHECK(find_augmentations(fixtures::stabilized_unknot_shape()).empty());

    auto zero = ChordDGA::build(f2, {Chord::pure("a", 1, 0), Chord::pure("b", 2, 0), Chord::pure("c", 3, 0)}, {});
    CHECK(find_augmentations(zero).size() == 8);
    auto f3 = FieldSpec::fp(3);
    auto zero3 = ChordDGA::build(f3, {Chord::pure("a", 1, 0), Chord::pure("b", 2, 0)}, {});
    CHECK(find_augmentations(zero3).size() == 9);

    auto forced = ChordDGA::build(f2, {Chord::pure("b", 1, 0), Chord::pure("a", 2, 1)}, {{"a", letter(f2, "b")}});
    auto found = find_augmentations(forced);
    REQUIRE(found.size() == 1);
    CHECK(evaluate(found[0], letter(f2, "b")).is_zero());

    CHECK(!check_augmentation(forced, {{"a", Scalar::one(f2)}}).ok());
    CHECK(!check_augmentation(fixtures::mixed_pair(), {{"m1", Scalar::one(f2)}}).ok());
    AugmentationSearch tiny;
    tiny.budget = 4;
    CHECK(code_of([&] { find_augmentations(zero, tiny); }) == ErrorCode::SearchBudgetExceeded);
}

TEST_CASE("handle-slide morphisms on the fixtures") {
    for (const auto& field : fields()) {
        for (auto fx : {fixtures::handle_slide_unit(field), fixtures::handle_slide_word(field)}) {
            auto phi = handle_slide_morphism(fx.minus, fx.plus, fx.a, fx.word, fx.unit);
            CHECK(commutes(phi, fx.minus, fx.plus));
            CHECK(!phi.chain_map_defect(fx.minus, fx.plus));
            CHECK(phi.max_length_excess(fx.plus) <= 0);
            CHECK(phi.image(fx.a) == letter(field, fx.a) + AlgebraElement::word(field, fx.word, fx.unit));
        }
    }
}

TEST_CASE("handle-slide edge cases") {
    auto fx = fixtures::handle_slide_unit();
    auto id = handle_slide_morphism(fx.minus, fx.minus, "nothing", {"b"}, Scalar::one(FieldSpec::f2()));
    CHECK(id == DgaMorphism::identity(fx.minus));
    CHECK(code_of([&] { handle_slide_morphism(fx.minus, fx.minus, "a", {"b", "b", "b"}, Scalar::one(FieldSpec::f2())); }) ==
          ErrorCode::LengthIncrease);
    CHECK(code_of([&] { handle_slide_morphism(fx.minus, fx.minus, "a", {}, Scalar::one(FieldSpec::f2())); }) ==
          ErrorCode::NotChainMap);
}

TEST_CASE("composing handle-slides") {
    auto f5 = FieldSpec::fp(5);
    std::vector<Chord> chords{Chord::pure("b", 1, 0), Chord::pure("a", 2, 0), Chord::pure("c", 3, 1)};
    auto d0 = ChordDGA::build(f5, chords, {{"c", letter(f5, "a")}});
    auto d1 = ChordDGA::build(f5, chords, {{"c", letter(f5, "a") + letter(f5, "b")}});
    auto d2 = ChordDGA::build(f5, chords, {{"c", letter(f5, "a") + word(f5, {"b"}, 2)}});
    auto first = handle_slide_morphism(d0, d1, "a", {"b"}, Scalar::one(f5));
    auto second = handle_slide_morphism(d1, d2, "a", {"b"}, Scalar::one(f5));
    auto direct = handle_slide_morphism(d0, d2, "a", {"b"}, Scalar(f5, 2));
    CHECK(compose(second, first) == direct);
}

TEST_CASE("birth morphisms on the fixtures") {
    for (const auto& field : fields()) {
        auto fx = fixtures::birth_example(field);
        auto bm = birth_morphism(fx.minus_stabilized, fx.plus, fx.a, fx.b, fx.ordering, fx.unit);
        CHECK(commutes(bm.map, fx.minus_stabilized, fx.plus));
        CHECK(bm.slack == 1);
        CHECK(bm.map.max_length_excess(fx.plus) <= bm.slack);
        CHECK(bm.map.image("a1") == letter(field, "a1") + word(field, {"p", "a"}, -1));
        CHECK(bm.map.image("b") == letter(field, "b"));
        REQUIRE(bm.slides.size() == 1);
        CHECK(bm.slides[0].generator == "a1");
        Rational excess = fx.plus.length(word(field, {"p", "a"})) - fx.plus.length(word(field, {"p", "b"}));
        CHECK(excess == Rational(fx.plus.chord("a").length - fx.plus.chord("b").length));

        auto bare = fixtures::birth_bare(field);
        auto bb = birth_morphism(bare.minus_stabilized, bare.plus, bare.a, bare.b, bare.ordering, bare.unit);
        CHECK(bb.map == DgaMorphism::identity(bare.plus));
    }
}

TEST_CASE("birth ordering and f") {
    auto fx = fixtures::birth_example();
    CHECK(code_of([&] {
              birth_morphism(fx.minus_stabilized, fx.plus, fx.a, fx.b, std::vector<std::string>{}, fx.unit);
          }) == ErrorCode::OrderingViolated);
    auto f2 = FieldSpec::f2();
    CHECK(replace_first(word(f2, {"p", "b", "b"}), "b", "a") == word(f2, {"p", "a", "b"}));
    CHECK(replace_first(word(f2, {"p", "p"}), "b", "a").is_zero());
}

TEST_CASE("partial linearization examples") {
    auto f2 = FieldSpec::f2();
    auto pair = partial_linearization(fixtures::mixed_pair(), {}, Action(0), Action(3), Action::pos_inf());
    CHECK(pair.boundary("m2") == ChainVector{{"m1", Scalar::one(f2)}});
    CHECK(barcode(pair) == Barcode{Bar{Action(1), Action(2), 0}});

    for (const auto& field : fields()) {
        auto fx = fixtures::mixed_pair_with_pure(field);
        auto c = partial_linearization(fx.dga, fx.augmentation, Action(0), Action(3), Action::pos_inf());
        CHECK(c.boundary("m2") == ChainVector{{"m1", Scalar::one(field)}});
        auto without = partial_linearization(fx.dga, {}, Action(0), Action(3), Action::pos_inf());
        CHECK(without.boundary("m2").is_zero());
    }
    CHECK(code_of([&] { partial_linearization(fixtures::mixed_pair(), {}, Action(0), Action(3), Action(2)); }) ==
          ErrorCode::WindowTooWide);
    auto fx = fixtures::mixed_pair_with_pure();
    CHECK(code_of([&] {
              partial_linearization(fx.dga, {{"m1", Scalar::one(f2)}}, Action(0), Action(3), Action::pos_inf());
          }) == ErrorCode::AugmentationInvalid);
}

TEST_CASE("two-copy template linearizes to the Morse cluster") {
    auto dga = fixtures::two_copy_template();
    auto c = partial_linearization(dga, {}, Action(Rational(19, 2)), Action(Rational(21, 2)), Action(1));
    CHECK(c.contains("x_min"));
    CHECK(c.contains("x_max"));
    CHECK(c.size() == 2);
}

TEST_CASE("random DGAs: validity, linearization and the substitution oracle") {
    Rng rng(41);
    for (int i = 0; i < 120; ++i) {
        const auto& field = fields()[i % 3];
        auto r = random_two_component_dga(field, rng);
        CHECK(r.dga.validate().ok());
        CHECK(check_augmentation(r.dga, r.augmentation).ok());

        Rational top(31);
        for (const auto& ch : r.dga.chords()) top = std::max(top, Rational(ch.length + 1));
        auto full = partial_linearization(r.dga, r.augmentation, Action(0), Action(top), Action::pos_inf());
        auto expected = oracle::linearized_differential(r.dga, r.augmentation);
        for (const auto& g : full.generators()) {
            auto it = expected.find(g.id);
            CHECK(full.boundary(g.id) == (it == expected.end() ? ChainVector{} : it->second));
        }

        for (int w = 0; w < 4; ++w) {
            Rational a(ratio(uniform(rng, 0, 40), 2));
            Rational width(ratio(uniform(rng, 1, 20), 2));
            Rational l = width + ratio(uniform(rng, 0, 6), 2);
            auto eps = restrict_augmentation(r.dga, r.augmentation, Action(l));
            auto c = partial_linearization(r.dga, eps, Action(a), Action(Rational(a + width)), Action(l));
            for (const auto& g : c.generators()) CHECK(c.apply_differential(c.boundary(g.id)).is_zero());
            CHECK(c == full.restrict_window(Action(a), Action(Rational(a + width))));
            CHECK(code_of([&] {
                      partial_linearization(r.dga, eps, Action(a), Action(Rational(a + l + Rational(1, 2))), Action(l));
                  }) == ErrorCode::WindowTooWide);
        }
    }
}
