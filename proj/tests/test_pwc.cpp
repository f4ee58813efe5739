#include "doctest.h"

#include "actionwin/fixtures.hpp"
#include "actionwin/pwc.hpp"
#include "actionwin/random.hpp"
#include "oracle.hpp"

using namespace actionwin;

namespace {

Bar bar(Rational s, Action e, int d) { return Bar{Action(s), e, d}; }

DriftSegment drift(long t0, std::map<std::string, Rational> rates = {}) {
    return DriftSegment{Rational(t0), Rational(t0 + 1), std::move(rates), 0, 0, false, {}};
}

Scalar one() { return Scalar::one(FieldSpec::f2()); }

const TransitionCheck& only_event_check(const TransitionReport& report) {
    for (const auto& c : report.checks)
        if (c.scope.rfind("event", 0) == 0) return c;
    FAIL("no event check");
    return report.checks.front();
}

}  // namespace

TEST_CASE("empty timeline") {
    Timeline tl{fixtures::acyclic_pair(), 0, {}};
    auto trace = simulate(tl);
    REQUIRE(trace.samples.size() == 1);
    CHECK(trace.samples[0].barcode == Barcode{bar(1, Action(2), 0)});
    CHECK(check_transitions(trace, tl).all_passed());
}

TEST_CASE("handle-slide leaves the barcode unaffected") {
    auto tl = fixtures::handle_slide_timeline();
    auto trace = simulate(tl);
    auto report = check_transitions(trace, tl);
    CHECK(report.all_passed());
    const auto& ev = only_event_check(report);
    CHECK(ev.rule == "unaffected");
    CHECK(trace.samples.front().barcode == trace.samples.back().barcode);
}

TEST_CASE("birth adds a short bar") {
    auto tl = fixtures::birth_timeline();
    auto trace = simulate(tl);
    CHECK(check_transitions(trace, tl).all_passed());
    CHECK(trace.samples.front().barcode == Barcode{bar(5, Action::pos_inf(), 0)});
    CHECK(trace.samples.back().barcode == sorted({bar(2, Action(Rational(21, 10)), 0), bar(5, Action::pos_inf(), 0)}));
}

TEST_CASE("death removes the bar [1, 21/20)") {
    auto tl = fixtures::death_timeline();
    auto trace = simulate(tl);
    CHECK(check_transitions(trace, tl).all_passed());
    CHECK(trace.samples.front().barcode ==
          sorted({bar(1, Action(Rational(21, 20)), 0), bar(4, Action::pos_inf(), 0)}));
    CHECK(trace.samples.back().barcode == Barcode{bar(4, Action::pos_inf(), 0)});
}

TEST_CASE("exit below replaces a finite bar by an infinite one") {
    auto tl = fixtures::exit_below_timeline();
    auto trace = simulate(tl);
    auto report = check_transitions(trace, tl);
    CHECK(report.all_passed());
    CHECK(only_event_check(report).rule == "finite bar replaced by infinite bar");
    CHECK(trace.samples.back().barcode == Barcode{bar(3, Action::pos_inf(), 1)});
}

TEST_CASE("bifurcation tour passes every rule") {
    for (auto field : {FieldSpec::f2(), FieldSpec::fp(5), FieldSpec::rationals()}) {
        auto tl = fixtures::bifurcation_tour(field);
        auto trace = simulate(tl);
        auto report = check_transitions(trace, tl);
        CHECK(report.all_passed());
        CHECK(trace.events.size() == 7);
        for (const auto& s : trace.samples) CHECK(s.barcode == oracle::barcode(s.complex));
    }
}

TEST_CASE("simulate rejects bad timelines") {
    try {
        simulate(fixtures::simultaneous_events());
        FAIL("expected SimultaneousBifurcations");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SimultaneousBifurcations);
    }
    auto c = FilteredComplex::build(FieldSpec::f2(), Window{0, 10}, {{"y", 1, 0}, {"x", 3, 1}},
                                    {{"x", ChainVector{{"y", one()}}}});
    Timeline bad_death{c, 0, {drift(0), SingularEvent{1, Death{"x", "y"}}, drift(1)}};
    try {
        simulate(bad_death);
        FAIL("expected EventPreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EventPreconditionViolated);
        CHECK(std::string(e.what()).find("item 1") != std::string::npos);
    }
    Timeline leaves{c, 0, {DriftSegment{0, 2, {{"y", Rational(-1)}}, 0, 0, false, {}}}};
    CHECK_THROWS_AS(simulate(leaves), Error);
    auto c2 = FilteredComplex::build(FieldSpec::f2(), Window{0, 10}, {{"a", 1, 0}, {"b", 2, 0}}, {});
    Timeline crossing{c2, 0, {DriftSegment{0, 1, {{"a", Rational(2)}}, 0, 0, false, {}}}};
    try {
        simulate(crossing);
        FAIL("expected NonGenericCrossing");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonGenericCrossing);
    }
}

TEST_CASE("birth then death restores the complex") {
    auto c = FilteredComplex::build(FieldSpec::fp(5), Window{0, 10}, {{"g", 5, 0}}, {});
    Scalar u(FieldSpec::fp(5), 2);
    Timeline tl{c, 0,
                {drift(0), SingularEvent{1, Birth{"x", "y", 1, 2, u}}, drift(1, {{"x", Rational(1, 10)}}),
                 drift(2, {{"x", Rational(-1, 10)}}), SingularEvent{3, Death{"x", "y"}}, drift(3)}};
    auto trace = simulate(tl);
    CHECK(check_transitions(trace, tl).all_passed());
    CHECK(trace.samples.back().complex == c);
    CHECK(trace.samples.back().barcode == trace.samples.front().barcode);
}

TEST_CASE("entry below then exit below restores the complex") {
    auto c = FilteredComplex::build(FieldSpec::f2(), Window{0, 10}, {{"x", 3, 1}}, {});
    Timeline tl{c, 0,
                {drift(0), SingularEvent{1, EntryBelow{{"w", 0, 0}, ChainVector{{"x", one()}}}},
                 drift(1, {{"w", Rational(1, 2)}}), drift(2, {{"w", Rational(-1, 2)}}),
                 SingularEvent{3, ExitBelow{"w"}}, drift(3)}};
    auto trace = simulate(tl);
    CHECK(check_transitions(trace, tl).all_passed());
    CHECK(trace.samples.back().complex == c);
    CHECK(trace.samples[2].barcode == Barcode{bar(Rational(1, 4), Action(3), 0)});
}

TEST_CASE("exit above and entry above") {
    auto c = FilteredComplex::build(FieldSpec::f2(), Window{0, 10}, {{"y", 1, 0}, {"x", 9, 1}},
                                    {{"x", ChainVector{{"y", one()}}}});
    Timeline tl{c, 0,
                {drift(0, {{"x", Rational(1)}}), SingularEvent{1, ExitAbove{"x"}}, drift(1),
                 SingularEvent{2, EntryAbove{{"x", 10, 1}, ChainVector{{"y", one()}}}},
                 drift(2, {{"x", Rational(-1)}})}};
    auto trace = simulate(tl);
    auto report = check_transitions(trace, tl);
    CHECK(report.all_passed());
    CHECK(trace.samples.back().complex == c);
    bool saw_infinite = false;
    for (const auto& s : trace.samples) saw_infinite |= s.barcode == Barcode{bar(1, Action::pos_inf(), 0)};
    CHECK(saw_infinite);
}

TEST_CASE("random timelines follow the transition rules") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        auto field = std::vector<FieldSpec>{FieldSpec::f2(), FieldSpec::fp(5), FieldSpec::rationals()}[i % 3];
        auto tl = random_timeline(field, rng);
        auto trace = simulate(tl);
        CHECK(check_transitions(trace, tl).all_passed());
        CHECK(std::holds_alternative<DriftSegment>(tl.items.back()));
        for (const auto& s : trace.samples) {
            CHECK(s.complex.size() <= 12);
            CHECK(s.barcode == oracle::barcode(s.complex));
        }
    }
}

TEST_CASE("simulate is deterministic") {
    Rng a(9), b(9);
    auto t1 = random_timeline(FieldSpec::f2(), a);
    auto t2 = random_timeline(FieldSpec::f2(), b);
    auto s1 = simulate(t1), s2 = simulate(t2);
    REQUIRE(s1.samples.size() == s2.samples.size());
    for (std::size_t i = 0; i < s1.samples.size(); ++i) CHECK(s1.samples[i].barcode == s2.samples[i].barcode);
}

TEST_CASE("drift speed audit") {
    auto c = FilteredComplex::build(FieldSpec::f2(), Window{0, 20}, {{"a", 5, 0}, {"b", 8, 0}}, {});
    auto rate = PiecewiseLinear<Rational>::constant(1, 0, 1);

    Timeline still{c, 0, {drift(0)}};
    CHECK(drift_speed_audit(still, rate).passed());

    Timeline shrinking{c, 0, {drift(0, {{"a", Rational(-1)}})}};
    auto flagged = drift_speed_audit(shrinking, rate);
    REQUIRE(!flagged.passed());
    CHECK(flagged.flags[0].subject == "a");

    DriftSegment window_follows{0, 1, {{"b", Rational(-1, 2)}}, Rational(1, 2), Rational(-1, 2), true, {{"b", "a"}}};
    Timeline ok{c, 0, {window_follows}};
    CHECK(drift_speed_audit(ok, rate).passed());

    DriftSegment fast_gap = window_follows;
    fast_gap.rates = {{"b", Rational(-1, 2)}, {"a", Rational(3, 4)}};
    CHECK(!drift_speed_audit(Timeline{c, 0, {fast_gap}}, rate).passed());

    DriftSegment wrong_window = window_follows;
    wrong_window.upper_rate = 0;
    CHECK(!drift_speed_audit(Timeline{c, 0, {wrong_window}}, rate).passed());
}

TEST_CASE("vineyard rows follow the bars") {
    auto tl = fixtures::death_timeline();
    auto rows = vineyard(simulate(tl));
    REQUIRE(!rows.empty());
    CHECK(rows.front().time == 0);
    std::set<std::size_t> ids;
    for (const auto& r : rows) ids.insert(r.bar_id);
    CHECK(ids.size() == 2);
}
