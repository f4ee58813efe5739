#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "actionwin/barcode.hpp"
#include "actionwin/displacement.hpp"
#include "actionwin/fixtures.hpp"
#include "actionwin/linearization.hpp"
#include "actionwin/pwc.hpp"
#include "actionwin/random.hpp"
#include "oracle.hpp"

using namespace actionwin;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

double millis(Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

const std::vector<FieldSpec>& fields() {
    static const std::vector<FieldSpec> f{FieldSpec::f2(), FieldSpec::fp(5), FieldSpec::rationals()};
    return f;
}

bool report(int number, const std::string& name, double limit_ms, const std::function<Outcome()>& body) {
    Outcome out;
    auto start = Clock::now();
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double elapsed = millis(Clock::now() - start);
    bool in_time = elapsed < limit_ms;
    bool pass = out.ok && in_time;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (pass ? "PASS" : "FAIL") << " [" << number << "] " << name << ": " << out.detail << " (" << elapsed
         << " ms, limit " << limit_ms << " ms" << (in_time ? "" : ", over time") << ")";
    std::cout << line.str() << std::endl;
    return pass;
}

Outcome closed_form() {
    Barcode one_expected{Bar{Action(2), Action::pos_inf(), 1}};
    Barcode pair_expected{Bar{Action(1), Action(2), 0}};
    auto one = fixtures::one_generator();
    auto pair = fixtures::acyclic_pair();
    double worst = 0;
    bool ok = true;
    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = Clock::now();
        ok &= barcode(one) == one_expected;
        auto t1 = Clock::now();
        ok &= barcode(pair) == pair_expected;
        auto t2 = Clock::now();
        if (rep > 0) worst = std::max({worst, millis(t1 - t0), millis(t2 - t1)});
    }
    std::ostringstream s;
    s << "one generator {[2, inf) deg 1}, acyclic pair {[1, 2) deg 0}; slowest " << worst << " ms";
    return {ok && worst < 1.0, s.str()};
}

Outcome oracle_equivalence() {
    std::size_t mismatches = 0, total = 0, max_size = 0;
    for (std::size_t f = 0; f < fields().size(); ++f) {
        Rng rng(1000 + f);
        for (int i = 0; i < 500; ++i) {
            auto c = random_complex(fields()[f], rng);
            max_size = std::max(max_size, c.size());
            mismatches += !(barcode_from_canonical(canonical_form(c), c) == barcode_definitional(c));
            ++total;
        }
    }
    return {mismatches == 0 && max_size <= 20, std::to_string(total) + " complexes over F2, F5, Q (max " +
                                                    std::to_string(max_size) + " generators), " +
                                                    std::to_string(mismatches) + " mismatches"};
}

Outcome recovery() {
    Rng rng(2000);
    std::size_t failures = 0;
    for (int i = 0; i < 200; ++i) {
        auto b = random_barcode(rng);
        failures += !(recover(extract(b)) == intervals(b));
    }
    return {failures == 0, "200 random barcodes, " + std::to_string(failures) + " roundtrip failures"};
}

Outcome timelines() {
    std::size_t failures = 0, events = 0, max_events = 0, max_gens = 0;
    std::size_t kinds[7] = {};
    for (int i = 0; i < 500; ++i) {
        Rng rng(3000 + i);
        auto tl = random_timeline(fields()[i % 3], rng);
        auto trace = simulate(tl);
        auto report = check_transitions(trace, tl);
        failures += !report.all_passed();
        events += trace.events.size();
        max_events = std::max(max_events, trace.events.size());
        for (const auto& s : trace.samples) max_gens = std::max(max_gens, s.complex.size());
        for (const auto& item : tl.items)
            if (auto ev = std::get_if<SingularEvent>(&item)) ++kinds[ev->kind.index()];
    }
    bool all_kinds = true;
    for (auto k : kinds) all_kinds &= k > 0;
    std::string kind_counts;
    for (auto k : kinds) kind_counts += " " + std::to_string(k);
    return {failures == 0 && max_events <= 10 && max_gens <= 12 && all_kinds,
            "500 timelines, " + std::to_string(events) + " events (max " + std::to_string(max_events) +
                " per timeline, max " + std::to_string(max_gens) + " generators, all kinds " +
                (all_kinds ? "present" : "NOT present") + " [" + kind_counts + " ]" + "), " + std::to_string(failures) + " failing timelines"};
}

Outcome invariance() {
    std::size_t changed = 0, rank_mismatches = 0, probes = 0;
    Rng rng(4000);
    for (int i = 0; i < 200; ++i) {
        auto c = random_complex(fields()[i % 3], rng);
        auto m = random_action_preserving_matrix(c, rng);
        changed += !(barcode(c.change_basis(m)) == barcode(c));
    }
    for (int i = 0; i < 200; ++i) {
        auto c = random_complex(fields()[i % 3], rng);
        auto bars = barcode(c);
        auto values = oracle::distinct_actions(c);
        for (int trial = 0; trial < 3; ++trial) {
            Rational lo = values[index(rng, values.size())] + ratio(index(rng, 3), 8);
            Rational hi = values[index(rng, values.size())] + ratio(index(rng, 3), 8);
            if (hi < lo) std::swap(lo, hi);
            Rational level = hi + Rational(1, 16);
            for (int d : c.degrees()) {
                Barcode deg;
                for (const auto& b : bars)
                    if (b.degree == d) deg.push_back(b);
                ++probes;
                rank_mismatches +=
                    persisting_count(deg, Action(level), Action(lo)) != oracle::image_rank(c, d, Action(lo), Action(level));
            }
        }
    }
    return {changed == 0 && rank_mismatches == 0,
            "200 conjugations, " + std::to_string(changed) + " changed barcodes; " + std::to_string(probes) +
                " sublevel-rank probes on 200 complexes, " + std::to_string(rank_mismatches) + " mismatches"};
}

bool within_slack(const DgaMorphism& phi, const ChordDGA& source, const ChordDGA& target, const Rational& slack) {
    for (const auto& c : source.chords()) {
        if (target.length(phi.image(c.label)) > c.length + slack) return false;
        if (!(phi.apply(source.differential(c.label)) == target.apply(phi.image(c.label)))) return false;
    }
    return true;
}

Outcome dga_layer() {
    std::size_t square_failures = 0, windows = 0, wide_missed = 0, morphism_failures = 0, morphisms = 0;
    Rng rng(5000);
    for (int i = 0; i < 200; ++i) {
        auto r = random_two_component_dga(fields()[i % 3], rng);
        for (int w = 0; w < 3; ++w) {
            Rational a(ratio(uniform(rng, 0, 40), 2)), width(ratio(uniform(rng, 1, 20), 2));
            Rational l = width + ratio(uniform(rng, 0, 4), 2);
            auto eps = restrict_augmentation(r.dga, r.augmentation, Action(l));
            auto c = partial_linearization(r.dga, eps, Action(a), Action(Rational(a + width)), Action(l));
            ++windows;
            for (const auto& g : c.generators()) square_failures += !c.apply_differential(c.boundary(g.id)).is_zero();
            try {
                partial_linearization(r.dga, eps, Action(a), Action(Rational(a + l + Rational(1, 2))), Action(l));
                ++wide_missed;
            } catch (const Error& e) {
                wide_missed += e.code() != ErrorCode::WindowTooWide;
            }
        }
    }
    for (const auto& field : fields()) {
        for (auto fx : {fixtures::handle_slide_unit(field), fixtures::handle_slide_word(field)}) {
            auto phi = handle_slide_morphism(fx.minus, fx.plus, fx.a, fx.word, fx.unit);
            ++morphisms;
            morphism_failures += !within_slack(phi, fx.minus, fx.plus, Rational(0));
        }
        for (auto fx : {fixtures::birth_example(field), fixtures::birth_bare(field)}) {
            auto bm = birth_morphism(fx.minus_stabilized, fx.plus, fx.a, fx.b, fx.ordering, fx.unit);
            Rational slack = fx.plus.chord(fx.a).length - fx.plus.chord(fx.b).length;
            ++morphisms;
            morphism_failures += !(bm.slack == slack) || !within_slack(bm.map, fx.minus_stabilized, fx.plus, slack);
        }
    }
    return {square_failures == 0 && wide_missed == 0 && morphism_failures == 0,
            std::to_string(windows) + " linearizations of 200 DGAs, " + std::to_string(square_failures) +
                " d^2 failures, " + std::to_string(wide_missed) + " missed WindowTooWide; " +
                std::to_string(morphisms) + " fixture morphisms, " + std::to_string(morphism_failures) + " failures"};
}

Outcome displacement() {
    bool schedule_ok = true;
    for (long an = 1; an <= 5; ++an) {
        for (long sn = 0; sn < 5; ++sn) {
            Rational a(ratio(an * 3, 2)), s(ratio(sn, 5));
            schedule_ok &= oscillation(rescaling_schedule(a, s), s) == s * a;
        }
    }
    Rng rng(6000);
    std::size_t drift_failures = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<ProfileSample<Rational>> samples;
        std::vector<std::pair<Rational, Rational>> end, start;
        for (long k = 0; k <= 4; ++k) {
            Rational t(ratio(k, 4)), hi(ratio(uniform(rng, 0, 12), 4)), lo(ratio(-uniform(rng, 0, 12), 4));
            samples.push_back({t, hi, lo});
            end.push_back({t, lo + ratio(uniform(rng, 0, 8), 8) * (hi - lo)});
            start.push_back({t, lo + ratio(uniform(rng, 0, 8), 8) * (hi - lo)});
        }
        auto d = chord_drift(Rational(uniform(rng, 1, 20)), PiecewiseLinear<Rational>(end),
                             PiecewiseLinear<Rational>(start), OscillationProfile<Rational>(samples));
        drift_failures += !(abs(d.delta) <= d.oscillation);
    }
    Rational a(3);
    SigmaProfile sphere{{Action(a), Action::pos_inf(), Action(a)}};
    BettiProfile sphere_b{{1, 0, 1}};
    bool ex13 = theorem_bound(sphere, sphere_b, Action::pos_inf(), a - Rational(1, 10)).count == 2 &&
                theorem_bound(sphere, sphere_b, Action::pos_inf(), a).count == 0;
    Rational l = std::min(Rational(1), Rational(2));
    auto ex14 = theorem_bound({{Action::pos_inf(), Action::pos_inf()}}, {{1, 1}}, Action(l), l - Rational(1, 10));
    bool ex14_ok = ex14.count == 2 && ex14.binding == "l";
    return {schedule_ok && drift_failures == 0 && ex13 && ex14_ok,
            std::string("schedule osc = s*a ") + (schedule_ok ? "exact" : "WRONG") + "; 200 drifts, " +
                std::to_string(drift_failures) + " violations; sphere counts 2/0 " + (ex13 ? "ok" : "WRONG") +
                "; stabilized unknot count 2, binding l " + (ex14_ok ? "ok" : "WRONG")};
}

Outcome long_bars() {
    std::size_t counterexamples = 0;
    for (int i = 0; i < 100; ++i) {
        Rng rng(7000 + i);
        Rational l(uniform(rng, 1, 8)), gap(ratio(uniform(rng, 2, 12), 2)), width(ratio(uniform(rng, 1, 4), 2));
        auto c = random_two_cluster_complex(fields()[i % 3], rng, l, gap, width);
        counterexamples += long_bar_witness(barcode(c), gap).empty();
    }
    return {counterexamples == 0, "100 two-cluster fixtures, " + std::to_string(counterexamples) + " counterexamples"};
}

}  // namespace

int main() {
    bool all = true;
    all &= report(1, "closed-form barcodes", 1000, closed_form);
    all &= report(2, "canonical vs definitional barcodes", 60000, oracle_equivalence);
    all &= report(3, "recover o extract roundtrip", 5000, recovery);
    all &= report(4, "timeline transition rules", 120000, timelines);
    all &= report(5, "base-change invariance and sublevel ranks", 60000, invariance);
    all &= report(6, "partial linearization and morphisms", 60000, dga_layer);
    all &= report(7, "displacement arithmetic", 60000, displacement);
    all &= report(8, "long bar in two-cluster complexes", 60000, long_bars);
    std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
    return all ? 0 : 1;
}
