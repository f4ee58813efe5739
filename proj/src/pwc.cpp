#include "actionwin/pwc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "actionwin/error.hpp"

namespace actionwin {

Rational DriftSegment::rate_of(const std::string& id) const {
    auto it = rates.find(id);
    return it == rates.end() ? Rational(0) : it->second;
}

std::string SingularEvent::kind_name() const {
    static const char* names[] = {"HandleSlide", "Birth", "Death", "ExitBelow", "EntryBelow", "ExitAbove", "EntryAbove"};
    return names[kind.index()];
}

bool TransitionReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const TransitionCheck& c) { return c.passed; });
}

namespace {

struct State {
    FieldSpec field;
    Action lower;
    Action upper;
    std::map<std::string, Generator> gens;
    std::map<std::string, ChainVector> diff;
};

State state_of(const FilteredComplex& c) {
    State s{c.field(), c.window().lower, c.window().upper, {}, c.differential_map()};
    for (const auto& g : c.generators()) s.gens.emplace(g.id, g);
    return s;
}

std::string item_label(std::size_t index, const Rational& t) {
    return "item " + std::to_string(index) + " (t=" + to_string(t) + ")";
}

[[noreturn]] void fail(ErrorCode code, std::size_t index, const Rational& t, const std::string& message,
                       const std::string& witness = {}) {
    throw Error(code, item_label(index, t) + ": " + message, witness.empty() ? std::to_string(index) : witness);
}

FilteredComplex materialize(const State& s, std::size_t index, const Rational& t) {
    std::vector<Generator> gens;
    for (const auto& [id, g] : s.gens) gens.push_back(g);
    try {
        return FilteredComplex::build(s.field, Window{s.lower, s.upper}, std::move(gens), s.diff);
    } catch (const Error& e) {
        ErrorCode code = ErrorCode::EventPreconditionViolated;
        if (e.code() == ErrorCode::ActionOutsideWindow || e.code() == ErrorCode::InvalidWindow) {
            code = ErrorCode::ActionWindowViolation;
        } else if (e.code() == ErrorCode::ActionIncrease) {
            code = ErrorCode::NonGenericCrossing;
        }
        fail(code, index, t, std::string("invalid complex: ") + e.what(), e.witness());
    }
}

Action moved(const Action& a, const Rational& rate, const Rational& dt) {
    if (!a.is_finite()) return a;
    return Action(Rational(a.value() + rate * dt));
}

State advance(const State& s, const DriftSegment& d, const Rational& dt) {
    State out = s;
    for (auto& [id, g] : out.gens) g.action += d.rate_of(id) * dt;
    out.lower = moved(s.lower, d.lower_rate, dt);
    out.upper = moved(s.upper, d.upper_rate, dt);
    return out;
}

const SingularEvent* as_event(const std::vector<TimelineItem>& items, std::size_t index) {
    if (index >= items.size()) return nullptr;
    return std::get_if<SingularEvent>(&items[index]);
}

// Positive on the open interval between two endpoint values of a linear function.
bool positive_inside(const Rational& v0, const Rational& v1) {
    return v0 >= 0 && v1 >= 0 && (v0 > 0 || v1 > 0);
}

void check_drift(const State& start, const State& end, const DriftSegment& d, std::size_t index,
                 const SingularEvent* previous, const SingularEvent* next) {
    if ((!start.lower.is_finite() && d.lower_rate != 0) || (!start.upper.is_finite() && d.upper_rate != 0)) {
        fail(ErrorCode::ActionWindowViolation, index, d.t0, "an infinite window end cannot move");
    }
    if (end.upper < end.lower) fail(ErrorCode::ActionWindowViolation, index, d.t1, "window collapses past empty");

    auto entered_above = [&](const std::string& id) {
        if (!previous) return false;
        auto e = std::get_if<EntryAbove>(&previous->kind);
        return e && e->generator.id == id;
    };
    auto exits_above = [&](const std::string& id) {
        if (!next) return false;
        auto e = std::get_if<ExitAbove>(&next->kind);
        return e && e->id == id;
    };
    auto born = [&](const std::string& x, const std::string& y) {
        if (!previous) return false;
        auto e = std::get_if<Birth>(&previous->kind);
        return e && e->x == x && e->y == y;
    };
    auto dies = [&](const std::string& x, const std::string& y) {
        if (!next) return false;
        auto e = std::get_if<Death>(&next->kind);
        return e && e->x == x && e->y == y;
    };

    for (const auto& [id, g] : start.gens) {
        const Rational& l0 = g.action;
        const Rational& l1 = end.gens.at(id).action;
        if (start.lower.is_finite()) {
            if (l0 < start.lower.value() || l1 < end.lower.value()) {
                fail(ErrorCode::ActionWindowViolation, index, d.t0,
                     "'" + id + "' falls below the window without an ExitBelow event", id);
            }
        }
        if (start.upper.is_finite()) {
            Rational u0 = start.upper.value() - l0;
            Rational u1 = end.upper.value() - l1;
            bool ok = positive_inside(u0, u1) && (u0 > 0 || entered_above(id)) && (u1 > 0 || exits_above(id));
            if (!ok) {
                fail(ErrorCode::ActionWindowViolation, index, d.t0,
                     "'" + id + "' reaches the upper window end without an exit/entry event", id);
            }
        }
    }
    for (const auto& [x, chain] : start.diff) {
        for (const auto& [y, coeff] : chain.terms()) {
            Rational g0 = start.gens.at(x).action - start.gens.at(y).action;
            Rational g1 = end.gens.at(x).action - end.gens.at(y).action;
            bool ok = positive_inside(g0, g1) && (g0 > 0 || born(x, y)) && (g1 > 0 || dies(x, y));
            if (!ok) {
                fail(ErrorCode::NonGenericCrossing, index, d.t0,
                     "'" + y + "' in d(" + x + ") does not stay strictly below '" + x + "'", x + "," + y);
            }
        }
    }
    for (auto i = start.gens.begin(); i != start.gens.end(); ++i) {
        for (auto j = std::next(i); j != start.gens.end(); ++j) {
            Rational f0 = i->second.action - j->second.action;
            Rational f1 = end.gens.at(i->first).action - end.gens.at(j->first).action;
            if (sgn(f0) * sgn(f1) < 0) {
                fail(ErrorCode::NonGenericCrossing, index, d.t0,
                     "'" + i->first + "' and '" + j->first + "' cross strictly inside the segment",
                     i->first + "," + j->first);
            }
        }
    }
}

void require_fresh(const State& s, const std::string& id, std::size_t index, const Rational& t) {
    if (s.gens.count(id)) fail(ErrorCode::EventPreconditionViolated, index, t, "'" + id + "' already exists", id);
}

const Generator& require_existing(const State& s, const std::string& id, std::size_t index, const Rational& t) {
    auto it = s.gens.find(id);
    if (it == s.gens.end()) {
        fail(ErrorCode::EventPreconditionViolated, index, t, "'" + id + "' is not a current generator", id);
    }
    return it->second;
}

void require_alone_at(const State& s, const Rational& level, const std::set<std::string>& subjects,
                      std::size_t index, const Rational& t) {
    for (const auto& [id, g] : s.gens) {
        if (g.action == level && !subjects.count(id)) {
            fail(ErrorCode::NonGenericCrossing, index, t,
                 "'" + id + "' shares the event level " + to_string(level), id);
        }
    }
}

void require_square_zero(const State& s, std::size_t index, const Rational& t) {
    for (const auto& [id, chain] : s.diff) {
        ChainVector dd;
        for (const auto& [term, coeff] : chain.terms()) {
            auto it = s.diff.find(term);
            if (it != s.diff.end()) dd += it->second.scaled(coeff);
        }
        if (!dd.is_zero()) {
            fail(ErrorCode::EventPreconditionViolated, index, t, "d(d(" + id + ")) != 0 after the event", id);
        }
    }
}

void erase_terms(State& s, const std::string& id) {
    s.diff.erase(id);
    for (auto it = s.diff.begin(); it != s.diff.end();) {
        ChainVector kept;
        for (const auto& [term, coeff] : it->second.terms()) {
            if (term != id) kept.add(term, coeff);
        }
        if (kept.is_zero()) {
            it = s.diff.erase(it);
        } else {
            it->second = std::move(kept);
            ++it;
        }
    }
}

void apply_event(State& s, const SingularEvent& ev, std::size_t index) {
    const Rational& t = ev.time;
    auto pre = [&](const std::string& msg, const std::string& witness = {}) {
        fail(ErrorCode::EventPreconditionViolated, index, t, msg, witness);
    };

    if (auto hs = std::get_if<HandleSlide>(&ev.kind)) {
        const Generator& target = require_existing(s, hs->target, index, t);
        if (hs->unit.is_zero() || !(hs->unit.field() == s.field)) pre("handle-slide unit must be a nonzero scalar of " + s.field.tag());
        for (const auto& [id, coeff] : hs->addend.terms()) {
            const Generator& h = require_existing(s, id, index, t);
            if (id == hs->target) pre("handle-slide addend contains the target", id);
            if (h.degree != target.degree) pre("addend '" + id + "' has a different degree than the target", id);
            if (h.action > target.action) pre("addend '" + id + "' has larger action than the target", id);
            if (!(coeff.field() == s.field)) pre("addend coefficient over the wrong field", id);
        }
        FilteredComplex c = materialize(s, index, t);
        Matrix b = Matrix::identity(c.field(), c.size());
        std::size_t col = c.index_of(hs->target);
        for (const auto& [id, coeff] : hs->addend.terms()) b.at(c.index_of(id), col) += hs->unit * coeff;
        s.diff = c.change_basis(b).differential_map();
        return;
    }
    if (auto birth = std::get_if<Birth>(&ev.kind)) {
        require_fresh(s, birth->x, index, t);
        require_fresh(s, birth->y, index, t);
        if (birth->x == birth->y) pre("birth pair needs two distinct ids");
        if (birth->unit.is_zero() || !(birth->unit.field() == s.field)) pre("birth unit must be a nonzero scalar of " + s.field.tag());
        if (!Window{s.lower, s.upper}.contains(birth->action)) {
            fail(ErrorCode::ActionWindowViolation, index, t, "birth level " + to_string(birth->action) + " outside the window");
        }
        require_alone_at(s, birth->action, {}, index, t);
        s.gens.emplace(birth->x, Generator{birth->x, birth->action, birth->degree_x});
        s.gens.emplace(birth->y, Generator{birth->y, birth->action, birth->degree_x - 1});
        s.diff[birth->x] = ChainVector{{birth->y, birth->unit}};
        return;
    }
    if (auto death = std::get_if<Death>(&ev.kind)) {
        const Generator& x = require_existing(s, death->x, index, t);
        const Generator& y = require_existing(s, death->y, index, t);
        if (x.action != y.action) pre("death pair is not at a common action", death->x + "," + death->y);
        require_alone_at(s, x.action, {death->x, death->y}, index, t);
        auto dx = s.diff.find(death->x);
        if (dx == s.diff.end() || dx->second.size() != 1 || !dx->second.coefficient(death->y)) {
            pre("d(" + death->x + ") is not a unit multiple of " + death->y, death->x);
        }
        if (s.diff.count(death->y)) pre("d(" + death->y + ") != 0", death->y);
        for (const auto& [id, chain] : s.diff) {
            if (id == death->x) continue;
            if (chain.coefficient(death->x) || chain.coefficient(death->y)) {
                pre("pair is not a direct summand: d(" + id + ") involves it", id);
            }
        }
        s.diff.erase(death->x);
        s.gens.erase(death->x);
        s.gens.erase(death->y);
        return;
    }
    if (auto exit = std::get_if<ExitBelow>(&ev.kind)) {
        const Generator& g = require_existing(s, exit->id, index, t);
        if (!s.lower.is_finite() || g.action != s.lower.value()) {
            pre("'" + exit->id + "' is not at the lower window end " + to_string(s.lower), exit->id);
        }
        require_alone_at(s, g.action, {exit->id}, index, t);
        erase_terms(s, exit->id);
        s.gens.erase(exit->id);
        return;
    }
    if (auto entry = std::get_if<EntryBelow>(&ev.kind)) {
        const Generator& g = entry->generator;
        require_fresh(s, g.id, index, t);
        if (!s.lower.is_finite() || g.action != s.lower.value()) {
            pre("'" + g.id + "' does not enter at the lower window end " + to_string(s.lower), g.id);
        }
        require_alone_at(s, g.action, {}, index, t);
        for (const auto& [z, coeff] : entry->incoming.terms()) {
            const Generator& zg = require_existing(s, z, index, t);
            if (zg.degree != g.degree + 1) pre("d(" + z + ") cannot contain '" + g.id + "': degree mismatch", z);
            if (!(coeff.field() == s.field)) pre("coefficient over the wrong field", z);
        }
        s.gens.emplace(g.id, g);
        for (const auto& [z, coeff] : entry->incoming.terms()) s.diff[z].add(g.id, coeff);
        require_square_zero(s, index, t);
        return;
    }
    if (auto exit = std::get_if<ExitAbove>(&ev.kind)) {
        const Generator& g = require_existing(s, exit->id, index, t);
        if (!s.upper.is_finite() || g.action != s.upper.value()) {
            pre("'" + exit->id + "' is not at the upper window end " + to_string(s.upper), exit->id);
        }
        require_alone_at(s, g.action, {exit->id}, index, t);
        erase_terms(s, exit->id);
        s.gens.erase(exit->id);
        return;
    }
    if (auto entry = std::get_if<EntryAbove>(&ev.kind)) {
        const Generator& g = entry->generator;
        require_fresh(s, g.id, index, t);
        if (!s.upper.is_finite() || g.action != s.upper.value()) {
            pre("'" + g.id + "' does not enter at the upper window end " + to_string(s.upper), g.id);
        }
        require_alone_at(s, g.action, {}, index, t);
        for (const auto& [y, coeff] : entry->boundary.terms()) {
            const Generator& yg = require_existing(s, y, index, t);
            if (yg.degree != g.degree - 1) pre("d(" + g.id + ") term '" + y + "' has the wrong degree", y);
            if (!(coeff.field() == s.field)) pre("coefficient over the wrong field", y);
        }
        s.gens.emplace(g.id, g);
        if (!entry->boundary.is_zero()) s.diff[g.id] = entry->boundary;
        require_square_zero(s, index, t);
        return;
    }
}

Sample make_sample(const State& s, const Rational& t, std::string label, std::map<std::string, Rational> rates,
                   std::size_t index, const SimulateOptions& options) {
    FilteredComplex c = materialize(s, index, t);
    BarannikovForm form;
    Barcode bars;
    if (options.compute_barcodes) {
        form = canonical_form(c);
        bars = barcode_from_canonical(form, c);
    }
    return Sample{t, std::move(label), std::move(c), std::move(form), std::move(bars), std::move(rates)};
}

}  // namespace

FamilyTrace simulate(const Timeline& timeline, const SimulateOptions& options) {
    FamilyTrace trace;
    State state = state_of(timeline.initial);
    Rational clock = timeline.start_time;
    trace.samples.push_back(make_sample(state, clock, "initial", {}, 0, options));

    std::size_t last_sample = 0;
    bool previous_was_event = false;
    std::optional<std::size_t> pending_after;
    std::size_t event_count = 0;
    const auto& items = timeline.items;

    for (std::size_t index = 0; index < items.size(); ++index) {
        if (auto drift = std::get_if<DriftSegment>(&items[index])) {
            if (drift->t0 != clock) {
                fail(ErrorCode::EventPreconditionViolated, index, drift->t0,
                     "drift starts at " + to_string(drift->t0) + " but the family is at t=" + to_string(clock));
            }
            if (drift->t1 <= drift->t0) {
                fail(ErrorCode::EventPreconditionViolated, index, drift->t0, "drift segment has no positive length");
            }
            for (const auto& [id, rate] : drift->rates) {
                if (!state.gens.count(id)) {
                    fail(ErrorCode::EventPreconditionViolated, index, drift->t0,
                         "rate given for unknown generator '" + id + "'", id);
                }
            }
            const Rational length = drift->t1 - drift->t0;
            State end = advance(state, *drift, length);
            const SingularEvent* previous = index > 0 ? as_event(items, index - 1) : nullptr;
            const SingularEvent* next = as_event(items, index + 1);
            check_drift(state, end, *drift, index, previous, next);

            SegmentRecord seg{index, drift->t0, drift->t1, 0, {}};
            if (!previous_was_event) seg.samples.push_back(last_sample);
            Rational mid = (drift->t0 + drift->t1) / 2;
            trace.samples.push_back(make_sample(advance(state, *drift, Rational(length / 2)), mid,
                                                "segment " + std::to_string(index) + " midpoint", drift->rates,
                                                index, options));
            seg.midpoint = trace.samples.size() - 1;
            seg.samples.push_back(seg.midpoint);
            if (pending_after) {
                trace.events[*pending_after].after = seg.midpoint;
                pending_after.reset();
            }
            state = std::move(end);
            clock = drift->t1;
            if (next) {
                last_sample = seg.midpoint;
            } else {
                trace.samples.push_back(make_sample(state, clock, "segment " + std::to_string(index) + " end",
                                                    drift->rates, index, options));
                last_sample = trace.samples.size() - 1;
                seg.samples.push_back(last_sample);
            }
            trace.segments.push_back(std::move(seg));
            previous_was_event = false;
            continue;
        }

        const auto& ev = std::get<SingularEvent>(items[index]);
        if (previous_was_event) {
            fail(ErrorCode::SimultaneousBifurcations, index, ev.time,
                 "two events without a drift between them (both at t=" + to_string(clock) + ")");
        }
        if (ev.time != clock) {
            fail(ErrorCode::EventPreconditionViolated, index, ev.time,
                 "event time does not match the family clock t=" + to_string(clock));
        }
        apply_event(state, ev, index);
        ++event_count;
        trace.events.push_back(EventRecord{index, event_count, ev.time, last_sample, 0});
        pending_after = trace.events.size() - 1;
        previous_was_event = true;
    }

    if (pending_after) {
        const auto& rec = trace.events[*pending_after];
        trace.samples.push_back(
            make_sample(state, clock, "after event " + std::to_string(rec.event_number), {}, rec.item_index, options));
        trace.events[*pending_after].after = trace.samples.size() - 1;
    }
    return trace;
}

Barcode transported_barcode(const Sample& sample, const Rational& t) {
    const Rational dt = t - sample.time;
    auto level = [&](const std::string& id) {
        auto it = sample.rates.find(id);
        Rational rate = it == sample.rates.end() ? Rational(0) : it->second;
        return Action(Rational(sample.complex.generator(id).action + rate * dt));
    };
    Barcode bars;
    for (const auto& [x, y] : sample.form.pairs) {
        bars.push_back({level(y), level(x), sample.complex.generator(y).degree});
    }
    for (const auto& e : sample.form.unpaired) {
        bars.push_back({level(e), Action::pos_inf(), sample.complex.generator(e).degree});
    }
    return sorted(std::move(bars));
}

namespace {

std::string describe(const Barcode& bars) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < bars.size(); ++i) os << (i ? ", " : "") << to_string(bars[i]);
    os << "}";
    return os.str();
}

Barcode with(Barcode bars, const Bar& extra) {
    bars.push_back(extra);
    return sorted(std::move(bars));
}

std::optional<Barcode> without(Barcode bars, const Bar& gone) {
    auto it = std::find(bars.begin(), bars.end(), gone);
    if (it == bars.end()) return std::nullopt;
    bars.erase(it);
    return bars;
}

// The bar in which generator `id` is an endpoint, evaluated at time t.
std::optional<Bar> bar_of(const Sample& s, const std::string& id, const Rational& t) {
    const Rational dt = t - s.time;
    auto level = [&](const std::string& g) {
        auto it = s.rates.find(g);
        Rational rate = it == s.rates.end() ? Rational(0) : it->second;
        return Action(Rational(s.complex.generator(g).action + rate * dt));
    };
    for (const auto& [x, y] : s.form.pairs) {
        if (x == id || y == id) return Bar{level(y), level(x), s.complex.generator(y).degree};
    }
    for (const auto& e : s.form.unpaired) {
        if (e == id) return Bar{level(e), Action::pos_inf(), s.complex.generator(e).degree};
    }
    return std::nullopt;
}

struct Prediction {
    std::string rule;
    std::optional<Barcode> expected;
    std::string problem;
};

// Barcode after `g` leaves at the bottom, given the barcode before.
Prediction exit_below_rule(const Barcode& before, const std::optional<Bar>& bar, const Action& level) {
    if (!bar || bar->start != level) return {"exit below", std::nullopt, "generator does not start a bar at the exit level"};
    if (endpoints_at(before, level) != 1) return {"exit below", std::nullopt, "bar at the exit level is not unique"};
    auto rest = without(before, *bar);
    if (bar->is_infinite()) return {"infinite bar disappears", rest, {}};
    return {"finite bar replaced by infinite bar", with(*rest, Bar{bar->end, Action::pos_inf(), bar->degree + 1}), {}};
}

Prediction exit_above_rule(const Barcode& before, const std::optional<Bar>& bar, const Action& level) {
    if (!bar) return {"exit above", std::nullopt, "generator has no bar"};
    if (endpoints_at(before, level) != 1) return {"exit above", std::nullopt, "bar at the exit level is not unique"};
    auto rest = without(before, *bar);
    if (bar->end == level) return {"finite bar becomes infinite", with(*rest, Bar{bar->start, Action::pos_inf(), bar->degree}), {}};
    if (bar->start == level && bar->is_infinite()) return {"infinite bar disappears", rest, {}};
    return {"exit above", std::nullopt, "generator's bar neither ends nor starts at the exit level"};
}

TransitionCheck compare(std::string scope, const Rational& t, const Prediction& p, const Barcode& actual) {
    TransitionCheck check{std::move(scope), t, p.rule, false, {}};
    if (!p.expected) {
        check.detail = p.problem;
        return check;
    }
    check.passed = *p.expected == actual;
    if (!check.passed) check.detail = "expected " + describe(*p.expected) + ", got " + describe(actual);
    return check;
}

}  // namespace

TransitionReport check_transitions(const FamilyTrace& trace, const Timeline& timeline) {
    TransitionReport report;
    for (const auto& rec : trace.events) {
        const auto& ev = std::get<SingularEvent>(timeline.items[rec.item_index]);
        const Sample& before_sample = trace.samples[rec.before];
        const Sample& after_sample = trace.samples[rec.after];
        const Rational& t = rec.time;
        Barcode before = transported_barcode(before_sample, t);
        Barcode after = transported_barcode(after_sample, t);
        std::string scope = "event " + std::to_string(rec.event_number) + " (" + ev.kind_name() + ")";

        if (std::holds_alternative<HandleSlide>(ev.kind)) {
            report.checks.push_back(compare(scope, t, {"unaffected", before, {}}, after));
        } else if (auto b = std::get_if<Birth>(&ev.kind)) {
            Bar added{Action(b->action), Action(b->action), b->degree_x - 1};
            report.checks.push_back(compare(scope, t, {"bar added", with(before, added), {}}, after));
        } else if (auto d = std::get_if<Death>(&ev.kind)) {
            auto bar = bar_of(before_sample, d->y, t);
            Prediction p{"bar removed", std::nullopt, "pair has no bar"};
            if (bar && bar_of(before_sample, d->x, t) == bar && bar->start == bar->end) {
                p.expected = without(before, *bar);
            }
            report.checks.push_back(compare(scope, t, p, after));
        } else if (auto e = std::get_if<ExitBelow>(&ev.kind)) {
            auto bar = bar_of(before_sample, e->id, t);
            report.checks.push_back(compare(scope, t, exit_below_rule(before, bar, bar ? bar->start : Action()), after));
        } else if (auto e = std::get_if<EntryBelow>(&ev.kind)) {
            auto bar = bar_of(after_sample, e->generator.id, t);
            Prediction p = exit_below_rule(after, bar, Action(e->generator.action));
            p.rule = "reverse of " + p.rule;
            report.checks.push_back(compare(scope, t, p, before));
        } else if (auto e = std::get_if<ExitAbove>(&ev.kind)) {
            auto bar = bar_of(before_sample, e->id, t);
            Action level(Rational(before_sample.complex.generator(e->id).action +
                                  (before_sample.rates.count(e->id) ? before_sample.rates.at(e->id) : Rational(0)) *
                                      (t - before_sample.time)));
            report.checks.push_back(compare(scope, t, exit_above_rule(before, bar, level), after));
        } else if (auto e = std::get_if<EntryAbove>(&ev.kind)) {
            auto bar = bar_of(after_sample, e->generator.id, t);
            Prediction p = exit_above_rule(after, bar, Action(e->generator.action));
            p.rule = "reverse of " + p.rule;
            report.checks.push_back(compare(scope, t, p, before));
        }
    }

    for (const auto& seg : trace.segments) {
        const Sample& mid = trace.samples[seg.midpoint];
        for (auto idx : seg.samples) {
            const Sample& s = trace.samples[idx];
            Barcode predicted = transported_barcode(mid, s.time);
            report.checks.push_back(compare("segment " + std::to_string(seg.item_index), s.time,
                                            {"continuous", predicted, {}}, s.barcode));
        }
    }
    return report;
}

AuditReport drift_speed_audit(const Timeline& timeline, const PiecewiseLinear<Rational>& oscillation_rate) {
    AuditReport report;
    const auto& items = timeline.items;
    for (std::size_t index = 0; index < items.size(); ++index) {
        if (auto ev = std::get_if<SingularEvent>(&items[index])) {
            auto entry = std::get_if<EntryBelow>(&ev->kind);
            if (!entry) continue;
            const auto* next = index + 1 < items.size() ? std::get_if<DriftSegment>(&items[index + 1]) : nullptr;
            if (!next) {
                report.flags.push_back({index, entry->generator.id, "entry below with no drift carrying it into the window"});
            } else if (next->rate_of(entry->generator.id) <= next->lower_rate) {
                report.flags.push_back({index, entry->generator.id,
                                        "entry below forbidden by declared rates: chord rate " +
                                            to_string(next->rate_of(entry->generator.id)) +
                                            " does not exceed the lower window rate " + to_string(next->lower_rate)});
            }
            continue;
        }
        const auto& d = std::get<DriftSegment>(items[index]);
        if (!oscillation_rate.covers(d.t0) || !oscillation_rate.covers(d.t1)) {
            report.flags.push_back({index, "oscillation", "oscillation rate undefined on [" + to_string(d.t0) + ", " +
                                                             to_string(d.t1) + "]"});
            continue;
        }
        auto times = oscillation_rate.breakpoints_between(d.t0, d.t1);
        for (const auto& t : times) {
            Rational r = oscillation_rate(t);
            std::string at = " at t=" + to_string(t) + " (oscillation rate " + to_string(r) + ")";
            for (const auto& [id, rate] : d.rates) {
                if (rate > r) {
                    report.flags.push_back({index, id, "grows at rate " + to_string(rate) + at});
                } else if (rate < 0 && -rate >= r) {
                    report.flags.push_back({index, id, "shrinks at speed " + to_string(Rational(-rate)) +
                                                           ", not strictly less than the oscillation rate" + at});
                }
            }
            if (d.window_follows_oscillation && d.lower_rate - d.upper_rate != r) {
                report.flags.push_back({index, "window", "window shrinks at rate " +
                                                             to_string(Rational(d.lower_rate - d.upper_rate)) + at});
            }
            for (const auto& [x, y] : d.monitored_gaps) {
                Rational gap_rate = d.rate_of(x) - d.rate_of(y);
                if (gap_rate < -r) {
                    report.flags.push_back({index, x + "," + y, "gap changes at rate " + to_string(gap_rate) + at});
                }
            }
        }
    }
    return report;
}

std::vector<VineyardRow> vineyard(const FamilyTrace& trace) {
    struct Tracked {
        std::string start_gen;
        std::string end_gen;  // empty for infinite bars
        int degree;
        std::size_t id;
    };
    std::vector<VineyardRow> rows;
    std::vector<Tracked> previous;
    std::size_t next_id = 0;

    for (const auto& s : trace.samples) {
        std::vector<Tracked> current;
        for (const auto& [x, y] : s.form.pairs) current.push_back({y, x, s.complex.generator(y).degree, 0});
        for (const auto& e : s.form.unpaired) current.push_back({e, "", s.complex.generator(e).degree, 0});

        std::vector<bool> used(previous.size(), false), assigned(current.size(), false);
        auto match = [&](auto&& same) {
            for (std::size_t i = 0; i < current.size(); ++i) {
                if (assigned[i]) continue;
                for (std::size_t j = 0; j < previous.size(); ++j) {
                    if (used[j] || !same(current[i], previous[j])) continue;
                    current[i].id = previous[j].id;
                    used[j] = assigned[i] = true;
                    break;
                }
            }
        };
        match([](const Tracked& a, const Tracked& b) {
            return a.start_gen == b.start_gen && a.end_gen == b.end_gen && a.degree == b.degree;
        });
        match([](const Tracked& a, const Tracked& b) {
            return a.end_gen.empty() && b.end_gen.empty() && a.degree == b.degree;
        });
        match([](const Tracked& a, const Tracked& b) { return a.start_gen == b.start_gen && a.degree == b.degree; });
        for (std::size_t i = 0; i < current.size(); ++i) {
            if (!assigned[i]) current[i].id = next_id++;
        }
        std::sort(current.begin(), current.end(), [](const Tracked& a, const Tracked& b) { return a.id < b.id; });
        for (const auto& c : current) {
            Action start(s.complex.generator(c.start_gen).action);
            Action end = c.end_gen.empty() ? Action::pos_inf() : Action(s.complex.generator(c.end_gen).action);
            rows.push_back({s.time, c.id, start, end, c.degree});
        }
        previous = std::move(current);
    }
    return rows;
}

}  // namespace actionwin
