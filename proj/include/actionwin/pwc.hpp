#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "actionwin/barcode.hpp"
#include "actionwin/complex.hpp"
#include "actionwin/piecewise.hpp"

namespace actionwin {

/// Linear motion on [t0, t1]: every generator moves at its declared rate
/// (0 if absent), the window endpoints at lower_rate / upper_rate.
struct DriftSegment {
    Rational t0;
    Rational t1;
    std::map<std::string, Rational> rates;
    Rational lower_rate{0};
    Rational upper_rate{0};
    /// Declares that the window width shrinks at exactly the oscillation rate
    /// (checked by drift_speed_audit only).
    bool window_follows_oscillation = false;
    /// Pairs (x, y) whose gap l(x) - l(y) may shrink no faster than the
    /// oscillation rate (checked by drift_speed_audit only).
    std::vector<std::pair<std::string, std::string>> monitored_gaps;

    Rational rate_of(const std::string& id) const;
};

/// Base change e_target -> e_target + unit * addend. The addend lives in the
/// target's degree, has action <= action(target) and does not involve the
/// target itself.
struct HandleSlide {
    std::string target;
    ChainVector addend;
    Scalar unit;
};

/// Adjoins x (degree_x) and y (degree_x - 1), both at `action`, with
/// d(x) = unit * y. A drift separating them (x above y) must follow.
struct Birth {
    std::string x;
    std::string y;
    int degree_x = 1;
    Rational action;
    Scalar unit;
};

/// Removes the summand k x + k y; requires l(x) = l(y), d(x) = unit * y and
/// neither generator occurring in any other boundary.
struct Death {
    std::string x;
    std::string y;
};

/// The generator sits at the lower window end; the complex is replaced by the
/// quotient by it.
struct ExitBelow {
    std::string id;
};

/// A cycle generator appears at the lower window end. `incoming` lists the
/// coefficient of the new generator in d(z) for each existing z.
struct EntryBelow {
    Generator generator;
    ChainVector incoming;
};

/// The generator sits at the upper window end and is dropped.
struct ExitAbove {
    std::string id;
};

/// A generator appears at the upper window end with the given boundary.
struct EntryAbove {
    Generator generator;
    ChainVector boundary;
};

struct SingularEvent {
    Rational time;
    std::variant<HandleSlide, Birth, Death, ExitBelow, EntryBelow, ExitAbove, EntryAbove> kind;

    std::string kind_name() const;
};

using TimelineItem = std::variant<DriftSegment, SingularEvent>;

struct Timeline {
    FilteredComplex initial;
    Rational start_time{0};
    std::vector<TimelineItem> items;
};

/// State of the family at one time. `rates` holds the velocities of the
/// drift segment the sample lies in (empty when the sample is not inside a
/// segment), so the sample can be moved along its segment.
struct Sample {
    Rational time;
    std::string label;
    FilteredComplex complex;
    BarannikovForm form;
    Barcode barcode;
    std::map<std::string, Rational> rates;
};

struct EventRecord {
    std::size_t item_index = 0;
    std::size_t event_number = 0;
    Rational time;
    std::size_t before = 0;  // sample index
    std::size_t after = 0;   // sample index
};

struct SegmentRecord {
    std::size_t item_index = 0;
    Rational t0;
    Rational t1;
    std::size_t midpoint = 0;           // sample index
    std::vector<std::size_t> samples;   // all samples in [t0, t1] of this segment
};

struct FamilyTrace {
    std::vector<Sample> samples;
    std::vector<EventRecord> events;
    std::vector<SegmentRecord> segments;
};

struct SimulateOptions {
    /// When false only validity is checked; samples carry empty barcodes.
    bool compute_barcodes = true;
};

/// Runs the timeline. Samples: the initial state, the midpoint of every drift
/// segment (these double as the t -/+ eps samples around events), every
/// segment end not followed by an event, and the post-event state at T when
/// no drift follows an event. Throws SimultaneousBifurcations,
/// EventPreconditionViolated, ActionWindowViolation, NonGenericCrossing.
/// Messages name the offending timeline item.
FamilyTrace simulate(const Timeline& timeline, const SimulateOptions& options = {});

struct TransitionCheck {
    std::string scope;  // "event 2 (Birth)" or "segment 3"
    Rational time;
    std::string rule;
    bool passed = false;
    std::string detail;
};

struct TransitionReport {
    std::vector<TransitionCheck> checks;
    bool all_passed() const;
};

/// Compares every event's before/after barcodes against the bifurcation
/// rules, and every drift segment's sampled barcodes against the barcode of
/// the segment midpoint moved along the generator trajectories.
TransitionReport check_transitions(const FamilyTrace& trace, const Timeline& timeline);

/// Bars of a sample moved to time t along the sample's drift (zero-length
/// bars are kept, so the result may not be a valid barcode).
Barcode transported_barcode(const Sample& sample, const Rational& t);

struct AuditEntry {
    std::size_t item_index = 0;
    std::string subject;
    std::string message;
};

struct AuditReport {
    std::vector<AuditEntry> flags;
    bool passed() const { return flags.empty(); }
};

/// Checks declared drift rates against the oscillation rate r(t):
/// growth rate <= r, shrink speed < r, window shrink == r where declared,
/// monitored gaps shrinking no faster than r, and EntryBelow events whose
/// following drift cannot carry the generator into the window.
AuditReport drift_speed_audit(const Timeline& timeline, const PiecewiseLinear<Rational>& oscillation_rate);

/// Rows (t, bar_id, start, end) with bars identified across samples.
struct VineyardRow {
    Rational time;
    std::size_t bar_id = 0;
    Action start;
    Action end;
    int degree = 0;
};
std::vector<VineyardRow> vineyard(const FamilyTrace& trace);

}  // namespace actionwin
