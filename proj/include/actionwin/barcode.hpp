#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actionwin/complex.hpp"
#include "actionwin/linalg.hpp"
#include "actionwin/rational.hpp"

namespace actionwin {

/// Bar [start, end) in a fixed homological degree. `end` may be +inf.
struct Bar {
    Action start;
    Action end = Action::pos_inf();
    int degree = 0;

    bool is_infinite() const noexcept { return end.is_pos_inf(); }
    /// end - start, +inf for infinite bars.
    Action length() const { return difference(end, start); }
    bool contains(const Action& level) const { return start <= level && level < end; }

    bool operator==(const Bar&) const = default;
};

/// Ordering used for canonical barcode output: degree, start, end.
bool operator<(const Bar& lhs, const Bar& rhs);

/// Multiset of bars, kept sorted so that equality is multiset equality.
using Barcode = std::vector<Bar>;

Barcode sorted(Barcode bars);

/// "[1, 2) deg 0"
std::string to_string(const Bar& bar);

/// Killer/killed pairing plus the action-preserving base change realizing it.
/// Column j of base_change is the new basis vector replacing generator j (in
/// the complex's canonical order). After the change of basis, d(killer) equals
/// its killed partner with coefficient 1 and every other basis vector is a
/// cycle. The matrix is upper triangular and its diagonal entries are units
/// (exactly 1 on killers and unpaired generators).
struct BarannikovForm {
    Matrix base_change;
    std::vector<std::pair<std::string, std::string>> pairs;  // (killer, killed)
    std::vector<std::string> unpaired;
};

/// Left-to-right column reduction in action order, pairing on the lowest
/// nonzero entry.
BarannikovForm canonical_form(const FilteredComplex& complex);

Barcode barcode_from_canonical(const BarannikovForm& form, const FilteredComplex& complex);

/// canonical_form followed by barcode_from_canonical.
Barcode barcode(const FilteredComplex& complex);

/// Barcode computed from sublevel homology alone: per degree, the number of
/// bars starting at s is dim coker(H(C^s) -> H(C^{s+eps})), and bar ends are
/// read off from ranks of the inclusion maps H(C^s) -> H(C^{l+eps}). eps is
/// half the minimal gap between distinct generator actions.
Barcode barcode_definitional(const FilteredComplex& complex);

/// Rank of the map H_degree(C^c) -> H_degree(C^{c2}) induced by inclusion,
/// c <= c2, both inside the closed window. Exact linear algebra.
std::size_t inclusion_rank(const FilteredComplex& complex, int degree, const Action& c, const Action& c2);

/// Bars containing `level`; with start_below = c only those with start < c.
std::size_t persisting_count(const Barcode& bars, const Action& level,
                             const std::optional<Action>& start_below = std::nullopt);

/// Bars starting at `level` plus bars ending at `level`.
std::size_t endpoints_at(const Barcode& bars, const Action& level);

/// Bars of length >= threshold (infinite bars always qualify).
Barcode long_bar_witness(const Barcode& bars, const Rational& threshold);

/// Degree-free interval, as produced by recover().
struct Interval {
    Action start;
    Action end;
    bool operator==(const Interval&) const = default;
};
bool operator<(const Interval& lhs, const Interval& rhs);

/// Sorted intervals of a barcode with degrees dropped.
std::vector<Interval> intervals(const Barcode& bars);

/// Critical values c_1 < ... < c_k and, for each j, the number of bars that
/// start at c_j and persist at the probes l_j, ..., l_k where
/// l_i = (c_i + c_{i+1}) / 2 and l_k = c_k + 1. counts[j][i - j] is the count
/// at probe l_i (0-based).
struct PersistenceTable {
    std::vector<Rational> critical_values;
    std::vector<std::vector<std::size_t>> counts;

    std::vector<Rational> probes() const;
    bool operator==(const PersistenceTable&) const = default;
};

/// Table for the given bars, with critical values = all finite endpoints.
PersistenceTable extract(const Barcode& bars);

/// Inverse of extract, up to degrees. Throws InconsistentTable when the
/// table's shape is wrong or counts increase along a row.
std::vector<Interval> recover(const PersistenceTable& table);

}  // namespace actionwin
