#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "actionwin/field.hpp"
#include "actionwin/linalg.hpp"
#include "actionwin/rational.hpp"

namespace actionwin {

/// Basis element of a filtered complex. In the contact-geometric setting
/// these are Reeb chords and `action` is the chord length.
struct Generator {
    std::string id;
    Rational action;
    int degree = 0;

    bool operator==(const Generator&) const = default;
};

/// Sparse chain: generator id -> nonzero coefficient. Zero coefficients are
/// never stored.
class ChainVector {
public:
    using Terms = std::map<std::string, Scalar>;

    ChainVector() = default;
    ChainVector(std::initializer_list<std::pair<const std::string, Scalar>> terms);

    /// Adds `coeff * id`, dropping the entry if it cancels.
    void add(const std::string& id, const Scalar& coeff);
    ChainVector& operator+=(const ChainVector& other);
    ChainVector scaled(const Scalar& factor) const;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// nullopt if `id` is absent.
    std::optional<Scalar> coefficient(const std::string& id) const;

    bool operator==(const ChainVector&) const = default;

private:
    Terms terms_;
};

/// Half-open action window [lower, upper). lower may be -inf and upper +inf.
/// An empty window (lower == upper) only holds the zero complex.
struct Window {
    Action lower = Action::neg_inf();
    Action upper = Action::pos_inf();

    bool contains(const Rational& action) const;
    bool contains(const Window& inner) const;
    bool operator==(const Window&) const = default;
};

/// Finite-dimensional filtered complex with action window. Immutable after
/// build(); every instance satisfies: d∘d = 0, d lowers degree by one, d is
/// strictly action-decreasing, every generator's action lies in the window.
class FilteredComplex {
public:
    /// Validates and canonicalizes (generators sorted by action, ties by id).
    /// Throws Error with one of DuplicateId, ActionOutsideWindow,
    /// ForeignGenerator, FieldMismatch, DegreeMismatch, ActionIncrease,
    /// NotSquareZero, InvalidWindow.
    static FilteredComplex build(const FieldSpec& field, const Window& window,
                                 std::vector<Generator> generators,
                                 const std::map<std::string, ChainVector>& differential);

    const FieldSpec& field() const noexcept { return field_; }
    const Window& window() const noexcept { return window_; }
    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }

    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    /// Position in the canonical (action, id) order. Throws ForeignGenerator.
    std::size_t index_of(const std::string& id) const;
    const Generator& generator(const std::string& id) const { return generators_[index_of(id)]; }
    const ChainVector& boundary(const std::string& id) const { return differential_[index_of(id)]; }
    const ChainVector& boundary(std::size_t index) const { return differential_[index]; }
    std::map<std::string, ChainVector> differential_map() const;

    /// Max action over the nonzero terms; -inf for the zero chain.
    Action action_of(const ChainVector& x) const;
    ChainVector apply_differential(const ChainVector& x) const;

    /// Quotient-then-sub complex on generators with action in [lower, upper);
    /// terms of action below `lower` are deleted. Throws WindowNotNested.
    FilteredComplex restrict_window(const Action& lower, const Action& upper) const;
    /// Subcomplex spanned by generators with action < level, window
    /// [window.lower, level). Throws LevelOutsideWindow.
    FilteredComplex sublevel(const Action& level) const;

    /// dim ker d_degree - rank d_(degree+1), by exact elimination.
    std::size_t homology_rank(int degree) const;
    /// Degrees that carry at least one generator, ascending.
    std::vector<int> degrees() const;

    /// Full boundary matrix in canonical order: column j is d(e_j).
    Matrix boundary_matrix() const;
    /// Same complex with the differential written in the basis given by the
    /// columns of `base_change` (B^-1 D B). The base change must be
    /// invertible, degree-preserving and action-preserving.
    FilteredComplex change_basis(const Matrix& base_change) const;
    /// Ids must be disjoint; windows are merged to their hull.
    FilteredComplex direct_sum(const FilteredComplex& other) const;

    bool operator==(const FilteredComplex& other) const;

private:
    FilteredComplex() = default;

    FieldSpec field_;
    Window window_;
    std::vector<Generator> generators_;
    std::vector<ChainVector> differential_;
    std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace actionwin
