#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actionwin/error.hpp"
#include "actionwin/field.hpp"
#include "actionwin/rational.hpp"

namespace actionwin {

enum class ChordKind { Pure, Mixed };

/// Reeb chord generator. Pure chords have ends == {component, component};
/// mixed chords run from ends[0] to ends[1] (different components).
struct Chord {
    std::string label;
    Rational length;
    int degree = 0;
    ChordKind kind = ChordKind::Pure;
    std::array<int, 2> ends{0, 0};

    static Chord pure(std::string label, Rational length, int degree, int component = 0);
    static Chord mixed(std::string label, Rational length, int degree, int from = 0, int to = 1);

    bool is_pure() const noexcept { return kind == ChordKind::Pure; }
    /// Mixed chord from component 0 to component 1.
    bool is_linear_generator() const noexcept { return kind == ChordKind::Mixed && ends[0] == 0 && ends[1] == 1; }
    int component() const noexcept { return ends[0]; }

    bool operator==(const Chord&) const = default;
};

/// Word in the chord alphabet; the empty word is the unit 1.
using Word = std::vector<std::string>;

std::string to_string(const Word& word);

/// Element of the free unital algebra: word -> nonzero coefficient.
class AlgebraElement {
public:
    using Terms = std::map<Word, Scalar>;

    explicit AlgebraElement(const FieldSpec& field = FieldSpec::f2()) : field_(field) {}

    static AlgebraElement scalar(const Scalar& value);
    static AlgebraElement word(const FieldSpec& field, Word w, const Scalar& coeff);
    static AlgebraElement letter(const FieldSpec& field, const std::string& label);

    const FieldSpec& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Zero if absent.
    Scalar coefficient(const Word& w) const;

    void add(const Word& w, const Scalar& coeff);
    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator*(const AlgebraElement& other) const;
    AlgebraElement scaled(const Scalar& factor) const;

    bool operator==(const AlgebraElement& other) const { return field_ == other.field_ && terms_ == other.terms_; }

    std::string to_string() const;

private:
    FieldSpec field_;
    Terms terms_;
};

struct DgaIssue {
    ErrorCode code;
    std::string witness;
    std::string message;
};

struct DgaReport {
    std::vector<DgaIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Free unital algebra on chords with a differential given on generators and
/// extended by the graded Leibniz rule
///   d(x y) = d(x) y + (-1)^{|x|} x d(y).
/// Over F2 the sign is invisible.
class ChordDGA {
public:
    /// Structural checks only (duplicate labels, unknown letters, positive
    /// lengths, mixed chords joining different components, coefficient
    /// field). Use validate() for the differential's properties.
    static ChordDGA build(const FieldSpec& field, std::vector<Chord> chords,
                          std::map<std::string, AlgebraElement> differential);

    const FieldSpec& field() const noexcept { return field_; }
    const std::vector<Chord>& chords() const noexcept { return chords_; }
    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    const Chord& chord(const std::string& label) const;
    /// d on a generator (zero if none was given).
    const AlgebraElement& differential(const std::string& label) const;
    const std::map<std::string, AlgebraElement>& differential_map() const noexcept { return differential_; }

    Rational word_length(const Word& w) const;
    int word_degree(const Word& w) const;
    /// Maximum word length over nonzero terms; 0 for scalars and for zero.
    Rational length(const AlgebraElement& x) const;

    /// d extended to the whole algebra.
    AlgebraElement apply(const AlgebraElement& x) const;

    /// d^2 = 0, degree -1, strict length decrease, mixed-output rule.
    DgaReport validate() const;
    /// Throws the first issue of validate() as an Error.
    void require_valid() const;

    /// Sub-DGA on chords of length < l (strict).
    ChordDGA sub_dga(const Action& l) const;

    bool operator==(const ChordDGA& other) const;

private:
    ChordDGA() = default;

    FieldSpec field_;
    std::vector<Chord> chords_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, AlgebraElement> differential_;
    AlgebraElement zero_;
};

/// Scalar assignment on chords; unlisted chords are 0.
using Augmentation = std::map<std::string, Scalar>;

/// Value of the algebra map extending the augmentation (unit -> 1).
Scalar evaluate(const Augmentation& eps, const AlgebraElement& x);

/// Support in degree 0 only, vanishing on mixed chords, eps(d c) = 0 for
/// every chord of the DGA, labels known.
DgaReport check_augmentation(const ChordDGA& dga, const Augmentation& eps);

struct AugmentationSearch {
    /// Chords whose values vary; default: all degree-0 pure chords.
    std::optional<std::vector<std::string>> chords;
    /// Values tried per chord. Default: every element of F_p; {-1, 0, 1} over Q.
    std::optional<std::vector<Scalar>> candidates;
    /// Maximum number of assignments examined.
    std::size_t budget = std::size_t{1} << 20;
};

/// Every assignment (over the search space) passing check_augmentation, in
/// lexicographic order of values. Throws SearchBudgetExceeded.
std::vector<Augmentation> find_augmentations(const ChordDGA& dga, const AugmentationSearch& search = {});

/// Unital algebra map between two DGAs whose chords share labels; `images`
/// gives the image of every source generator.
class DgaMorphism {
public:
    DgaMorphism() = default;
    DgaMorphism(const FieldSpec& field, std::map<std::string, AlgebraElement> images)
        : field_(field), images_(std::move(images)) {}

    /// Identity on the given chords.
    static DgaMorphism identity(const ChordDGA& dga);

    const FieldSpec& field() const noexcept { return field_; }
    const std::map<std::string, AlgebraElement>& images() const noexcept { return images_; }
    const AlgebraElement& image(const std::string& label) const;

    AlgebraElement apply(const AlgebraElement& x) const;

    /// First generator c with phi(d_source c) != d_target(phi c), if any.
    std::optional<std::string> chain_map_defect(const ChordDGA& source, const ChordDGA& target) const;
    /// Throws NotChainMap naming the defective generator.
    void require_chain_map(const ChordDGA& source, const ChordDGA& target) const;

    /// max over source generators c of l(phi(c)) - l_target(c).
    Rational max_length_excess(const ChordDGA& target) const;

    bool operator==(const DgaMorphism& other) const { return images_ == other.images_; }

private:
    FieldSpec field_;
    std::map<std::string, AlgebraElement> images_;
};

/// outer o inner.
DgaMorphism compose(const DgaMorphism& outer, const DgaMorphism& inner);

/// phi(a) = a + addend, identity on every other chord; verified chain map.
/// Throws ForeignGenerator, DegreeMismatch, LengthIncrease, NotChainMap.
DgaMorphism elementary_morphism(const ChordDGA& minus, const ChordDGA& plus, const std::string& a,
                                const AlgebraElement& addend);

/// phi(a) = a + unit * b_1 ... b_k, the handle-slide map. Requires
/// l(a) >= l(b_1 ... b_k) in both DGAs. When a is not a chord the map is the
/// identity (still verified as a chain map).
DgaMorphism handle_slide_morphism(const ChordDGA& minus, const ChordDGA& plus, const std::string& a,
                                  const Word& word, const Scalar& unit);

/// One artificial handle-slide: generator -> generator + added.
struct ArtificialSlide {
    std::string generator;
    AlgebraElement added;
};

struct BirthMorphism {
    DgaMorphism map;
    std::vector<ArtificialSlide> slides;
    /// l(a+) - l(b+): the largest length increase allowed.
    Rational slack;
};

/// Map from the stabilized DGA (containing artificial a, b with d a = b) to
/// the DGA after the birth of (a, b). With a_1, ..., a_n the chords longer
/// than a (by length), the map is g_n o ... o g_1 o phi_0 where
///   phi_0(b) = d_plus(a), identity elsewhere,
///   g_i(a_i) = a_i + unit * f(d_plus a_i), identity elsewhere,
/// and f replaces the first letter b of a word by a (words without b go to
/// 0). `ordering`, if given, must list the a_i by increasing length.
/// Throws OrderingViolated, DegreeMismatch, EventPreconditionViolated,
/// NotChainMap.
BirthMorphism birth_morphism(const ChordDGA& minus_stabilized, const ChordDGA& plus, const std::string& a,
                             const std::string& b, const std::optional<std::vector<std::string>>& ordering,
                             const Scalar& unit);

/// f: first occurrence of letter b replaced by a; words without b dropped.
AlgebraElement replace_first(const AlgebraElement& x, const std::string& b, const std::string& a);

}  // namespace actionwin
