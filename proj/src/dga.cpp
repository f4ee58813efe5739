#include "actionwin/dga.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace actionwin {

Chord Chord::pure(std::string label, Rational length, int degree, int component) {
    return Chord{std::move(label), std::move(length), degree, ChordKind::Pure, {component, component}};
}

Chord Chord::mixed(std::string label, Rational length, int degree, int from, int to) {
    return Chord{std::move(label), std::move(length), degree, ChordKind::Mixed, {from, to}};
}

std::string to_string(const Word& word) {
    if (word.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += word[i];
    }
    return out;
}

AlgebraElement AlgebraElement::scalar(const Scalar& value) {
    AlgebraElement x(value.field());
    x.add({}, value);
    return x;
}

AlgebraElement AlgebraElement::word(const FieldSpec& field, Word w, const Scalar& coeff) {
    AlgebraElement x(field);
    x.add(w, coeff);
    return x;
}

AlgebraElement AlgebraElement::letter(const FieldSpec& field, const std::string& label) {
    return word(field, {label}, Scalar::one(field));
}

Scalar AlgebraElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void AlgebraElement::add(const Word& w, const Scalar& coeff) {
    if (!(coeff.field() == field_)) {
        throw Error(ErrorCode::FieldMismatch, "coefficient over " + coeff.field().tag() + " in an algebra over " +
                                                  field_.tag());
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [w, k] : other.terms_) add(w, k);
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
    AlgebraElement out = *this;
    out += other;
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
    return *this + other.scaled(-Scalar::one(field_));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& other) const {
    AlgebraElement out(field_);
    for (const auto& [u, ku] : terms_) {
        for (const auto& [v, kv] : other.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add(w, ku * kv);
        }
    }
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& factor) const {
    AlgebraElement out(field_);
    for (const auto& [w, k] : terms_) out.add(w, k * factor);
    return out;
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, k] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (w.empty()) {
            os << k;
        } else if (k.is_one()) {
            os << actionwin::to_string(w);
        } else {
            os << "(" << k << ") " << actionwin::to_string(w);
        }
    }
    return os.str();
}

ChordDGA ChordDGA::build(const FieldSpec& field, std::vector<Chord> chords,
                         std::map<std::string, AlgebraElement> differential) {
    ChordDGA out;
    out.field_ = field;
    out.zero_ = AlgebraElement(field);
    for (std::size_t i = 0; i < chords.size(); ++i) {
        const auto& c = chords[i];
        if (!out.index_.emplace(c.label, i).second) {
            throw Error(ErrorCode::DuplicateId, "chord label '" + c.label + "' appears twice", c.label);
        }
        if (c.length <= 0) {
            throw Error(ErrorCode::InvalidChord, "chord '" + c.label + "' has non-positive length", c.label);
        }
        for (int e : c.ends) {
            if (e != 0 && e != 1) {
                throw Error(ErrorCode::InvalidChord, "chord '" + c.label + "' names a component other than 0 or 1",
                            c.label);
            }
        }
        if ((c.kind == ChordKind::Mixed) == (c.ends[0] == c.ends[1])) {
            throw Error(ErrorCode::InvalidChord,
                        "chord '" + c.label + "': pure chords join a component to itself, mixed chords join both",
                        c.label);
        }
    }
    out.chords_ = std::move(chords);
    for (auto& [label, dx] : differential) {
        if (!out.contains(label)) {
            throw Error(ErrorCode::ForeignGenerator, "differential given for unknown chord '" + label + "'", label);
        }
        if (!(dx.field() == field)) {
            throw Error(ErrorCode::FieldMismatch, "d(" + label + ") is over " + dx.field().tag(), label);
        }
        for (const auto& [w, k] : dx.terms()) {
            for (const auto& letter : w) {
                if (!out.contains(letter)) {
                    throw Error(ErrorCode::ForeignGenerator,
                                "d(" + label + ") mentions unknown chord '" + letter + "'", letter);
                }
            }
        }
        if (!dx.is_zero()) out.differential_.emplace(label, std::move(dx));
    }
    return out;
}

const Chord& ChordDGA::chord(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw Error(ErrorCode::ForeignGenerator, "unknown chord '" + label + "'", label);
    return chords_[it->second];
}

const AlgebraElement& ChordDGA::differential(const std::string& label) const {
    chord(label);
    auto it = differential_.find(label);
    return it == differential_.end() ? zero_ : it->second;
}

Rational ChordDGA::word_length(const Word& w) const {
    Rational total = 0;
    for (const auto& letter : w) total += chord(letter).length;
    return total;
}

int ChordDGA::word_degree(const Word& w) const {
    int total = 0;
    for (const auto& letter : w) total += chord(letter).degree;
    return total;
}

Rational ChordDGA::length(const AlgebraElement& x) const {
    Rational best = 0;
    for (const auto& [w, k] : x.terms()) best = std::max(best, word_length(w));
    return best;
}

AlgebraElement ChordDGA::apply(const AlgebraElement& x) const {
    AlgebraElement out(field_);
    const Scalar minus_one = -Scalar::one(field_);
    for (const auto& [w, k] : x.terms()) {
        int prefix_degree = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& dw = differential(w[i]);
            Scalar sign = (prefix_degree % 2 != 0) ? minus_one : Scalar::one(field_);
            for (const auto& [u, ku] : dw.terms()) {
                Word image(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                image.insert(image.end(), u.begin(), u.end());
                image.insert(image.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
                out.add(image, k * ku * sign);
            }
            prefix_degree += chord(w[i]).degree;
        }
    }
    return out;
}

DgaReport ChordDGA::validate() const {
    DgaReport report;
    for (const auto& c : chords_) {
        const auto& dc = differential(c.label);
        for (const auto& [w, k] : dc.terms()) {
            if (word_degree(w) != c.degree - 1) {
                report.issues.push_back({ErrorCode::DegreeMismatch, c.label,
                                         "d(" + c.label + ") contains '" + actionwin::to_string(w) + "' of degree " +
                                             std::to_string(word_degree(w)) + ", expected " +
                                             std::to_string(c.degree - 1)});
            }
            if (word_length(w) >= c.length) {
                report.issues.push_back({ErrorCode::LengthIncrease, c.label,
                                         "d(" + c.label + ") contains '" + actionwin::to_string(w) + "' of length " +
                                             actionwin::to_string(word_length(w)) + " >= " +
                                             actionwin::to_string(c.length)});
            }
            if (!c.is_pure()) {
                bool has_mixed = std::any_of(w.begin(), w.end(), [&](const std::string& l) { return !chord(l).is_pure(); });
                if (!has_mixed) {
                    report.issues.push_back({ErrorCode::MixedOutputViolation, c.label,
                                             "d(" + c.label + ") contains the word '" + actionwin::to_string(w) +
                                                 "' without a mixed chord"});
                }
            }
        }
        if (!apply(dc).is_zero()) {
            report.issues.push_back({ErrorCode::NotSquareZero, c.label, "d(d(" + c.label + ")) != 0"});
        }
    }
    return report;
}

void ChordDGA::require_valid() const {
    auto report = validate();
    if (!report.ok()) {
        const auto& first = report.issues.front();
        throw Error(first.code, first.message, first.witness);
    }
}

ChordDGA ChordDGA::sub_dga(const Action& l) const {
    std::vector<Chord> kept;
    std::map<std::string, AlgebraElement> diff;
    for (const auto& c : chords_) {
        if (!(Action(c.length) < l)) continue;
        kept.push_back(c);
        if (auto it = differential_.find(c.label); it != differential_.end()) diff.emplace(c.label, it->second);
    }
    return build(field_, std::move(kept), std::move(diff));
}

bool ChordDGA::operator==(const ChordDGA& other) const {
    return field_ == other.field_ && chords_ == other.chords_ && differential_ == other.differential_;
}

Scalar evaluate(const Augmentation& eps, const AlgebraElement& x) {
    const auto& field = x.field();
    Scalar total = Scalar::zero(field);
    for (const auto& [w, k] : x.terms()) {
        Scalar term = k;
        for (const auto& letter : w) {
            auto it = eps.find(letter);
            if (it == eps.end() || it->second.is_zero()) {
                term = Scalar::zero(field);
                break;
            }
            term *= it->second;
        }
        total += term;
    }
    return total;
}

DgaReport check_augmentation(const ChordDGA& dga, const Augmentation& eps) {
    DgaReport report;
    for (const auto& [label, value] : eps) {
        if (!dga.contains(label)) {
            report.issues.push_back({ErrorCode::ForeignGenerator, label, "augmentation names unknown chord '" + label + "'"});
            continue;
        }
        if (!(value.field() == dga.field())) {
            report.issues.push_back({ErrorCode::FieldMismatch, label, "value of '" + label + "' is over " +
                                                                          value.field().tag()});
            continue;
        }
        if (value.is_zero()) continue;
        const auto& c = dga.chord(label);
        if (c.degree != 0) {
            report.issues.push_back({ErrorCode::AugmentationInvalid, label,
                                     "nonzero on '" + label + "' of degree " + std::to_string(c.degree)});
        }
        if (!c.is_pure()) {
            report.issues.push_back({ErrorCode::AugmentationInvalid, label, "nonzero on mixed chord '" + label + "'"});
        }
    }
    if (!report.ok()) return report;
    for (const auto& c : dga.chords()) {
        Scalar v = evaluate(eps, dga.differential(c.label));
        if (!v.is_zero()) {
            report.issues.push_back({ErrorCode::AugmentationInvalid, c.label,
                                     "eps(d(" + c.label + ")) = " + v.to_string() + " != 0"});
        }
    }
    return report;
}

std::vector<Augmentation> find_augmentations(const ChordDGA& dga, const AugmentationSearch& search) {
    const auto& field = dga.field();
    std::vector<std::string> vary;
    if (search.chords) {
        vary = *search.chords;
    } else {
        for (const auto& c : dga.chords()) {
            if (c.degree == 0 && c.is_pure()) vary.push_back(c.label);
        }
    }
    std::vector<Scalar> values;
    if (search.candidates) {
        values = *search.candidates;
    } else if (field.is_prime_field()) {
        for (std::uint32_t r = 0; r < field.characteristic(); ++r) values.emplace_back(field, static_cast<long>(r));
    } else {
        values = {Scalar(field, -1L), Scalar(field, 0L), Scalar(field, 1L)};
    }

    long double total = 1;
    for (std::size_t i = 0; i < vary.size(); ++i) total *= static_cast<long double>(values.size());
    if (total > static_cast<long double>(search.budget)) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    std::to_string(values.size()) + "^" + std::to_string(vary.size()) +
                        " assignments exceed the budget of " + std::to_string(search.budget));
    }

    std::vector<Augmentation> found;
    if (values.empty() && !vary.empty()) return found;
    std::vector<std::size_t> odometer(vary.size(), 0);
    while (true) {
        Augmentation eps;
        for (std::size_t i = 0; i < vary.size(); ++i) {
            if (!values[odometer[i]].is_zero()) eps[vary[i]] = values[odometer[i]];
        }
        if (check_augmentation(dga, eps).ok()) found.push_back(std::move(eps));
        std::size_t i = vary.size();
        while (i > 0) {
            --i;
            if (++odometer[i] < values.size()) break;
            odometer[i] = 0;
            if (i == 0) return found;
        }
        if (vary.empty()) return found;
    }
}

DgaMorphism DgaMorphism::identity(const ChordDGA& dga) {
    std::map<std::string, AlgebraElement> images;
    for (const auto& c : dga.chords()) images.emplace(c.label, AlgebraElement::letter(dga.field(), c.label));
    return DgaMorphism(dga.field(), std::move(images));
}

const AlgebraElement& DgaMorphism::image(const std::string& label) const {
    auto it = images_.find(label);
    if (it == images_.end()) throw Error(ErrorCode::ForeignGenerator, "morphism has no image for '" + label + "'", label);
    return it->second;
}

AlgebraElement DgaMorphism::apply(const AlgebraElement& x) const {
    AlgebraElement out(field_);
    for (const auto& [w, k] : x.terms()) {
        AlgebraElement term = AlgebraElement::scalar(k);
        for (const auto& letter : w) term = term * image(letter);
        out += term;
    }
    return out;
}

std::optional<std::string> DgaMorphism::chain_map_defect(const ChordDGA& source, const ChordDGA& target) const {
    for (const auto& c : source.chords()) {
        AlgebraElement lhs = apply(source.differential(c.label));
        AlgebraElement rhs = target.apply(image(c.label));
        if (!(lhs == rhs)) return c.label;
    }
    return std::nullopt;
}

void DgaMorphism::require_chain_map(const ChordDGA& source, const ChordDGA& target) const {
    if (auto bad = chain_map_defect(source, target)) {
        AlgebraElement lhs = apply(source.differential(*bad));
        AlgebraElement rhs = target.apply(image(*bad));
        throw Error(ErrorCode::NotChainMap,
                    "phi(d " + *bad + ") = " + lhs.to_string() + " but d'(phi " + *bad + ") = " + rhs.to_string(), *bad);
    }
}

Rational DgaMorphism::max_length_excess(const ChordDGA& target) const {
    std::optional<Rational> best;
    for (const auto& [label, img] : images_) {
        if (!target.contains(label)) continue;
        Rational excess = target.length(img) - target.chord(label).length;
        if (!best || excess > *best) best = excess;
    }
    return best.value_or(Rational(0));
}

DgaMorphism compose(const DgaMorphism& outer, const DgaMorphism& inner) {
    std::map<std::string, AlgebraElement> images;
    for (const auto& [label, img] : inner.images()) images.emplace(label, outer.apply(img));
    return DgaMorphism(inner.field(), std::move(images));
}

namespace {

void require_same_chords(const ChordDGA& minus, const ChordDGA& plus) {
    std::set<std::string> a, b;
    for (const auto& c : minus.chords()) a.insert(c.label);
    for (const auto& c : plus.chords()) b.insert(c.label);
    if (a != b) {
        std::string odd;
        for (const auto& l : a) {
            if (!b.count(l)) odd = l;
        }
        for (const auto& l : b) {
            if (!a.count(l)) odd = l;
        }
        throw Error(ErrorCode::ForeignGenerator, "chord '" + odd + "' has no partner on the other side", odd);
    }
}

}  // namespace

DgaMorphism elementary_morphism(const ChordDGA& minus, const ChordDGA& plus, const std::string& a,
                                const AlgebraElement& addend) {
    require_same_chords(minus, plus);
    const Chord& target = plus.chord(a);
    for (const auto& [w, k] : addend.terms()) {
        for (const auto& letter : w) plus.chord(letter);
        if (plus.word_degree(w) != target.degree) {
            throw Error(ErrorCode::DegreeMismatch, "'" + actionwin::to_string(w) + "' has degree " +
                                                       std::to_string(plus.word_degree(w)) + ", '" + a + "' has " +
                                                       std::to_string(target.degree),
                        a);
        }
    }
    for (const ChordDGA* side : {&minus, &plus}) {
        if (side->length(addend) > side->chord(a).length) {
            throw Error(ErrorCode::LengthIncrease, "l(" + addend.to_string() + ") = " +
                                                       actionwin::to_string(side->length(addend)) + " exceeds l(" + a +
                                                       ") = " + actionwin::to_string(side->chord(a).length),
                        a);
        }
    }
    DgaMorphism id = DgaMorphism::identity(minus);
    auto images = id.images();
    images.at(a) += addend;
    DgaMorphism phi(minus.field(), std::move(images));
    phi.require_chain_map(minus, plus);
    return phi;
}

DgaMorphism handle_slide_morphism(const ChordDGA& minus, const ChordDGA& plus, const std::string& a,
                                  const Word& word, const Scalar& unit) {
    if (unit.is_zero()) throw Error(ErrorCode::EventPreconditionViolated, "handle-slide unit must be nonzero", a);
    if (!minus.contains(a)) {
        require_same_chords(minus, plus);
        DgaMorphism id = DgaMorphism::identity(minus);
        id.require_chain_map(minus, plus);
        return id;
    }
    return elementary_morphism(minus, plus, a, AlgebraElement::word(minus.field(), word, unit));
}

AlgebraElement replace_first(const AlgebraElement& x, const std::string& b, const std::string& a) {
    AlgebraElement out(x.field());
    for (const auto& [w, k] : x.terms()) {
        auto it = std::find(w.begin(), w.end(), b);
        if (it == w.end()) continue;
        Word image = w;
        image[static_cast<std::size_t>(it - w.begin())] = a;
        out.add(image, k);
    }
    return out;
}

BirthMorphism birth_morphism(const ChordDGA& minus_stabilized, const ChordDGA& plus, const std::string& a,
                             const std::string& b, const std::optional<std::vector<std::string>>& ordering,
                             const Scalar& unit) {
    const auto& field = plus.field();
    require_same_chords(minus_stabilized, plus);
    if (unit.is_zero()) throw Error(ErrorCode::EventPreconditionViolated, "birth unit must be nonzero", a);
    if (!(minus_stabilized.differential(a) == AlgebraElement::letter(field, b)) ||
        !minus_stabilized.differential(b).is_zero()) {
        throw Error(ErrorCode::EventPreconditionViolated,
                    "source is not stabilized by the pair: need d(" + a + ") = " + b + " and d(" + b + ") = 0", a);
    }
    const Chord& ap = plus.chord(a);
    const Chord& bp = plus.chord(b);
    if (ap.degree != bp.degree + 1) {
        throw Error(ErrorCode::DegreeMismatch, "|" + a + "| must be |" + b + "| + 1", a);
    }
    if (ap.length <= bp.length) {
        throw Error(ErrorCode::OrderingViolated, "l(" + a + ") must exceed l(" + b + ")", a);
    }

    // Every other chord must lie above l(a) or below l(b) on both sides, and
    // the chords on each side must be strictly ordered on both sides at once.
    struct Span {
        std::string label;
        Rational lo, hi;
    };
    std::vector<Span> above, below;
    for (const auto& c : plus.chords()) {
        if (c.label == a || c.label == b) continue;
        const Rational& lp = c.length;
        const Rational& lm = minus_stabilized.chord(c.label).length;
        Span s{c.label, std::min(lp, lm), std::max(lp, lm)};
        if (s.lo > ap.length) {
            above.push_back(s);
        } else if (s.hi < bp.length) {
            below.push_back(s);
        } else {
            throw Error(ErrorCode::OrderingViolated,
                        "chord '" + c.label + "' is not separated from the interval [l(" + b + "), l(" + a + ")]",
                        c.label);
        }
    }
    auto by_length = [](const Span& x, const Span& y) { return x.lo < y.lo; };
    std::sort(above.begin(), above.end(), by_length);
    std::sort(below.begin(), below.end(), by_length);
    for (const auto* side : {&above, &below}) {
        for (std::size_t i = 1; i < side->size(); ++i) {
            if ((*side)[i].lo <= (*side)[i - 1].hi) {
                throw Error(ErrorCode::OrderingViolated,
                            "chords '" + (*side)[i - 1].label + "' and '" + (*side)[i].label + "' are not strictly ordered",
                            (*side)[i].label);
            }
        }
    }
    std::vector<std::string> order;
    for (const auto& s : above) order.push_back(s.label);
    if (ordering && *ordering != order) {
        throw Error(ErrorCode::OrderingViolated, "declared ordering does not list the chords above '" + a +
                                                     "' by increasing length");
    }

    BirthMorphism result;
    result.slack = ap.length - bp.length;

    const AlgebraElement& da = plus.differential(a);
    auto images = DgaMorphism::identity(minus_stabilized).images();
    images.at(b) = da;
    DgaMorphism phi(field, std::move(images));
    for (const auto& [w, k] : da.terms()) {
        if (w == Word{b}) continue;
        result.slides.push_back({b, AlgebraElement::word(field, w, k)});
    }

    for (const auto& ai : order) {
        AlgebraElement correction = replace_first(plus.differential(ai), b, a).scaled(unit);
        if (correction.is_zero()) continue;
        auto g_images = DgaMorphism::identity(plus).images();
        g_images.at(ai) += correction;
        phi = compose(DgaMorphism(field, std::move(g_images)), phi);
        result.slides.push_back({ai, correction});
    }
    phi.require_chain_map(minus_stabilized, plus);
    result.map = std::move(phi);
    return result;
}

}  // namespace actionwin
