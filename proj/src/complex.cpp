#include "actionwin/complex.hpp"

#include <algorithm>
#include <set>

#include "actionwin/error.hpp"

namespace actionwin {

ChainVector::ChainVector(std::initializer_list<std::pair<const std::string, Scalar>> terms) {
    for (const auto& [id, coeff] : terms) add(id, coeff);
}

void ChainVector::add(const std::string& id, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(id);
    if (it == terms_.end()) {
        terms_.emplace(id, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

ChainVector& ChainVector::operator+=(const ChainVector& other) {
    for (const auto& [id, coeff] : other.terms_) add(id, coeff);
    return *this;
}

ChainVector ChainVector::scaled(const Scalar& factor) const {
    ChainVector out;
    if (factor.is_zero()) return out;
    for (const auto& [id, coeff] : terms_) out.terms_.emplace(id, coeff * factor);
    return out;
}

std::optional<Scalar> ChainVector::coefficient(const std::string& id) const {
    auto it = terms_.find(id);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
}

bool Window::contains(const Rational& action) const {
    Action a(action);
    return lower <= a && a < upper;
}

bool Window::contains(const Window& inner) const {
    return lower <= inner.lower && inner.upper <= upper && inner.lower <= inner.upper;
}

namespace {

bool canonical_less(const Generator& a, const Generator& b) {
    int c = cmp(a.action, b.action);
    if (c != 0) return c < 0;
    return a.id < b.id;
}

}  // namespace

FilteredComplex FilteredComplex::build(const FieldSpec& field, const Window& window,
                                       std::vector<Generator> generators,
                                       const std::map<std::string, ChainVector>& differential) {
    if (window.lower.is_pos_inf() || window.upper.is_neg_inf() || window.upper < window.lower) {
        throw Error(ErrorCode::InvalidWindow,
                    "window [" + to_string(window.lower) + ", " + to_string(window.upper) + ") is not an interval");
    }

    FilteredComplex out;
    out.field_ = field;
    out.window_ = window;
    std::sort(generators.begin(), generators.end(), canonical_less);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& g = generators[i];
        if (!out.index_.emplace(g.id, i).second) {
            throw Error(ErrorCode::DuplicateId, "generator id '" + g.id + "' appears twice", g.id);
        }
        if (!window.contains(g.action)) {
            throw Error(ErrorCode::ActionOutsideWindow,
                        "generator '" + g.id + "' has action " + to_string(g.action) + " outside [" +
                            to_string(window.lower) + ", " + to_string(window.upper) + ")",
                        g.id);
        }
    }
    out.generators_ = std::move(generators);
    out.differential_.assign(out.generators_.size(), ChainVector{});

    for (const auto& [id, chain] : differential) {
        auto it = out.index_.find(id);
        if (it == out.index_.end()) {
            throw Error(ErrorCode::ForeignGenerator, "differential given for unknown generator '" + id + "'", id);
        }
        const Generator& source = out.generators_[it->second];
        for (const auto& [target, coeff] : chain.terms()) {
            auto jt = out.index_.find(target);
            if (jt == out.index_.end()) {
                throw Error(ErrorCode::ForeignGenerator,
                            "d(" + id + ") mentions unknown generator '" + target + "'", target);
            }
            if (!(coeff.field() == field)) {
                throw Error(ErrorCode::FieldMismatch,
                            "coefficient of " + target + " in d(" + id + ") is over " + coeff.field().tag() +
                                ", complex is over " + field.tag(),
                            id);
            }
            const Generator& t = out.generators_[jt->second];
            if (t.degree != source.degree - 1) {
                throw Error(ErrorCode::DegreeMismatch,
                            "d(" + id + ") contains " + target + " of degree " + std::to_string(t.degree) +
                                ", expected " + std::to_string(source.degree - 1),
                            id);
            }
            if (cmp(t.action, source.action) >= 0) {
                throw Error(ErrorCode::ActionIncrease,
                            "d(" + id + ") contains " + target + " with action " + to_string(t.action) +
                                " >= " + to_string(source.action),
                            id + "," + target);
            }
        }
        out.differential_[it->second] = chain;
    }

    for (std::size_t i = 0; i < out.generators_.size(); ++i) {
        if (!out.apply_differential(out.differential_[i]).is_zero()) {
            const auto& id = out.generators_[i].id;
            throw Error(ErrorCode::NotSquareZero, "d(d(" + id + ")) != 0", id);
        }
    }
    return out;
}

std::size_t FilteredComplex::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw Error(ErrorCode::ForeignGenerator, "'" + id + "' is not a generator of this complex", id);
    }
    return it->second;
}

std::map<std::string, ChainVector> FilteredComplex::differential_map() const {
    std::map<std::string, ChainVector> out;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!differential_[i].is_zero()) out.emplace(generators_[i].id, differential_[i]);
    }
    return out;
}

Action FilteredComplex::action_of(const ChainVector& x) const {
    Action best = Action::neg_inf();
    for (const auto& [id, coeff] : x.terms()) {
        Action a(generators_[index_of(id)].action);
        if (best < a) best = a;
    }
    return best;
}

ChainVector FilteredComplex::apply_differential(const ChainVector& x) const {
    ChainVector out;
    for (const auto& [id, coeff] : x.terms()) {
        out += differential_[index_of(id)].scaled(coeff);
    }
    return out;
}

FilteredComplex FilteredComplex::restrict_window(const Action& lower, const Action& upper) const {
    Window inner{lower, upper};
    if (!window_.contains(inner)) {
        throw Error(ErrorCode::WindowNotNested, "[" + to_string(lower) + ", " + to_string(upper) +
                                                    ") is not nested in [" + to_string(window_.lower) + ", " +
                                                    to_string(window_.upper) + ")");
    }
    std::vector<Generator> kept;
    std::map<std::string, ChainVector> diff;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (!inner.contains(g.action)) continue;
        kept.push_back(g);
        ChainVector d;
        for (const auto& [id, coeff] : differential_[i].terms()) {
            if (Action(generator(id).action) >= lower) d.add(id, coeff);
        }
        if (!d.is_zero()) diff.emplace(g.id, std::move(d));
    }
    return build(field_, inner, std::move(kept), diff);
}

FilteredComplex FilteredComplex::sublevel(const Action& level) const {
    if (level < window_.lower || window_.upper < level) {
        throw Error(ErrorCode::LevelOutsideWindow, "level " + to_string(level) + " outside [" +
                                                       to_string(window_.lower) + ", " +
                                                       to_string(window_.upper) + "]");
    }
    std::vector<Generator> kept;
    std::map<std::string, ChainVector> diff;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (!(Action(generators_[i].action) < level)) continue;
        kept.push_back(generators_[i]);
        if (!differential_[i].is_zero()) diff.emplace(generators_[i].id, differential_[i]);
    }
    return build(field_, Window{window_.lower, level}, std::move(kept), diff);
}

std::vector<int> FilteredComplex::degrees() const {
    std::set<int> ds;
    for (const auto& g : generators_) ds.insert(g.degree);
    return {ds.begin(), ds.end()};
}

namespace {

// Matrix of d from degree `deg` to degree `deg - 1`, restricted to the given
// index lists.
Matrix degree_block(const FilteredComplex& c, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
    Matrix m(c.field(), rows.size(), cols.size());
    std::unordered_map<std::string, std::size_t> row_pos;
    for (std::size_t r = 0; r < rows.size(); ++r) row_pos.emplace(c.generators()[rows[r]].id, r);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [id, coeff] : c.boundary(cols[j]).terms()) {
            m.at(row_pos.at(id), j) = coeff;
        }
    }
    return m;
}

std::vector<std::size_t> indices_in_degree(const FilteredComplex& c, int degree) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c.generators()[i].degree == degree) out.push_back(i);
    }
    return out;
}

}  // namespace

std::size_t FilteredComplex::homology_rank(int degree) const {
    auto here = indices_in_degree(*this, degree);
    if (here.empty()) return 0;
    auto below = indices_in_degree(*this, degree - 1);
    auto above = indices_in_degree(*this, degree + 1);
    std::size_t rank_out = degree_block(*this, below, here).rank();
    std::size_t rank_in = degree_block(*this, here, above).rank();
    return here.size() - rank_out - rank_in;
}

Matrix FilteredComplex::boundary_matrix() const {
    Matrix m(field_, size(), size());
    for (std::size_t j = 0; j < size(); ++j) {
        for (const auto& [id, coeff] : differential_[j].terms()) m.at(index_of(id), j) = coeff;
    }
    return m;
}

FilteredComplex FilteredComplex::change_basis(const Matrix& base_change) const {
    if (base_change.rows() != size() || base_change.cols() != size()) {
        throw std::invalid_argument("change_basis: matrix shape does not match the complex");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (base_change.at(i, j).is_zero()) continue;
            const auto& gi = generators_[i];
            const auto& gj = generators_[j];
            if (gi.degree != gj.degree) {
                throw Error(ErrorCode::DegreeMismatch,
                            "base change mixes degrees of " + gi.id + " and " + gj.id, gj.id);
            }
            if (cmp(gi.action, gj.action) > 0) {
                throw Error(ErrorCode::ActionIncrease,
                            "base change is not action-preserving: " + gi.id + " enters the image of " + gj.id,
                            gj.id);
            }
        }
    }
    Matrix conjugated = base_change.inverse() * boundary_matrix() * base_change;
    std::map<std::string, ChainVector> diff;
    for (std::size_t j = 0; j < size(); ++j) {
        ChainVector d;
        for (std::size_t i = 0; i < size(); ++i) d.add(generators_[i].id, conjugated.at(i, j));
        if (!d.is_zero()) diff.emplace(generators_[j].id, std::move(d));
    }
    return build(field_, window_, generators_, diff);
}

FilteredComplex FilteredComplex::direct_sum(const FilteredComplex& other) const {
    if (!(field_ == other.field_)) {
        throw Error(ErrorCode::FieldMismatch, "direct sum of complexes over different fields");
    }
    Window hull{std::min(window_.lower, other.window_.lower), std::max(window_.upper, other.window_.upper)};
    auto gens = generators_;
    gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
    auto diff = differential_map();
    for (auto& [id, chain] : other.differential_map()) diff.emplace(id, chain);
    return build(field_, hull, std::move(gens), diff);
}

bool FilteredComplex::operator==(const FilteredComplex& other) const {
    return field_ == other.field_ && window_ == other.window_ && generators_ == other.generators_ &&
           differential_ == other.differential_;
}

}  // namespace actionwin
