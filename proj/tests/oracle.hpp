#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "actionwin/barcode.hpp"
#include "actionwin/complex.hpp"
#include "actionwin/dga.hpp"
#include "actionwin/displacement.hpp"

// Brute-force references used by the tests. Nothing here calls the library's
// Matrix, canonical form, inclusion_rank or linearization code.
namespace oracle {

using actionwin::Action;
using actionwin::FieldSpec;
using actionwin::Rational;
using actionwin::Scalar;
using Vec = std::vector<Scalar>;

inline std::size_t rank(const FieldSpec& field, std::size_t dim, std::vector<Vec> rows) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Scalar inv = rows[r][col].inv();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Scalar f = rows[i][col] * inv;
            for (std::size_t k = 0; k < dim; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    (void)field;
    return r;
}

// Kernel basis of the linear map whose columns are `cols` (each of length rows).
inline std::vector<Vec> kernel(const FieldSpec& field, std::size_t rows, const std::vector<Vec>& cols) {
    std::size_t n = cols.size();
    std::vector<Vec> m(rows, Vec(n, Scalar::zero(field)));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Scalar inv = m[r][col].inv();
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(col);
        ++r;
    }
    std::vector<Vec> out;
    std::set<std::size_t> pivot_set(pivots.begin(), pivots.end());
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_set.count(free)) continue;
        Vec v(n, Scalar::zero(field));
        v[free] = Scalar::one(field);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        out.push_back(v);
    }
    return out;
}

struct Graded {
    std::vector<std::string> ids;  // degree-d generators
    std::map<std::string, std::size_t> pos;
};

inline Graded graded(const actionwin::FilteredComplex& c, int degree) {
    Graded g;
    for (const auto& gen : c.generators()) {
        if (gen.degree == degree) {
            g.pos[gen.id] = g.ids.size();
            g.ids.push_back(gen.id);
        }
    }
    return g;
}

inline Vec coords(const FieldSpec& field, const Graded& g, const actionwin::ChainVector& x) {
    Vec v(g.ids.size(), Scalar::zero(field));
    for (const auto& [id, k] : x.terms()) v[g.pos.at(id)] = k;
    return v;
}

// Rank of H_d(C^{<c}) -> H_d(C^{<c2}), c <= c2: dim(Z(c) + B(c2)) - dim B(c2).
inline std::size_t image_rank(const actionwin::FilteredComplex& c, int degree, const Action& lo, const Action& hi) {
    const auto& field = c.field();
    Graded gd = graded(c, degree);
    Graded gl = graded(c, degree - 1);
    std::vector<std::string> sub;
    std::vector<Vec> cols;
    for (const auto& id : gd.ids) {
        if (Action(c.generator(id).action) < lo) {
            sub.push_back(id);
            cols.push_back(coords(field, gl, c.boundary(id)));
        }
    }
    std::vector<Vec> z;
    for (const auto& k : kernel(field, gl.ids.size(), cols)) {
        Vec v(gd.ids.size(), Scalar::zero(field));
        for (std::size_t j = 0; j < sub.size(); ++j) v[gd.pos.at(sub[j])] = k[j];
        z.push_back(v);
    }
    std::vector<Vec> b;
    for (const auto& gen : c.generators()) {
        if (gen.degree == degree + 1 && Action(gen.action) < hi) b.push_back(coords(field, gd, c.boundary(gen.id)));
    }
    std::vector<Vec> both = b;
    both.insert(both.end(), z.begin(), z.end());
    return rank(field, gd.ids.size(), both) - rank(field, gd.ids.size(), b);
}

inline std::vector<Rational> distinct_actions(const actionwin::FilteredComplex& c) {
    std::vector<Rational> v;
    for (const auto& g : c.generators()) v.push_back(g.action);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Barcode by inclusion-exclusion on the rank function r(i, j) = rank of
// H(C^{<v_i + eps}) -> H(C^{<v_j + eps}).
inline actionwin::Barcode barcode(const actionwin::FilteredComplex& c) {
    auto v = distinct_actions(c);
    actionwin::Barcode out;
    if (v.empty()) return out;
    Rational eps(1);
    for (std::size_t i = 1; i < v.size(); ++i) eps = std::min(eps, Rational((v[i] - v[i - 1]) / 2));
    std::size_t k = v.size();
    auto level = [&](std::size_t i) { return Action(Rational(v[i - 1] + eps)); };
    std::set<int> degrees;
    for (const auto& g : c.generators()) degrees.insert(g.degree);
    for (int d : degrees) {
        std::vector<std::vector<long>> r(k + 1, std::vector<long>(k + 1, 0));
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = i; j <= k; ++j) r[i][j] = static_cast<long>(image_rank(c, d, level(i), level(j)));
        for (std::size_t i = 1; i <= k; ++i) {
            for (std::size_t j = i + 1; j <= k; ++j) {
                long n = (r[i][j - 1] - r[i - 1][j - 1]) - (r[i][j] - r[i - 1][j]);
                for (long t = 0; t < n; ++t) out.push_back({Action(v[i - 1]), Action(v[j - 1]), d});
            }
            long inf = r[i][k] - r[i - 1][k];
            for (long t = 0; t < inf; ++t) out.push_back({Action(v[i - 1]), Action::pos_inf(), d});
        }
    }
    return actionwin::sorted(out);
}

// Linearized differential by direct substitution c -> c + eps(c): keep words
// with exactly one letter running from component 0 to 1 and all other letters
// pure, weighting by the product of eps over the pure letters.
inline std::map<std::string, actionwin::ChainVector> linearized_differential(const actionwin::ChordDGA& dga,
                                                                             const actionwin::Augmentation& eps) {
    const auto& field = dga.field();
    std::map<std::string, actionwin::ChainVector> out;
    for (const auto& m : dga.chords()) {
        if (!m.is_linear_generator()) continue;
        actionwin::ChainVector dm;
        for (const auto& [word, coeff] : dga.differential(m.label).terms()) {
            std::string linear;
            int linear_count = 0;
            bool other_mixed = false;
            Scalar weight = coeff;
            for (const auto& letter : word) {
                const auto& ch = dga.chord(letter);
                if (ch.is_linear_generator()) {
                    ++linear_count;
                    linear = letter;
                } else if (!ch.is_pure()) {
                    other_mixed = true;
                } else {
                    auto it = eps.find(letter);
                    weight *= it == eps.end() ? Scalar::zero(field) : it->second;
                }
            }
            if (linear_count == 1 && !other_mixed && !weight.is_zero()) dm.add(linear, weight);
        }
        if (!dm.is_zero()) out[m.label] = dm;
    }
    return out;
}

// Sum of b_k over degrees with sigma_k > osc, provided osc < l.
inline long bound_count(const actionwin::SigmaProfile& s, const actionwin::BettiProfile& b, const Action& l,
                        const Rational& osc) {
    if (!(Action(osc) < l)) return 0;
    long total = 0;
    for (std::size_t k = 0; k < s.sigma.size(); ++k) {
        if (Action(osc) < s.sigma[k]) total += b.betti[k];
    }
    return total;
}

}  // namespace oracle
