#include "actionwin/barcode.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "actionwin/error.hpp"

namespace actionwin {

bool operator<(const Bar& lhs, const Bar& rhs) {
    return std::tie(lhs.degree, lhs.start, lhs.end) < std::tie(rhs.degree, rhs.start, rhs.end);
}

bool operator<(const Interval& lhs, const Interval& rhs) {
    return std::tie(lhs.start, lhs.end) < std::tie(rhs.start, rhs.end);
}

Barcode sorted(Barcode bars) {
    std::sort(bars.begin(), bars.end());
    return bars;
}

std::string to_string(const Bar& bar) {
    return "[" + to_string(bar.start) + ", " + to_string(bar.end) + ") deg " + std::to_string(bar.degree);
}

namespace {

using Column = std::vector<Scalar>;

std::optional<std::size_t> lowest(const Column& col) {
    for (std::size_t i = col.size(); i-- > 0;) {
        if (!col[i].is_zero()) return i;
    }
    return std::nullopt;
}

void axpy(Column& y, const Scalar& a, const Column& x) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!x[i].is_zero()) y[i] -= a * x[i];
    }
}

}  // namespace

BarannikovForm canonical_form(const FilteredComplex& complex) {
    const auto& field = complex.field();
    const std::size_t n = complex.size();
    Matrix d = complex.boundary_matrix();

    std::vector<Column> reduced(n), basis(n);
    for (std::size_t j = 0; j < n; ++j) {
        reduced[j] = d.column(j);
        basis[j] = Column(n, Scalar::zero(field));
        basis[j][j] = Scalar::one(field);
    }

    std::vector<std::optional<std::size_t>> pivot_column(n);
    std::vector<std::optional<std::size_t>> killed_by(n);
    for (std::size_t j = 0; j < n; ++j) {
        while (auto low = lowest(reduced[j])) {
            auto k = pivot_column[*low];
            if (!k) {
                pivot_column[*low] = j;
                killed_by[*low] = j;
                break;
            }
            Scalar factor = reduced[j][*low] / reduced[*k][*low];
            axpy(reduced[j], factor, reduced[*k]);
            axpy(basis[j], factor, basis[*k]);
        }
    }

    BarannikovForm form;
    std::vector<Column> columns(n);
    std::vector<bool> is_killer(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (killed_by[i]) is_killer[*killed_by[i]] = true;
    }
    const auto& gens = complex.generators();
    for (std::size_t j = 0; j < n; ++j) {
        if (killed_by[j]) {
            columns[j] = reduced[*killed_by[j]];
        } else {
            columns[j] = basis[j];
            if (is_killer[j]) {
                form.pairs.emplace_back(gens[j].id, gens[*lowest(reduced[j])].id);
            } else {
                form.unpaired.push_back(gens[j].id);
            }
        }
    }
    form.base_change = Matrix::from_columns(field, n, columns);
    return form;
}

Barcode barcode_from_canonical(const BarannikovForm& form, const FilteredComplex& complex) {
    Barcode bars;
    for (const auto& [killer, killed] : form.pairs) {
        const auto& x = complex.generator(killer);
        const auto& y = complex.generator(killed);
        bars.push_back({Action(y.action), Action(x.action), y.degree});
    }
    for (const auto& id : form.unpaired) {
        const auto& e = complex.generator(id);
        bars.push_back({Action(e.action), Action::pos_inf(), e.degree});
    }
    return sorted(std::move(bars));
}

Barcode barcode(const FilteredComplex& complex) {
    return barcode_from_canonical(canonical_form(complex), complex);
}

namespace {

// Ranks of inclusion maps between sublevel homologies in one degree. A
// sublevel set C^x is determined by how many generators (in canonical order)
// have action < x, so everything is cached by that prefix length.
class SublevelRanks {
public:
    SublevelRanks(const FilteredComplex& complex, int degree) : complex_(complex) {
        const auto& gens = complex.generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].degree == degree) here_.push_back(i);
            if (gens[i].degree == degree - 1) below_.push_back(i);
            if (gens[i].degree == degree + 1) above_.push_back(i);
        }
        for (std::size_t r = 0; r < here_.size(); ++r) here_pos_.emplace(gens[here_[r]].id, r);
        for (std::size_t r = 0; r < below_.size(); ++r) below_pos_.emplace(gens[below_[r]].id, r);
    }

    std::size_t prefix(const Action& level) const {
        const auto& gens = complex_.generators();
        std::size_t m = 0;
        while (m < gens.size() && Action(gens[m].action) < level) ++m;
        return m;
    }

    std::size_t rank(std::size_t source, std::size_t target) {
        auto key = std::make_pair(source, target);
        if (auto it = rank_cache_.find(key); it != rank_cache_.end()) return it->second;
        const auto& z = cycles(source);
        const auto& b = boundaries(target);
        std::vector<Column> both = z;
        both.insert(both.end(), b.begin(), b.end());
        std::size_t value = span_rank(complex_.field(), here_.size(), both) - boundary_rank(target);
        rank_cache_.emplace(key, value);
        return value;
    }

private:
    const std::vector<Column>& cycles(std::size_t m) {
        if (auto it = cycle_cache_.find(m); it != cycle_cache_.end()) return it->second;
        const auto& field = complex_.field();
        std::vector<std::size_t> cols;
        for (auto i : here_) {
            if (i < m) cols.push_back(i);
        }
        Matrix d(field, below_.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (const auto& [id, coeff] : complex_.boundary(cols[j]).terms()) d.at(below_pos_.at(id), j) = coeff;
        }
        std::vector<Column> out;
        for (const auto& v : d.nullspace()) {
            Column full(here_.size(), Scalar::zero(field));
            for (std::size_t j = 0; j < cols.size(); ++j) full[j] = v[j];
            out.push_back(std::move(full));
        }
        return cycle_cache_.emplace(m, std::move(out)).first->second;
    }

    const std::vector<Column>& boundaries(std::size_t m) {
        if (auto it = boundary_cache_.find(m); it != boundary_cache_.end()) return it->second;
        const auto& field = complex_.field();
        std::vector<Column> out;
        for (auto i : above_) {
            if (i >= m) continue;
            Column v(here_.size(), Scalar::zero(field));
            for (const auto& [id, coeff] : complex_.boundary(i).terms()) v[here_pos_.at(id)] = coeff;
            out.push_back(std::move(v));
        }
        return boundary_cache_.emplace(m, std::move(out)).first->second;
    }

    std::size_t boundary_rank(std::size_t m) {
        if (auto it = boundary_rank_cache_.find(m); it != boundary_rank_cache_.end()) return it->second;
        std::size_t r = span_rank(complex_.field(), here_.size(), boundaries(m));
        boundary_rank_cache_.emplace(m, r);
        return r;
    }

    const FilteredComplex& complex_;
    std::vector<std::size_t> here_, below_, above_;
    std::unordered_map<std::string, std::size_t> here_pos_, below_pos_;
    std::map<std::size_t, std::vector<Column>> cycle_cache_, boundary_cache_;
    std::map<std::size_t, std::size_t> boundary_rank_cache_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> rank_cache_;
};

}  // namespace

std::size_t inclusion_rank(const FilteredComplex& complex, int degree, const Action& c, const Action& c2) {
    if (c2 < c) throw std::invalid_argument("inclusion_rank: levels out of order");
    SublevelRanks ranks(complex, degree);
    return ranks.rank(ranks.prefix(c), ranks.prefix(c2));
}

Barcode barcode_definitional(const FilteredComplex& complex) {
    std::vector<Rational> levels;
    for (const auto& g : complex.generators()) {
        if (levels.empty() || levels.back() != g.action) levels.push_back(g.action);
    }
    if (levels.empty()) return {};
    Rational eps = 1;
    for (std::size_t i = 1; i < levels.size(); ++i) {
        Rational gap = (levels[i] - levels[i - 1]) / 2;
        if (i == 1 || gap < eps) eps = gap;
    }
    const std::size_t k = levels.size();

    Barcode bars;
    for (int degree : complex.degrees()) {
        SublevelRanks ranks(complex, degree);
        std::vector<std::size_t> at(k), above(k);
        for (std::size_t i = 0; i < k; ++i) {
            at[i] = ranks.prefix(Action(levels[i]));
            above[i] = ranks.prefix(Action(Rational(levels[i] + eps)));
        }
        // persisting(j, i): bars starting at c_j still alive at c_i + eps.
        auto persisting = [&](std::size_t j, std::size_t i) {
            return ranks.rank(above[j], above[i]) - ranks.rank(at[j], above[i]);
        };
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t born = ranks.rank(above[j], above[j]) - ranks.rank(at[j], above[j]);
            std::size_t alive = born;
            for (std::size_t i = j + 1; i < k && alive > 0; ++i) {
                std::size_t next = persisting(j, i);
                for (std::size_t n = next; n < alive; ++n) {
                    bars.push_back({Action(levels[j]), Action(levels[i]), degree});
                }
                alive = next;
            }
            for (std::size_t n = 0; n < alive; ++n) {
                bars.push_back({Action(levels[j]), Action::pos_inf(), degree});
            }
        }
    }
    return sorted(std::move(bars));
}

std::size_t persisting_count(const Barcode& bars, const Action& level, const std::optional<Action>& start_below) {
    return static_cast<std::size_t>(std::count_if(bars.begin(), bars.end(), [&](const Bar& b) {
        return b.contains(level) && (!start_below || b.start < *start_below);
    }));
}

std::size_t endpoints_at(const Barcode& bars, const Action& level) {
    std::size_t n = 0;
    for (const auto& b : bars) {
        if (b.start == level) ++n;
        if (b.end == level) ++n;
    }
    return n;
}

Barcode long_bar_witness(const Barcode& bars, const Rational& threshold) {
    Barcode out;
    for (const auto& b : bars) {
        if (b.length() >= Action(threshold)) out.push_back(b);
    }
    return out;
}

std::vector<Interval> intervals(const Barcode& bars) {
    std::vector<Interval> out;
    for (const auto& b : bars) out.push_back({b.start, b.end});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> PersistenceTable::probes() const {
    std::vector<Rational> out;
    const auto& c = critical_values;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) out.push_back((c[i] + c[i + 1]) / 2);
    if (!c.empty()) out.push_back(c.back() + 1);
    return out;
}

PersistenceTable extract(const Barcode& bars) {
    std::set<Rational> values;
    for (const auto& b : bars) {
        values.insert(b.start.value());
        if (b.end.is_finite()) values.insert(b.end.value());
    }
    PersistenceTable table;
    table.critical_values.assign(values.begin(), values.end());
    auto probes = table.probes();
    const std::size_t k = probes.size();
    for (std::size_t j = 0; j < k; ++j) {
        Action start(table.critical_values[j]);
        std::vector<std::size_t> row;
        for (std::size_t i = j; i < k; ++i) {
            Action probe(probes[i]);
            row.push_back(static_cast<std::size_t>(std::count_if(
                bars.begin(), bars.end(), [&](const Bar& b) { return b.start == start && b.contains(probe); })));
        }
        table.counts.push_back(std::move(row));
    }
    return table;
}

std::vector<Interval> recover(const PersistenceTable& table) {
    const auto& c = table.critical_values;
    const std::size_t k = c.size();
    for (std::size_t i = 1; i < k; ++i) {
        if (c[i] <= c[i - 1]) {
            throw Error(ErrorCode::InconsistentTable, "critical values are not strictly increasing",
                        to_string(c[i]));
        }
    }
    if (table.counts.size() != k) {
        throw Error(ErrorCode::InconsistentTable, "table has " + std::to_string(table.counts.size()) +
                                                      " rows for " + std::to_string(k) + " critical values");
    }
    std::vector<Interval> out;
    for (std::size_t j = 0; j < k; ++j) {
        const auto& row = table.counts[j];
        if (row.size() != k - j) {
            throw Error(ErrorCode::InconsistentTable,
                        "row for start " + to_string(c[j]) + " has " + std::to_string(row.size()) +
                            " probes, expected " + std::to_string(k - j),
                        to_string(c[j]));
        }
        for (std::size_t i = j + 1; i < k; ++i) {
            std::size_t before = row[i - 1 - j];
            std::size_t after = row[i - j];
            if (after > before) {
                throw Error(ErrorCode::InconsistentTable,
                            "more bars from " + to_string(c[j]) + " persist at probe " + std::to_string(i + 1) +
                                " than at probe " + std::to_string(i),
                            to_string(c[j]));
            }
            for (std::size_t n = after; n < before; ++n) out.push_back({Action(c[j]), Action(c[i])});
        }
        for (std::size_t n = 0; n < row[k - 1 - j]; ++n) out.push_back({Action(c[j]), Action::pos_inf()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace actionwin
