#include "actionwin/random.hpp"

#include <algorithm>
#include <set>

namespace actionwin {

std::size_t index(Rng& rng, std::size_t n) {
    if (n == 0) throw std::invalid_argument("index: empty range");
    return static_cast<std::size_t>(rng() % n);
}

long uniform(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(index(rng, static_cast<std::size_t>(hi - lo + 1)));
}

bool coin(Rng& rng, unsigned percent) { return index(rng, 100) < percent; }

Scalar random_scalar(const FieldSpec& field, Rng& rng, bool nonzero) {
    if (field.is_prime_field()) {
        long p = field.characteristic();
        return Scalar(field, uniform(rng, nonzero ? 1 : 0, p - 1));
    }
    long num = 0;
    do {
        num = uniform(rng, -3, 3);
    } while (nonzero && num == 0);
    return Scalar(field, ratio(num, uniform(rng, 1, 3)));
}

Matrix random_action_preserving_matrix(const FilteredComplex& complex, Rng& rng, unsigned fill_percent) {
    const auto& gens = complex.generators();
    Matrix b = Matrix::identity(complex.field(), gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        b.at(j, j) = random_scalar(complex.field(), rng, true);
        for (std::size_t i = 0; i < j; ++i) {
            if (gens[i].degree == gens[j].degree && gens[i].action <= gens[j].action && coin(rng, fill_percent)) {
                b.at(i, j) = random_scalar(complex.field(), rng);
            }
        }
    }
    return b;
}

FilteredComplex random_complex_on(const FieldSpec& field, Rng& rng, const Window& window,
                                  std::vector<Generator> generators, unsigned pairing_percent) {
    std::vector<std::size_t> order(generators.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[index(rng, i)]);

    std::vector<bool> used(generators.size(), false);
    std::map<std::string, ChainVector> diff;
    for (std::size_t x : order) {
        if (used[x] || !coin(rng, pairing_percent)) continue;
        std::vector<std::size_t> candidates;
        for (std::size_t y = 0; y < generators.size(); ++y) {
            if (!used[y] && y != x && generators[y].degree == generators[x].degree - 1 &&
                generators[y].action < generators[x].action) {
                candidates.push_back(y);
            }
        }
        if (candidates.empty()) continue;
        std::size_t y = candidates[index(rng, candidates.size())];
        used[x] = used[y] = true;
        diff[generators[x].id] = ChainVector{{generators[y].id, random_scalar(field, rng, true)}};
    }
    FilteredComplex base = FilteredComplex::build(field, window, std::move(generators), diff);
    return base.change_basis(random_action_preserving_matrix(base, rng));
}

FilteredComplex random_complex(const FieldSpec& field, Rng& rng, const RandomComplexOptions& options) {
    std::size_t n = static_cast<std::size_t>(
        uniform(rng, static_cast<long>(options.min_generators), static_cast<long>(options.max_generators)));
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back({"g" + std::to_string(i),
                        ratio(uniform(rng, options.action_min, options.action_max), options.action_denominator),
                        static_cast<int>(uniform(rng, options.min_degree, options.max_degree))});
    }
    return random_complex_on(field, rng, Window{}, std::move(gens), options.pairing_percent);
}

Barcode random_barcode(Rng& rng, std::size_t max_bars) {
    Barcode bars;
    std::size_t n = index(rng, max_bars + 1);
    for (std::size_t i = 0; i < n; ++i) {
        Rational start(ratio(uniform(rng, 0, 40), 4));
        Bar bar{Action(start), Action::pos_inf(), static_cast<int>(uniform(rng, 0, 2))};
        if (!coin(rng, 25)) bar.end = Action(Rational(start + ratio(uniform(rng, 1, 20), 4)));
        bars.push_back(bar);
    }
    return sorted(std::move(bars));
}

namespace {

const Rational kLower(0);
const Rational kUpper(20);
const Rational kProbeSpeed = ratio(1, 1024);

// Smallest positive distance between distinct levels among the generators and
// the window ends.
Rational min_gap(const FilteredComplex& c) {
    std::set<Rational> levels{kLower, kUpper};
    for (const auto& g : c.generators()) levels.insert(g.action);
    Rational gap = 1;
    for (auto it = std::next(levels.begin()); it != levels.end(); ++it) gap = std::min(gap, Rational(*it - *std::prev(it)));
    return gap;
}

// Rates forced by the previous event: separate a newborn pair, carry an
// entering generator into the window.
std::map<std::string, Rational> forced_rates(const SingularEvent* previous, const Rational& speed) {
    std::map<std::string, Rational> rates;
    if (!previous) return rates;
    if (auto b = std::get_if<Birth>(&previous->kind)) {
        rates[b->x] = speed;
        rates[b->y] = -speed;
    } else if (auto e = std::get_if<EntryBelow>(&previous->kind)) {
        rates[e->generator.id] = speed;
    } else if (auto e = std::get_if<EntryAbove>(&previous->kind)) {
        rates[e->generator.id] = -speed;
    }
    return rates;
}

bool simulates(const Timeline& tl) {
    try {
        simulate(tl, SimulateOptions{false});
        return true;
    } catch (const Error&) {
        return false;
    }
}

struct TimelineBuilder {
    const FieldSpec& field;
    Rng& rng;
    const RandomTimelineOptions& options;
    Timeline timeline;
    Rational clock{0};
    std::size_t fresh = 0;

    const SingularEvent* previous() const {
        if (timeline.items.empty()) return nullptr;
        return std::get_if<SingularEvent>(&timeline.items.back());
    }

    // A trailing event is sampled after a short forced drift, since a newborn
    // pair or an entering generator is not a valid complex at the event itself.
    FilteredComplex current() const { return simulate(probed(timeline), SimulateOptions{false}).samples.back().complex; }

    Timeline probed(Timeline tl) const {
        if (auto ev = tl.items.empty() ? nullptr : std::get_if<SingularEvent>(&tl.items.back())) {
            tl.items.emplace_back(DriftSegment{ev->time, ev->time + 1, forced_rates(ev, kProbeSpeed), 0, 0, false, {}});
        }
        return tl;
    }

    DriftSegment random_drift(const FilteredComplex& c) {
        DriftSegment d{clock, clock + 1, forced_rates(previous(), ratio(uniform(rng, 1, 2), 8)), 0, 0, false, {}};
        for (const auto& g : c.generators()) {
            if (!d.rates.count(g.id) && coin(rng, 40)) {
                Rational r(ratio(uniform(rng, -2, 2), 4));
                if (r != 0) d.rates[g.id] = r;
            }
        }
        return d;
    }

    std::string fresh_id() { return "h" + std::to_string(fresh++); }

    static Rational at_end(const FilteredComplex& c, const DriftSegment& d, const std::string& id) {
        return c.generator(id).action + d.rate_of(id) * (d.t1 - d.t0);
    }

    // One candidate drift + event; nullopt when the kind is not available.
    std::optional<std::pair<DriftSegment, SingularEvent>> propose(const FilteredComplex& c) {
        DriftSegment d = random_drift(c);
        Rational t = d.t1;
        const auto& gens = c.generators();
        bool room = gens.size() + 2 <= options.max_generators;
        switch (index(rng, 7)) {
            case 0: {  // handle-slide
                if (gens.empty()) return std::nullopt;
                const Generator& target = gens[index(rng, gens.size())];
                Rational top = at_end(c, d, target.id);
                ChainVector addend;
                for (const auto& g : gens) {
                    if (g.id != target.id && g.degree == target.degree && at_end(c, d, g.id) <= top && coin(rng, 60)) {
                        addend.add(g.id, random_scalar(field, rng, true));
                    }
                }
                if (addend.is_zero()) return std::nullopt;
                return std::pair{d, SingularEvent{t, HandleSlide{target.id, addend, random_scalar(field, rng, true)}}};
            }
            case 1: {  // birth
                if (!room) return std::nullopt;
                Rational level(ratio(uniform(rng, 1, 79), 4));
                std::string x = fresh_id();
                std::string y = fresh_id();
                return std::pair{d, SingularEvent{t, Birth{x, y, static_cast<int>(uniform(rng, 1, 3)), level,
                                                            random_scalar(field, rng, true)}}};
            }
            case 2: {  // death of an isolated pair
                std::vector<std::pair<std::string, std::string>> pairs;
                auto diff = c.differential_map();
                for (const auto& [x, chain] : diff) {
                    if (chain.size() != 1) continue;
                    const std::string& y = chain.terms().begin()->first;
                    if (diff.count(y)) continue;
                    bool isolated = std::none_of(diff.begin(), diff.end(), [&](const auto& kv) {
                        return kv.first != x && (kv.second.coefficient(x) || kv.second.coefficient(y));
                    });
                    if (isolated) pairs.emplace_back(x, y);
                }
                if (pairs.empty()) return std::nullopt;
                auto [x, y] = pairs[index(rng, pairs.size())];
                d.rates.erase(x);
                Rational meet = at_end(c, d, y);
                d.rates[x] = meet - c.generator(x).action;
                return std::pair{d, SingularEvent{t, Death{x, y}}};
            }
            case 3: {  // exit below
                if (gens.empty()) return std::nullopt;
                const Generator& g = gens.front();
                d.rates[g.id] = kLower - g.action;
                return std::pair{d, SingularEvent{t, ExitBelow{g.id}}};
            }
            case 4: {  // entry below
                if (!room) return std::nullopt;
                Generator g{fresh_id(), kLower, static_cast<int>(uniform(rng, 0, 2))};
                ChainVector incoming;
                for (const auto& z : gens) {
                    if (z.degree == g.degree + 1 && coin(rng, 30)) incoming.add(z.id, random_scalar(field, rng, true));
                }
                return std::pair{d, SingularEvent{t, EntryBelow{g, incoming}}};
            }
            case 5: {  // exit above
                if (gens.empty()) return std::nullopt;
                const Generator& g = gens.back();
                d.rates[g.id] = kUpper - g.action;
                return std::pair{d, SingularEvent{t, ExitAbove{g.id}}};
            }
            default: {  // entry above
                if (!room) return std::nullopt;
                Generator g{fresh_id(), kUpper, static_cast<int>(uniform(rng, 1, 3))};
                ChainVector boundary;
                auto diff = c.differential_map();
                for (const auto& y : gens) {
                    if (y.degree == g.degree - 1 && !diff.count(y.id) && coin(rng, 50)) {
                        boundary.add(y.id, random_scalar(field, rng, true));
                    }
                }
                return std::pair{d, SingularEvent{t, EntryAbove{g, boundary}}};
            }
        }
    }

    bool step() {
        FilteredComplex c = current();
        for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
            auto proposal = propose(c);
            if (!proposal) continue;
            Timeline candidate = timeline;
            candidate.items.emplace_back(proposal->first);
            candidate.items.emplace_back(proposal->second);
            if (simulates(probed(candidate))) {
                timeline = std::move(candidate);
                clock += 1;
                return true;
            }
        }
        return false;
    }

    void finish() {
        FilteredComplex c = current();
        for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
            Timeline candidate = timeline;
            candidate.items.emplace_back(random_drift(c));
            if (simulates(candidate)) {
                timeline = std::move(candidate);
                return;
            }
        }
        // Slow enough that nothing can meet anything else.
        DriftSegment d{clock, clock + 1, forced_rates(previous(), min_gap(c) / 4), 0, 0, false, {}};
        timeline.items.emplace_back(d);
    }
};

}  // namespace

Timeline random_timeline(const FieldSpec& field, Rng& rng, const RandomTimelineOptions& options) {
    std::vector<Generator> gens;
    std::set<long> used;
    while (gens.size() < options.initial_generators) {
        long k = uniform(rng, 1, 79);
        if (!used.insert(k).second) continue;
        gens.push_back({"g" + std::to_string(gens.size()), ratio(k, 4), static_cast<int>(uniform(rng, 0, 2))});
    }
    TimelineBuilder builder{field, rng, options,
                            Timeline{random_complex_on(field, rng, Window{Action(kLower), Action(kUpper)}, gens), 0, {}}};
    for (std::size_t e = 0; e < options.events; ++e) {
        if (!builder.step()) break;
    }
    builder.finish();
    return builder.timeline;
}

namespace {

bool composable(const std::vector<const Chord*>& word) {
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i - 1]->ends[1] != word[i]->ends[0]) return false;
    }
    return true;
}

}  // namespace

RandomDga random_two_component_dga(const FieldSpec& field, Rng& rng, const RandomDgaOptions& options) {
    std::size_t n = static_cast<std::size_t>(
        uniform(rng, static_cast<long>(options.min_chords), static_cast<long>(options.max_chords)));
    std::set<long> used;
    std::vector<Chord> chords;
    static const int degree_pool[] = {-1, 0, 0, 0, 1, 1, 1, 2};
    for (std::size_t i = 0; i < n; ++i) {
        long k = 0;
        do {
            k = uniform(rng, 1, options.length_max * options.length_denominator);
        } while (!used.insert(k).second);
        Rational length = ratio(k, options.length_denominator);
        int degree = degree_pool[index(rng, 8)];
        // The first two chords are mixed 0 -> 1 so every DGA has linear generators.
        std::size_t kind = i < 2 ? 2 : index(rng, 4);
        std::string id = std::to_string(i);
        switch (kind) {
            case 0: chords.push_back(Chord::pure("a" + id, length, degree, 0)); break;
            case 1: chords.push_back(Chord::pure("b" + id, length, degree, 1)); break;
            case 2: chords.push_back(Chord::mixed("m" + id, length, degree, 0, 1)); break;
            default: chords.push_back(Chord::mixed("n" + id, length, degree, 1, 0)); break;
        }
    }
    std::sort(chords.begin(), chords.end(), [](const Chord& x, const Chord& y) { return x.length < y.length; });

    // Linear d0 pairing chords of the same kind and ends.
    std::map<std::string, AlgebraElement> d0;
    std::set<std::string> paired;
    for (std::size_t x = chords.size(); x-- > 0;) {
        if (paired.count(chords[x].label) || !coin(rng, 60)) continue;
        std::vector<std::size_t> candidates;
        for (std::size_t y = 0; y < x; ++y) {
            if (!paired.count(chords[y].label) && chords[y].kind == chords[x].kind && chords[y].ends == chords[x].ends &&
                chords[y].degree == chords[x].degree - 1) {
                candidates.push_back(y);
            }
        }
        if (candidates.empty()) continue;
        const Chord& y = chords[candidates[index(rng, candidates.size())]];
        paired.insert(chords[x].label);
        paired.insert(y.label);
        d0.emplace(chords[x].label, AlgebraElement::word(field, {y.label}, random_scalar(field, rng, true)));
    }
    ChordDGA base = ChordDGA::build(field, chords, d0);

    Augmentation eps0;
    for (const auto& c : chords) {
        bool killed = std::any_of(d0.begin(), d0.end(), [&](const auto& kv) { return !kv.second.coefficient({c.label}).is_zero(); });
        if (c.is_pure() && c.degree == 0 && !killed) {
            Scalar v = random_scalar(field, rng);
            if (!v.is_zero()) eps0[c.label] = v;
        }
    }

    // Tame automorphism psi(c) = c + k w with w a composable word of shorter
    // chords, same ends and degree, and total length below l(c).
    std::map<std::string, AlgebraElement> psi;
    std::map<std::string, AlgebraElement> psi_inv;
    for (std::size_t i = 0; i < chords.size(); ++i) {
        const Chord& c = chords[i];
        AlgebraElement image = AlgebraElement::letter(field, c.label);
        AlgebraElement inverse = image;
        if (i > 0 && coin(rng, 50)) {
            for (int attempt = 0; attempt < 30; ++attempt) {
                std::size_t len = static_cast<std::size_t>(uniform(rng, 1, 3));
                std::vector<const Chord*> word;
                for (std::size_t k = 0; k < len; ++k) word.push_back(&chords[index(rng, i)]);
                Rational total = 0;
                int degree = 0;
                for (const auto* w : word) {
                    total += w->length;
                    degree += w->degree;
                }
                if (total >= c.length || degree != c.degree || !composable(word) || word.front()->ends[0] != c.ends[0] ||
                    word.back()->ends[1] != c.ends[1]) {
                    continue;
                }
                Word w;
                for (const auto* ch : word) w.push_back(ch->label);
                AlgebraElement added = AlgebraElement::word(field, w, random_scalar(field, rng, true));
                image += added;
                inverse = inverse - DgaMorphism(field, psi_inv).apply(added);
                break;
            }
        }
        psi.emplace(c.label, std::move(image));
        psi_inv.emplace(c.label, std::move(inverse));
    }
    DgaMorphism forward(field, psi);
    DgaMorphism backward(field, psi_inv);

    std::map<std::string, AlgebraElement> diff;
    Augmentation eps;
    for (const auto& c : chords) {
        const AlgebraElement& inv = backward.image(c.label);
        AlgebraElement dc = forward.apply(base.apply(inv));
        if (!dc.is_zero()) diff.emplace(c.label, std::move(dc));
        Scalar v = evaluate(eps0, inv);
        if (!v.is_zero()) eps[c.label] = v;
    }
    return RandomDga{ChordDGA::build(field, std::move(chords), std::move(diff)), std::move(eps)};
}

Augmentation restrict_augmentation(const ChordDGA& dga, const Augmentation& eps, const Action& l) {
    Augmentation out;
    for (const auto& [label, value] : eps) {
        const Chord& c = dga.chord(label);
        if (c.is_pure() && Action(c.length) < l) out.emplace(label, value);
    }
    return out;
}

FilteredComplex random_two_cluster_complex(const FieldSpec& field, Rng& rng, const Rational& l, const Rational& gap,
                                           const Rational& width, std::size_t max_cluster) {
    std::vector<Generator> gens;
    Rational base = l;
    for (int cluster = 0; cluster < 2; ++cluster) {
        long size = 2 * uniform(rng, 0, static_cast<long>((max_cluster - 1) / 2)) + 1;
        for (long i = 0; i < size; ++i) {
            Rational offset = width * ratio(uniform(rng, 0, 15), 16);
            gens.push_back({"c" + std::to_string(cluster) + "_" + std::to_string(i), Rational(base + offset),
                            static_cast<int>(uniform(rng, 0, 2))});
        }
        base += width + gap;
    }
    return random_complex_on(field, rng, Window{}, std::move(gens));
}

}  // namespace actionwin
