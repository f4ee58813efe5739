#include "actionwin/linearization.hpp"

namespace actionwin {

DgaReport check_partial_augmentation(const ChordDGA& dga, const Augmentation& eps, const Action& l) {
    DgaReport report;
    for (const auto& [label, value] : eps) {
        if (!dga.contains(label)) {
            report.issues.push_back({ErrorCode::ForeignGenerator, label, "augmentation names unknown chord '" + label + "'"});
            continue;
        }
        if (!(value.field() == dga.field())) {
            report.issues.push_back({ErrorCode::FieldMismatch, label, "value of '" + label + "' is over " + value.field().tag()});
            continue;
        }
        if (value.is_zero()) continue;
        const auto& c = dga.chord(label);
        if (!c.is_pure()) {
            report.issues.push_back({ErrorCode::AugmentationInvalid, label, "nonzero on mixed chord '" + label + "'"});
        } else if (!(Action(c.length) < l)) {
            report.issues.push_back({ErrorCode::AugmentationInvalid, label,
                                     "nonzero on '" + label + "' of length " + to_string(c.length) + " >= l"});
        } else if (c.degree != 0) {
            report.issues.push_back({ErrorCode::AugmentationInvalid, label,
                                     "nonzero on '" + label + "' of degree " + std::to_string(c.degree)});
        }
    }
    if (!report.ok()) return report;
    for (const auto& c : dga.chords()) {
        if (!c.is_pure() || !(Action(c.length) < l)) continue;
        Scalar v = evaluate(eps, dga.differential(c.label));
        if (!v.is_zero()) {
            report.issues.push_back({ErrorCode::AugmentationInvalid, c.label,
                                     "eps(d(" + c.label + ")) = " + v.to_string() + " != 0"});
        }
    }
    return report;
}

FilteredComplex partial_linearization(const ChordDGA& dga, const Augmentation& eps, const Action& a,
                                      const Action& b, const Action& l) {
    if (!l.is_pos_inf() && (!a.is_finite() || !b.is_finite() || Action(Rational(b.value() - a.value())) > l)) {
        throw Error(ErrorCode::WindowTooWide, "window [" + to_string(a) + ", " + to_string(b) +
                                                  ") is wider than l = " + to_string(l) + "; need b - a <= l");
    }
    dga.require_valid();
    auto report = check_partial_augmentation(dga, eps, l);
    if (!report.ok()) {
        const auto& first = report.issues.front();
        throw Error(first.code, first.message, first.witness);
    }

    Window window{a, b};
    auto in_window = [&](const Chord& c) { return c.is_linear_generator() && window.contains(c.length); };

    std::vector<Generator> gens;
    std::map<std::string, ChainVector> diff;
    for (const auto& m : dga.chords()) {
        if (!in_window(m)) continue;
        gens.push_back({m.label, m.length, m.degree});
        ChainVector dm;
        for (const auto& [w, k] : dga.differential(m.label).terms()) {
            const Chord* linear = nullptr;
            bool projected_out = false;
            std::string long_pure;
            for (const auto& letter : w) {
                const Chord& c = dga.chord(letter);
                if (in_window(c)) {
                    if (linear) projected_out = true;
                    linear = &c;
                } else if (!c.is_pure()) {
                    projected_out = true;
                } else if (!(Action(c.length) < l)) {
                    long_pure = letter;
                }
            }
            if (!linear || projected_out) continue;
            if (!long_pure.empty()) {
                throw Error(ErrorCode::PureChordOfForbiddenLength,
                            "d(" + m.label + ") contains '" + to_string(w) + "' whose pure chord '" + long_pure +
                                "' is not shorter than l",
                            long_pure);
            }
            Scalar coeff = k;
            for (const auto& letter : w) {
                if (letter == linear->label) continue;
                auto it = eps.find(letter);
                coeff *= it == eps.end() ? Scalar::zero(dga.field()) : it->second;
            }
            dm.add(linear->label, coeff);
        }
        if (!dm.is_zero()) diff.emplace(m.label, std::move(dm));
    }
    return FilteredComplex::build(dga.field(), window, std::move(gens), diff);
}

}  // namespace actionwin
