#include "actionwin/displacement.hpp"

#include <algorithm>
#include <numeric>

namespace actionwin {

OscillationProfile<Rational> rescaling_schedule(const Rational& a, const Rational& s) {
    if (a <= 0) throw Error(ErrorCode::InvalidProfile, "a must be positive");
    if (s < 0 || s >= 1) throw Error(ErrorCode::InvalidProfile, "s must lie in [0, 1)");
    // On the image slab max H = (1 - t)(a/2) / (1 - t) and min H = -(1 - t)(a/2) / (1 - t).
    Rational half = a / 2;
    std::vector<ProfileSample<Rational>> samples{{Rational(0), half, Rational(-half)}};
    if (s > 0) samples.push_back({s, half, Rational(-half)});
    samples.push_back({Rational(1), half, Rational(-half)});
    return OscillationProfile<Rational>(std::move(samples));
}

Rational rescaling_then_displace(const Rational& a, const Rational& s, const Rational& delta) {
    if (delta < 0) throw Error(ErrorCode::InvalidProfile, "delta must be non-negative");
    return oscillation(rescaling_schedule(a, s), s) + delta;
}

void SigmaProfile::validate() const {
    if (sigma.empty()) throw Error(ErrorCode::InvalidProfile, "sigma profile is empty");
    std::size_t n = sigma.size() - 1;
    for (std::size_t k = 0; k <= n; ++k) {
        const Action& v = sigma[k];
        if (v.is_neg_inf() || (v.is_finite() && v.value() <= 0)) {
            throw Error(ErrorCode::InvalidProfile, "sigma_" + std::to_string(k) + " must be positive",
                        std::to_string(k));
        }
        if (!(v == sigma[n - k])) {
            throw Error(ErrorCode::InvalidProfile,
                        "sigma_" + std::to_string(k) + " = " + to_string(v) + " differs from sigma_" +
                            std::to_string(n - k) + " = " + to_string(sigma[n - k]),
                        std::to_string(k));
        }
    }
}

void BettiProfile::validate() const {
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (betti[k] < 0) {
            throw Error(ErrorCode::InvalidProfile, "b_" + std::to_string(k) + " is negative", std::to_string(k));
        }
    }
}

BoundReport theorem_bound(const SigmaProfile& sigma, const BettiProfile& betti, const Action& l,
                          const Rational& osc) {
    sigma.validate();
    betti.validate();
    if (betti.betti.size() != sigma.sigma.size()) {
        throw Error(ErrorCode::InvalidProfile, "sigma has " + std::to_string(sigma.sigma.size()) +
                                                   " entries, betti has " + std::to_string(betti.betti.size()));
    }
    if (l.is_neg_inf() || (l.is_finite() && l.value() <= 0)) {
        throw Error(ErrorCode::InvalidProfile, "l must be positive");
    }

    BoundReport report;
    report.ordering.resize(sigma.sigma.size());
    std::iota(report.ordering.begin(), report.ordering.end(), 0);
    std::stable_sort(report.ordering.begin(), report.ordering.end(),
                     [&](int x, int y) { return sigma.sigma[x] > sigma.sigma[y]; });

    auto threshold = [&](std::size_t i) { return std::min(l, sigma.sigma[report.ordering[i]]); };
    Action o(osc);
    // Thresholds decrease along the ordering, so the qualifying indices form a prefix.
    for (std::size_t i = 0; i < report.ordering.size(); ++i) {
        if (o < threshold(i)) report.i_star = static_cast<int>(i);
    }
    if (!report.i_star) {
        report.threshold = threshold(0);
        report.at_boundary = o == report.threshold;
        return report;
    }
    std::size_t star = static_cast<std::size_t>(*report.i_star);
    for (std::size_t j = 0; j <= star; ++j) report.count += betti.betti[report.ordering[j]];
    report.threshold = threshold(star);
    const Action& s = sigma.sigma[report.ordering[star]];
    if (l.is_pos_inf() && s.is_pos_inf()) {
        report.binding = "none";
    } else if (l == s) {
        report.binding = "l, sigma";
    } else {
        report.binding = l < s ? "l" : "sigma";
    }
    return report;
}

std::string summary_line(const BoundReport& report) {
    std::string line = "count: " + std::to_string(report.count);
    if (!report.i_star) {
        if (report.at_boundary) line += " (strict inequality required)";
        return line;
    }
    return line + ", binding: " + report.binding;
}

}  // namespace actionwin
