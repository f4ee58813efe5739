#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "actionwin/error.hpp"
#include "actionwin/piecewise.hpp"
#include "actionwin/rational.hpp"

namespace actionwin {

/// Sampled (t, max H, min H) on [0, 1], interpolated linearly.
template <typename T>
struct ProfileSample {
    T t;
    T max;
    T min;
};

template <typename T>
class OscillationProfile {
public:
    OscillationProfile() = default;

    /// Throws NonMonotoneTime unless t strictly increases from 0 to 1, and
    /// InvalidProfile if max < min somewhere.
    explicit OscillationProfile(std::vector<ProfileSample<T>> samples) : samples_(std::move(samples)) {
        using N = NumberTraits<T>;
        if (samples_.size() < 2) {
            throw Error(ErrorCode::InvalidProfile, "a profile needs at least two samples");
        }
        if (!N::equal(samples_.front().t, T(0)) || !N::equal(samples_.back().t, T(1))) {
            throw Error(ErrorCode::NonMonotoneTime, "samples must run from t = 0 to t = 1");
        }
        std::vector<std::pair<T, T>> upper, lower;
        for (std::size_t i = 0; i < samples_.size(); ++i) {
            const auto& s = samples_[i];
            if (N::less(s.max, s.min)) {
                throw Error(ErrorCode::InvalidProfile, "max < min at t = " + N::show(s.t), std::to_string(i));
            }
            upper.emplace_back(s.t, s.max);
            lower.emplace_back(s.t, s.min);
        }
        max_ = PiecewiseLinear<T>(std::move(upper));
        min_ = PiecewiseLinear<T>(std::move(lower));
    }

    /// max - min == width on [0, 1], centred at 0.
    static OscillationProfile constant_width(const T& width) {
        T half = width / T(2);
        return OscillationProfile({{T(0), half, T(-half)}, {T(1), half, T(-half)}});
    }

    const std::vector<ProfileSample<T>>& samples() const noexcept { return samples_; }
    const PiecewiseLinear<T>& max_curve() const noexcept { return max_; }
    const PiecewiseLinear<T>& min_curve() const noexcept { return min_; }

    T spread(const T& t) const { return max_(t) - min_(t); }

private:
    std::vector<ProfileSample<T>> samples_;
    PiecewiseLinear<T> max_;
    PiecewiseLinear<T> min_;
};

/// Integral of max - min over [0, t_end] (exact trapezoid; exact for Rational).
template <typename T>
T oscillation(const OscillationProfile<T>& profile, const T& t_end) {
    using N = NumberTraits<T>;
    if (N::less(t_end, T(0)) || N::less(T(1), t_end)) {
        throw Error(ErrorCode::InvalidProfile, "t_end " + N::show(t_end) + " outside [0, 1]");
    }
    return profile.max_curve().integral(T(0), t_end) - profile.min_curve().integral(T(0), t_end);
}

/// The rescaling H_t = -z / (1 - t) restricted to {|z| <= a/2}, moved along its
/// own flow: max H = a/2, min H = -a/2 for t in [0, s].
OscillationProfile<Rational> rescaling_schedule(const Rational& a, const Rational& s);

/// Total oscillation of the rescaling schedule on [0, s] followed by a final
/// displacement of oscillation delta.
Rational rescaling_then_displace(const Rational& a, const Rational& s, const Rational& delta);

template <typename T>
struct ChordDrift {
    /// (t, l(t)) at every breakpoint of the rates.
    std::vector<std::pair<T, T>> trajectory;
    T delta;
    T oscillation;
    /// |delta| <= oscillation (with tolerance in floating mode).
    bool bounded = false;
};

/// l(t) = l0 + integral of (end_rate - start_rate). Throws RatesExceedProfile
/// when a rate leaves [min H, max H] at a breakpoint (linearity makes the
/// breakpoints sufficient).
template <typename T>
ChordDrift<T> chord_drift(const T& initial_length, const PiecewiseLinear<T>& end_rate,
                          const PiecewiseLinear<T>& start_rate, const OscillationProfile<T>& profile) {
    using N = NumberTraits<T>;
    for (const auto* curve : {&end_rate, &start_rate}) {
        if (!curve->covers(T(0)) || !curve->covers(T(1))) {
            throw Error(ErrorCode::InvalidProfile, "rates must be defined on [0, 1]");
        }
    }
    std::vector<T> points{T(0), T(1)};
    for (const auto* curve : {&end_rate, &start_rate}) {
        for (const auto& knot : curve->knots()) points.push_back(knot.first);
    }
    for (const auto& s : profile.samples()) points.push_back(s.t);
    std::sort(points.begin(), points.end(), [](const T& x, const T& y) { return x < y; });
    std::vector<T> grid;
    for (const auto& p : points) {
        if (N::less(p, T(0)) || N::less(T(1), p)) continue;
        if (grid.empty() || N::less(grid.back(), p)) grid.push_back(p);
    }

    for (const auto& t : grid) {
        T hi = profile.max_curve()(t);
        T lo = profile.min_curve()(t);
        for (const auto& [name, curve] : {std::pair{"end", &end_rate}, std::pair{"start", &start_rate}}) {
            T r = (*curve)(t);
            if (N::less(hi, r) || N::less(r, lo)) {
                throw Error(ErrorCode::RatesExceedProfile,
                            std::string(name) + " rate " + N::show(r) + " outside [" + N::show(lo) + ", " +
                                N::show(hi) + "] at t = " + N::show(t),
                            N::show(t));
            }
        }
    }

    ChordDrift<T> out;
    T length = initial_length;
    out.trajectory.emplace_back(grid.front(), length);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        length += end_rate.integral(grid[i - 1], grid[i]) - start_rate.integral(grid[i - 1], grid[i]);
        out.trajectory.emplace_back(grid[i], length);
    }
    out.delta = T(length - initial_length);
    out.oscillation = oscillation(profile, T(1));
    T magnitude = N::less(out.delta, T(0)) ? T(-out.delta) : out.delta;
    out.bounded = !N::less(out.oscillation, magnitude);
    return out;
}

/// sigma_0 ... sigma_n (positive rationals or +inf); sigma_k == sigma_{n-k}.
struct SigmaProfile {
    std::vector<Action> sigma;
    int dimension() const { return static_cast<int>(sigma.size()) - 1; }
    /// Throws InvalidProfile.
    void validate() const;
};

/// Betti numbers b_0 ... b_n.
struct BettiProfile {
    std::vector<long> betti;
    void validate() const;
};

struct BoundReport {
    long count = 0;
    std::optional<int> i_star;
    /// Degrees by decreasing sigma, ties by ascending degree.
    std::vector<int> ordering;
    /// Which of l and sigma_{iota_{i*}} attains the minimum: "l", "sigma",
    /// "l, sigma" or "none" (both infinite); empty when no index qualifies.
    std::string binding;
    /// min{l, sigma} at i_star, or at index 0 when nothing qualifies.
    Action threshold;
    /// osc equals the threshold of index 0 (no index qualifies).
    bool at_boundary = false;
    /// The bound assumes the displaced Legendrian is transverse to the Reeb
    /// flow applied to the original; this is not checked.
    bool transversality_assumed = true;
};

/// Largest i with osc < min{l, sigma_{iota_i}} and the sum of b_{iota_j}
/// for j <= i. Throws InvalidProfile on inconsistent profiles.
BoundReport theorem_bound(const SigmaProfile& sigma, const BettiProfile& betti, const Action& l,
                          const Rational& osc);

/// "count: 2, binding: l", or "count: 0 (strict inequality required)".
std::string summary_line(const BoundReport& report);

}  // namespace actionwin
