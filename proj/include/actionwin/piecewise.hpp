#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "actionwin/error.hpp"
#include "actionwin/rational.hpp"

namespace actionwin {

/// Comparison policy: exact for Rational, absolute tolerance for double.
template <typename T>
struct NumberTraits {
    static bool less(const T& a, const T& b) { return a < b; }
    static bool equal(const T& a, const T& b) { return a == b; }
    static std::string show(const T& v) { return to_string(v); }
};

template <>
struct NumberTraits<double> {
    static constexpr double tolerance = 1e-9;
    static bool less(double a, double b) { return a < b - tolerance; }
    static bool equal(double a, double b) { return std::fabs(a - b) <= tolerance; }
    static std::string show(double v) { return std::to_string(v); }
};

/// Continuous piecewise-linear function given by knots with strictly
/// increasing abscissae. Evaluation outside [front, back] is an error.
template <typename T>
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;

    /// Throws NonMonotoneTime unless the abscissae strictly increase.
    explicit PiecewiseLinear(std::vector<std::pair<T, T>> knots) : knots_(std::move(knots)) {
        for (std::size_t i = 1; i < knots_.size(); ++i) {
            if (!(knots_[i - 1].first < knots_[i].first)) {
                throw Error(ErrorCode::NonMonotoneTime,
                            "time " + NumberTraits<T>::show(knots_[i].first) + " does not follow " +
                                NumberTraits<T>::show(knots_[i - 1].first),
                            std::to_string(i));
            }
        }
    }

    static PiecewiseLinear constant(const T& value, const T& t0, const T& t1) {
        return PiecewiseLinear({{t0, value}, {t1, value}});
    }

    const std::vector<std::pair<T, T>>& knots() const noexcept { return knots_; }
    bool empty() const noexcept { return knots_.empty(); }
    const T& front_time() const { return knots_.front().first; }
    const T& back_time() const { return knots_.back().first; }

    bool covers(const T& t) const {
        return !knots_.empty() && !NumberTraits<T>::less(t, front_time()) && !NumberTraits<T>::less(back_time(), t);
    }

    T operator()(const T& t) const {
        if (!covers(t)) {
            throw Error(ErrorCode::InvalidProfile, "time " + NumberTraits<T>::show(t) + " outside the profile");
        }
        if (knots_.size() == 1) return knots_.front().second;
        std::size_t i = segment_of(t);
        const auto& [t0, v0] = knots_[i];
        const auto& [t1, v1] = knots_[i + 1];
        return T(v0 + (v1 - v0) * (t - t0) / (t1 - t0));
    }

    /// Exact integral of the interpolant over [a, b] (a <= b, both covered).
    T integral(const T& a, const T& b) const {
        if (!covers(a) || !covers(b)) {
            throw Error(ErrorCode::InvalidProfile, "integration range outside the profile");
        }
        T total = T(0);
        auto points = breakpoints_between(a, b);
        for (std::size_t i = 1; i < points.size(); ++i) {
            const T& s = points[i - 1];
            const T& e = points[i];
            total += ((*this)(s) + (*this)(e)) * (e - s) / 2;
        }
        return total;
    }

    /// a, every knot strictly inside (a, b), then b.
    std::vector<T> breakpoints_between(const T& a, const T& b) const {
        std::vector<T> out{a};
        for (const auto& [t, v] : knots_) {
            if (NumberTraits<T>::less(a, t) && NumberTraits<T>::less(t, b)) out.push_back(t);
        }
        if (NumberTraits<T>::less(a, b)) out.push_back(b);
        return out;
    }

private:
    std::size_t segment_of(const T& t) const {
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                   [](const T& value, const auto& knot) { return value < knot.first; });
        std::size_t i = static_cast<std::size_t>(it - knots_.begin());
        if (i == 0) return 0;
        return std::min(i - 1, knots_.size() - 2);
    }

    std::vector<std::pair<T, T>> knots_;
};

}  // namespace actionwin
