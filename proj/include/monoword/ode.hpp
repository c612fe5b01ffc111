#pragma once

// Adaptive Dormand-Prince 5(4) integrator for small fixed-size systems.
// Steps land exactly on every requested target time; the step size carries
// over between targets. Integration may run backward (target < current time).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoword {

class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OdeOptions {
    double rtol = 1e-10;
    double atol = 1e-10;
    double initial_step = 0.0;  // 0 picks a step from the tolerances
    double min_step = 1e-14;
    std::size_t max_steps = 2'000'000;
};

template <std::size_t N>
class DormandPrince {
public:
    using State = std::array<double, N>;

    DormandPrince(double t0, const State& y0, const OdeOptions& options) : t_(t0), y_(y0), opt_(options) {}

    double time() const { return t_; }
    const State& state() const { return y_; }
    std::size_t accepted_steps() const { return accepted_; }
    std::size_t rejected_steps() const { return rejected_; }

    // Replaces the state without touching the step size (used when splicing).
    void reset_state(const State& y) { y_ = y; }

    // Advances to `target`; on_step(t, y) runs after every accepted step.
    template <class Rhs, class OnStep>
    void advance_to(double target, Rhs&& rhs, OnStep&& on_step)
    {
        const double direction = target >= t_ ? 1.0 : -1.0;
        if (h_ == 0.0)
            h_ = opt_.initial_step > 0.0 ? opt_.initial_step
                                         : std::max(1e-6, 1e-3 * std::abs(target - t_));
        while (direction * (target - t_) > 0.0) {
            if (accepted_ + rejected_ > opt_.max_steps)
                throw IntegrationError("step budget exhausted at t = " + std::to_string(t_));
            double h = std::min(h_, std::abs(target - t_));
            const bool last = h >= std::abs(target - t_) * (1.0 - 1e-14);
            State y_new;
            State err;
            step(rhs, direction * h, y_new, err);
            double norm = 0.0;
            for (std::size_t i = 0; i < N; ++i) {
                const double scale = opt_.atol + opt_.rtol * std::max(std::abs(y_[i]), std::abs(y_new[i]));
                norm = std::max(norm, std::abs(err[i]) / scale);
            }
            if (!std::isfinite(norm))
                norm = 1e10;
            if (norm <= 1.0) {
                t_ = last ? target : t_ + direction * h;
                y_ = y_new;
                ++accepted_;
                on_step(t_, y_);
                const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
                // Keep the proposed step when the last one was clipped to the target.
                h_ = last ? std::max(h_, h * factor) : h * factor;
            } else {
                ++rejected_;
                h_ = h * std::clamp(0.9 * std::pow(norm, -0.2), 0.1, 0.9);
                if (h_ < opt_.min_step)
                    throw IntegrationError("step size underflow at t = " + std::to_string(t_));
            }
        }
    }

    template <class Rhs>
    void advance_to(double target, Rhs&& rhs)
    {
        advance_to(target, rhs, [](double, const State&) {});
    }

private:
    template <class Rhs>
    void step(Rhs& f, double h, State& y_new, State& err) const
    {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                                a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                                a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                                b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                                e6 = 22.0 / 525, e7 = -1.0 / 40;
        State k1, k2, k3, k4, k5, k6, k7, tmp;
        const double t = t_;
        const State& y = y_;
        k1 = f(t, y);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * a21 * k1[i];
        k2 = f(t + c2 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = f(t + c3 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f(t + c4 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f(t + c5 * h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        k6 = f(t + h, tmp);
        for (std::size_t i = 0; i < N; ++i)
            y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        k7 = f(t + h, y_new);
        for (std::size_t i = 0; i < N; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    }

    double t_;
    State y_;
    OdeOptions opt_;
    double h_ = 0.0;
    std::size_t accepted_ = 0;
    std::size_t rejected_ = 0;
};

}  // namespace monoword
