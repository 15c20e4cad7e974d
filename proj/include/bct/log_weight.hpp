#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace bct {

/// A non-negative weight kept in natural-log domain, with a tagged ZERO
/// element (never -inf arithmetic). ZERO absorbs under multiplication and
/// is the identity of probability addition (log-sum-exp).
class LogWeight {
public:
    LogWeight() : log_(0.0), zero_(false) {}  // weight 1

    static LogWeight zero() {
        LogWeight w;
        w.zero_ = true;
        w.log_ = 0.0;
        return w;
    }
    static LogWeight one() { return LogWeight(); }
    static LogWeight from_log(double log_value) {
        LogWeight w;
        w.log_ = log_value;
        return w;
    }
    static LogWeight from_value(double value) {
        return value <= 0.0 ? zero() : from_log(std::log(value));
    }

    bool is_zero() const { return zero_; }

    /// Natural log; -inf for ZERO.
    double log() const { return zero_ ? -std::numeric_limits<double>::infinity() : log_; }
    double log10() const { return log() / std::numbers::ln10; }
    double value() const { return zero_ ? 0.0 : std::exp(log_); }

    friend LogWeight operator*(LogWeight a, LogWeight b) {
        if (a.zero_ || b.zero_) return zero();
        return from_log(a.log_ + b.log_);
    }
    LogWeight& operator*=(LogWeight o) { return *this = *this * o; }

    /// Probability addition: log(e^a + e^b) in max-shift form.
    friend LogWeight log_sum(LogWeight a, LogWeight b) {
        if (a.zero_) return b;
        if (b.zero_) return a;
        double hi = a.log_ > b.log_ ? a.log_ : b.log_;
        double lo = a.log_ > b.log_ ? b.log_ : a.log_;
        return from_log(hi + std::log1p(std::exp(lo - hi)));
    }

    /// ZERO compares below every non-zero weight.
    friend bool operator<(LogWeight a, LogWeight b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.log_ < b.log_;
    }
    friend bool operator>(LogWeight a, LogWeight b) { return b < a; }
    friend bool operator>=(LogWeight a, LogWeight b) { return !(a < b); }
    friend bool operator<=(LogWeight a, LogWeight b) { return !(b < a); }
    friend bool operator==(LogWeight a, LogWeight b) {
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.log_ == b.log_;
    }

private:
    double log_;
    bool zero_;
};

}  // namespace bct
