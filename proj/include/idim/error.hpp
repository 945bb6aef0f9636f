#pragma once

#include <stdexcept>
#include <string>

namespace idim {

// Malformed or incompatible caller input. Maps to CLI exit status 1.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A structural invariant failed a runtime check. Maps to CLI exit status 2.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// A value that may be unbounded. Used where a ratio has a zero denominator
// (variance 0, integral 0, characteristic size 0); kept distinct from
// floating infinity so CSV output remains parseable.
class Estimate {
public:
    Estimate() = default;  // degenerate
    static Estimate of(double value) { return Estimate(value, false); }
    static Estimate degenerate() { return Estimate(0.0, true); }

    bool is_degenerate() const { return degenerate_; }
    double value() const {
        if (degenerate_) throw std::logic_error("value() on degenerate estimate");
        return value_;
    }
    std::string to_string() const;

private:
    Estimate(double value, bool degenerate) : value_(value), degenerate_(degenerate) {}
    double value_ = 0.0;
    bool degenerate_ = true;
};

}  // namespace idim
