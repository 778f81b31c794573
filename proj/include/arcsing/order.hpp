#pragma once

#include "arcsing/rational.hpp"

#include <string>

namespace arcsing {

// Order of vanishing: an exact non-negative rational, a lower bound coming
// from truncated arithmetic, or +infinity for an exact zero.
class OrderValue {
public:
    enum class Kind { Finite, AtLeast, Infinity };

    static OrderValue finite(Rational v) { return OrderValue(Kind::Finite, std::move(v)); }
    static OrderValue at_least(Rational bound) { return OrderValue(Kind::AtLeast, std::move(bound)); }
    static OrderValue infinity() { return OrderValue(Kind::Infinity, 0); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_at_least() const { return kind_ == Kind::AtLeast; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }

    // Exact value (Finite) or lower bound (AtLeast).
    const Rational& value() const { return value_; }

    OrderValue divided_by(const Integer& w) const {
        if (kind_ == Kind::Infinity) return *this;
        return OrderValue(kind_, value_ / Rational(w));
    }

    bool operator==(const OrderValue& o) const {
        if (kind_ != o.kind_) return false;
        if (kind_ == Kind::Infinity) return true;
        return value_ == o.value_;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Finite: return to_string(value_);
            case Kind::AtLeast: return ">=" + to_string(value_);
            default: return "inf";
        }
    }

private:
    OrderValue(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}

    Kind kind_;
    Rational value_;
};

}  // namespace arcsing
