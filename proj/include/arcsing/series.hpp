#pragma once

#include "arcsing/errors.hpp"
#include "arcsing/order.hpp"
#include "arcsing/rational.hpp"

#include <limits>
#include <map>
#include <sstream>
#include <string>

namespace arcsing {

inline constexpr long long kDefaultPrecision = 64;

// Univariate formal series in t over Q: exact (finite support) or
// truncated with a tracked precision p, meaning coefficients of
// t^0 .. t^p are known and nothing is stored beyond.
class FormalSeries {
public:
    using CoeffMap = std::map<long long, Rational>;

    FormalSeries() = default;  // exact zero

    static FormalSeries zero() { return FormalSeries(); }

    static FormalSeries term(Rational c, long long e) {
        FormalSeries s;
        if (c != 0) s.coeffs_.emplace(e, std::move(c));
        return s;
    }

    static FormalSeries t(long long e = 1) { return term(1, e); }

    static FormalSeries truncated_zero(long long prec) {
        FormalSeries s;
        s.truncated_ = true;
        s.prec_ = prec;
        return s;
    }

    bool truncated() const { return truncated_; }
    long long precision() const { return prec_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_exact_zero() const { return !truncated_ && coeffs_.empty(); }
    bool is_single_term() const { return !truncated_ && coeffs_.size() == 1; }

    Rational coeff(long long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(0); }

    void set_coeff(long long e, Rational c) {
        if (truncated_ && e > prec_) return;
        if (c == 0) coeffs_.erase(e);
        else coeffs_[e] = std::move(c);
    }

    // Least exponent with a nonzero known coefficient.
    OrderValue order() const {
        if (!coeffs_.empty()) return OrderValue::finite(coeffs_.begin()->first);
        if (truncated_) return OrderValue::at_least(prec_ + 1);
        return OrderValue::infinity();
    }

    // Conservative lower bound on the order, as a plain integer.
    long long order_lower_bound() const {
        if (!coeffs_.empty()) return coeffs_.begin()->first;
        if (truncated_) return prec_ + 1;
        return std::numeric_limits<long long>::max();
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
        FormalSeries r = a;
        if (b.truncated_) r.clip(b.prec_);
        for (const auto& [e, c] : b.coeffs_) {
            if (r.truncated_ && e > r.prec_) continue;
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) r.coeffs_.emplace(e, c);
            else {
                it->second += c;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
        return r;
    }

    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
        return a + b.negated();
    }

    FormalSeries negated() const {
        FormalSeries r = *this;
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
        // An exact zero annihilates regardless of the other operand's mode.
        if (a.is_exact_zero() || b.is_exact_zero()) return zero();
        FormalSeries r;
        if (a.truncated_ || b.truncated_) {
            long long p = std::numeric_limits<long long>::max();
            if (a.truncated_) p = std::min(p, saturating_add(a.prec_, b.order_lower_bound()));
            if (b.truncated_) p = std::min(p, saturating_add(b.prec_, a.order_lower_bound()));
            r.truncated_ = true;
            r.prec_ = p;
        }
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                long long e = ea + eb;
                if (r.truncated_ && e > r.prec_) continue;
                auto it = r.coeffs_.find(e);
                if (it == r.coeffs_.end()) r.coeffs_.emplace(e, ca * cb);
                else {
                    it->second += ca * cb;
                    if (it->second == 0) r.coeffs_.erase(it);
                }
            }
        return r;
    }

    FormalSeries pow(int e) const {
        FormalSeries r = term(1, 0);
        FormalSeries base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    // Multiply by t^k (k may be negative when all exponents allow it).
    FormalSeries shifted(long long k) const {
        FormalSeries r;
        r.truncated_ = truncated_;
        if (truncated_) r.prec_ = prec_ + k;
        for (const auto& [e, c] : coeffs_) {
            if (e + k < 0) throw std::logic_error("negative exponent in series shift");
            r.coeffs_.emplace(e + k, c);
        }
        return r;
    }

    bool operator==(const FormalSeries& o) const {
        return truncated_ == o.truncated_ && (!truncated_ || prec_ == o.prec_) &&
               coeffs_ == o.coeffs_;
    }

    std::string str() const {
        std::ostringstream os;
        if (coeffs_.empty()) os << "0";
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1 || e == 0) {
                os << to_string(a);
                if (e != 0) os << "*";
            }
            if (e != 0) {
                os << "t";
                if (e != 1) os << "^" << e;
            }
        }
        if (truncated_) os << " + O(t^" << (prec_ + 1) << ")";
        return os.str();
    }

private:
    static long long saturating_add(long long a, long long b) {
        if (a > std::numeric_limits<long long>::max() - b)
            return std::numeric_limits<long long>::max();
        return a + b;
    }

    void clip(long long prec) {
        if (truncated_ && prec_ <= prec) return;
        truncated_ = true;
        prec_ = prec;
        coeffs_.erase(coeffs_.upper_bound(prec), coeffs_.end());
    }

    CoeffMap coeffs_;
    bool truncated_ = false;
    long long prec_ = 0;
};

// a / b where b is a unit (nonzero constant term). Exact when b is a
// single term; otherwise truncated long division at `prec`.
inline FormalSeries series_div_unit(const FormalSeries& a, const FormalSeries& b,
                                    long long prec = kDefaultPrecision) {
    if (b.constant_term() == 0)
        throw DivisionByNonUnit("divisor has zero constant term");
    if (b.is_single_term()) {
        FormalSeries r;
        if (a.truncated()) r = FormalSeries::truncated_zero(a.precision());
        for (const auto& [e, c] : a.coeffs()) r.set_coeff(e, c / b.constant_term());
        return r;
    }
    long long p = prec;
    if (a.truncated()) p = std::min(p, a.precision());
    if (b.truncated()) p = std::min(p, b.precision());
    FormalSeries q = FormalSeries::truncated_zero(p);
    const Rational b0 = b.constant_term();
    for (long long k = 0; k <= p; ++k) {
        Rational acc = a.coeff(k);
        for (const auto& [j, qc] : q.coeffs()) {
            if (j >= k) break;
            acc -= qc * b.coeff(k - j);
        }
        q.set_coeff(k, acc / b0);
    }
    return q;
}

// a / b for b nonzero of finite order; requires ord(a) >= ord(b).
inline FormalSeries series_divide(const FormalSeries& a, const FormalSeries& b,
                                  long long prec = kDefaultPrecision) {
    if (a.is_exact_zero()) return FormalSeries::zero();
    OrderValue ob = b.order();
    if (!ob.is_finite())
        throw PrecisionExhausted("divisor order not determined");
    long long shift = static_cast<long long>(numerator(ob.value()));
    if (a.order_lower_bound() < shift) {
        if (!a.order().is_finite())
            throw PrecisionExhausted("dividend order not determined");
        throw std::domain_error("series division would have a pole");
    }
    return series_div_unit(a.shifted(-shift), b.shifted(-shift), prec);
}

}  // namespace arcsing
