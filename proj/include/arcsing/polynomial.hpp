#pragma once

#include "arcsing/monomial.hpp"
#include "arcsing/order.hpp"
#include "arcsing/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcsing {

// Sparse multivariate polynomial over Q. Immutable in spirit: all
// operations return new values. No stored coefficient is zero.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexLess>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, Rational c) {
        Polynomial p(nvars);
        p.add_term(Monomial(nvars, 0), std::move(c));
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t idx) {
        Polynomial p(nvars);
        Monomial m(nvars, 0);
        m.at(idx) = 1;
        p.add_term(m, 1);
        return p;
    }

    static Polynomial term(std::size_t nvars, Monomial m, Rational c) {
        Polynomial p(nvars);
        if (m.size() != nvars) throw std::invalid_argument("monomial length mismatch");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(Monomial m, Rational c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Leading term in grevlex. Undefined on zero.
    const Monomial& leading_monomial() const { return terms_.rbegin()->first; }
    const Rational& leading_coefficient() const { return terms_.rbegin()->second; }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_vars(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_vars(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        Polynomial r = constant(nvars_, 1);
        Polynomial base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= nvars_) throw std::out_of_range("variable index");
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial d = m;
            d[var] -= 1;
            r.add_term(std::move(d), c * m[var]);
        }
        return r;
    }

    // Minimum total degree over terms; +infinity for zero.
    OrderValue order_at_origin() const {
        if (terms_.empty()) return OrderValue::infinity();
        int best = total_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_) {
            int d = total_degree(m);
            if (d < best) best = d;
        }
        return OrderValue::finite(best);
    }

    int order_at_origin_int() const {
        OrderValue o = order_at_origin();
        if (!o.is_finite()) throw std::logic_error("order of zero polynomial");
        return static_cast<int>(numerator(o.value()));
    }

    // Homogeneous degree-1 coefficients, one per variable.
    std::vector<Rational> linear_part() const {
        std::vector<Rational> v(nvars_, 0);
        for (const auto& [m, c] : terms_) {
            if (total_degree(m) != 1) continue;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i] == 1) v[i] = c;
        }
        return v;
    }

    // General composition: variable i is replaced by images[i].
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_) throw std::invalid_argument("image count mismatch");
        std::size_t out_vars = images.empty() ? 0 : images.front().nvars();
        Polynomial r(out_vars);
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(out_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i] > 0) t = t * images[i].pow(m[i]);
            r += t;
        }
        return r;
    }

    // Shift of coordinates: x_i -> x_i + point[i].
    Polynomial translate(const std::vector<Rational>& point) const {
        if (point.size() != nvars_) throw std::invalid_argument("point length mismatch");
        std::vector<Polynomial> images;
        images.reserve(nvars_);
        bool trivial = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
            Polynomial img = variable(nvars_, i);
            if (point[i] != 0) {
                img += constant(nvars_, point[i]);
                trivial = false;
            }
            images.push_back(std::move(img));
        }
        if (trivial) return *this;
        return substitute(images);
    }

    // Same polynomial viewed in an ambient with `extra` appended variables.
    Polynomial extend_vars(std::size_t extra) const {
        Polynomial r(nvars_ + extra);
        for (const auto& [m, c] : terms_) {
            Monomial e = m;
            e.resize(nvars_ + extra, 0);
            r.terms_.emplace(std::move(e), c);
        }
        return r;
    }

    // Exact division by a monomial; throws if some term is not divisible.
    Polynomial divide_by_monomial(const Monomial& d) const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (!divides(d, m))
                throw std::domain_error("non-exact monomial division");
            r.terms_.emplace(mono_div(m, d), c);
        }
        return r;
    }

    // Canonical rendering, highest grevlex term first.
    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_vars = total_degree(m) > 0;
            if (a != 1 || !has_vars) {
                os << to_string(a);
                if (has_vars) os << "*";
            }
            bool inner_first = true;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                if (!inner_first) os << "*";
                inner_first = false;
                os << names.at(i);
                if (m[i] > 1) os << "^" << m[i];
            }
        }
        return os.str();
    }

private:
    void check_vars(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("polynomial variable-count mismatch");
    }

    std::size_t nvars_;
    TermMap terms_;
};

}  // namespace arcsing
