#pragma once

#include "arcsing/errors.hpp"
#include "arcsing/polynomial.hpp"
#include "arcsing/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arcsing {

// Arc through the origin: one series image per ambient variable, each with
// zero constant term, not all zero.
struct Arc {
    std::vector<FormalSeries> images;

    explicit Arc(std::vector<FormalSeries> ims = {}) : images(std::move(ims)) {}

    std::size_t nvars() const { return images.size(); }

    void check_invariants() const {
        bool all_zero = true;
        for (const auto& s : images) {
            if (s.constant_term() != 0)
                throw std::invalid_argument("arc image has nonzero constant term");
            if (!s.is_exact_zero()) all_zero = false;
        }
        if (all_zero) throw std::invalid_argument("trivial arc (all images zero)");
    }
};

// Evaluate p along the arc: ring homomorphism into K[[t]].
inline FormalSeries substitute(const Polynomial& p, const Arc& a) {
    if (p.nvars() != a.nvars())
        throw std::invalid_argument("arc/polynomial variable-count mismatch");
    FormalSeries r;
    for (const auto& [m, c] : p.terms()) {
        FormalSeries t = FormalSeries::term(c, 0);
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (m[i] > 0) t = t * a.images[i].pow(m[i]);
        r = r + t;
    }
    return r;
}

// min over images of the t-order.
inline OrderValue arc_order(const Arc& a) {
    std::optional<Rational> best_finite;
    std::optional<Rational> best_bound;
    for (const auto& s : a.images) {
        OrderValue o = s.order();
        if (o.is_finite()) {
            if (!best_finite || o.value() < *best_finite) best_finite = o.value();
        } else if (o.is_at_least()) {
            if (!best_bound || o.value() < *best_bound) best_bound = o.value();
        }
    }
    if (best_finite) {
        if (best_bound && *best_bound <= *best_finite)
            return OrderValue::at_least(*best_bound);
        return OrderValue::finite(*best_finite);
    }
    if (best_bound) return OrderValue::at_least(*best_bound);
    return OrderValue::infinity();
}

// Variety through the origin, locally V(f_1, ..., f_k).
struct Variety {
    std::vector<std::string> variables;
    std::vector<Polynomial> polynomials;

    std::size_t nvars() const { return variables.size(); }

    void check_invariants() const {
        if (polynomials.empty())
            throw std::invalid_argument("variety needs at least one defining polynomial");
        for (const auto& p : polynomials) {
            if (p.is_zero())
                throw std::invalid_argument("zero defining polynomial");
            if (p.nvars() != variables.size())
                throw std::invalid_argument("defining polynomial variable-count mismatch");
            if (p.terms().count(Monomial(p.nvars(), 0)))
                throw std::invalid_argument("defining polynomial does not vanish at origin");
        }
    }
};

struct Validation {
    bool exact;               // true: identically zero; false: zero up to precision
    long long precision = 0;  // meaningful when !exact
};

inline Validation validate_on_variety(const Arc& a, const Variety& v) {
    if (a.nvars() != v.nvars())
        throw std::invalid_argument("arc/variety variable-count mismatch");
    Validation res{true, 0};
    bool first_trunc = true;
    for (const auto& p : v.polynomials) {
        FormalSeries s = substitute(p, a);
        if (!s.coeffs().empty())
            throw ArcNotOnVariety("arc does not lie on the variety: nonzero image of a defining polynomial");
        if (s.truncated()) {
            res.exact = false;
            if (first_trunc || s.precision() < res.precision) res.precision = s.precision();
            first_trunc = false;
        }
    }
    return res;
}

// Graph construction: append the A^1 coordinate with image t.
inline Arc graph(const Arc& a) {
    Arc g = a;
    g.images.push_back(FormalSeries::t());
    return g;
}

// Exponent of one family coordinate: coeff * t^(a*N + b).
struct FamilyImage {
    Rational coeff = 1;
    long long a = 0;
    long long b = 1;
};

struct ArcFamily {
    std::vector<FamilyImage> images;  // one per ambient variable
    long long n_lo = 1;
    long long n_hi = 1;
};

inline Arc instantiate_family(const ArcFamily& f, long long N) {
    if (N < f.n_lo || N > f.n_hi)
        throw std::out_of_range("family parameter out of range");
    std::vector<FormalSeries> ims;
    ims.reserve(f.images.size());
    for (const auto& fi : f.images) {
        long long e = fi.a * N + fi.b;
        if (e < 1 && fi.coeff != 0)
            throw std::domain_error("family exponent must be >= 1");
        ims.push_back(FormalSeries::term(fi.coeff, e));
    }
    Arc arc(std::move(ims));
    arc.check_invariants();
    return arc;
}

}  // namespace arcsing
