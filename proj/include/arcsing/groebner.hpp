#pragma once

#include "arcsing/polynomial.hpp"
#include "arcsing/rees.hpp"

#include <optional>
#include <vector>

namespace arcsing {

// Remainder of p on division by the family F (grevlex).
inline Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis) {
    Polynomial r(p.nvars());
    while (!p.is_zero()) {
        const Monomial& lm = p.leading_monomial();
        bool reduced = false;
        for (const auto& f : basis) {
            if (f.is_zero()) continue;
            if (!divides(f.leading_monomial(), lm)) continue;
            Rational c = p.leading_coefficient() / f.leading_coefficient();
            Monomial q = mono_div(lm, f.leading_monomial());
            p -= Polynomial::term(p.nvars(), q, c) * f;
            reduced = true;
            break;
        }
        if (!reduced) {
            r.add_term(lm, p.leading_coefficient());
            p.add_term(lm, -p.leading_coefficient());
        }
    }
    return r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = Polynomial::term(f.nvars(), mono_div(l, f.leading_monomial()),
                                    Rational(1) / f.leading_coefficient());
    Polynomial b = Polynomial::term(g.nvars(), mono_div(l, g.leading_monomial()),
                                    Rational(1) / g.leading_coefficient());
    return a * f - b * g;
}

struct GroebnerBasis {
    std::vector<Polynomial> ideal_generators;
    std::vector<Polynomial> basis;  // reduced, monic, grevlex
};

// Buchberger with the lcm-coprimality criterion, followed by reduction.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
    GroebnerBasis out;
    out.ideal_generators = gens;
    std::vector<Polynomial> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(monic(g));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Monomial &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
        if (mono_lcm(mi, mj) == mono_mul(mi, mj)) continue;  // coprime leading terms
        Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        r = monic(r);
        for (std::size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
        basis.push_back(std::move(r));
    }
    // Minimalize: drop elements whose leading monomial is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            if (divides(basis[j].leading_monomial(), basis[i].leading_monomial())) {
                if (basis[j].leading_monomial() == basis[i].leading_monomial() && j > i)
                    continue;  // identical leading monomials: keep the first
                keep = false;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // Fully reduce each element against the others.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> rest;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) rest.push_back(minimal[j]);
        Polynomial lead = Polynomial::term(minimal[i].nvars(), minimal[i].leading_monomial(),
                                           minimal[i].leading_coefficient());
        Polynomial tail = minimal[i] - lead;
        minimal[i] = lead + normal_form(tail, rest);
    }
    out.basis = std::move(minimal);
    return out;
}

inline bool in_ideal(const Polynomial& p, const GroebnerBasis& gb) {
    return normal_form(p, gb.basis).is_zero();
}

struct ZeroDimResult {
    enum class Kind { Isolated, PositiveDimensional, Unknown };
    Kind kind = Kind::Unknown;
    int q = 0;                          // max of the per-variable exponents
    std::vector<int> pure_power_exponents;  // minimal a_v with v^a_v in the ideal
    std::optional<std::size_t> axis;    // witness axis for PositiveDimensional
    std::string reason;
};

// Decides whether V(ideal) = {origin}: zero-dimensional iff every variable
// has a pure-power leading monomial in the Groebner basis.
inline ZeroDimResult zero_dim_at_origin(const std::vector<Polynomial>& ideal,
                                        int exponent_cap = 64) {
    ZeroDimResult res;
    if (ideal.empty()) {
        res.reason = "empty ideal";
        return res;
    }
    std::size_t n = ideal.front().nvars();
    GroebnerBasis gb = buchberger(ideal);
    std::vector<bool> has_pure(n, false);
    for (const auto& f : gb.basis) {
        const Monomial& lm = f.leading_monomial();
        int nz = 0;
        std::size_t which = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (lm[i] > 0) { ++nz; which = i; }
        if (nz == 1) has_pure[which] = true;
        if (nz == 0) {  // unit ideal
            res.reason = "ideal is the unit ideal";
            return res;
        }
    }
    bool all_pure = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!has_pure[i]) all_pure = false;

    if (all_pure) {
        res.kind = ZeroDimResult::Kind::Isolated;
        res.pure_power_exponents.assign(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            int a = 0;
            for (int e = 1; e <= exponent_cap; ++e) {
                Monomial m(n, 0);
                m[v] = e;
                if (in_ideal(Polynomial::term(n, m, 1), gb)) { a = e; break; }
            }
            if (a == 0) {
                res.kind = ZeroDimResult::Kind::Unknown;
                res.reason = "pure-power membership search exceeded exponent cap";
                return res;
            }
            res.pure_power_exponents[v] = a;
            res.q = std::max(res.q, a);
        }
        return res;
    }
    // Look for a coordinate-axis witness: all generators vanish along it.
    for (std::size_t axis = 0; axis < n; ++axis) {
        bool contained = true;
        for (const auto& f : ideal)
            if (order_along_axis(f, axis) == 0) { contained = false; break; }
        if (contained) {
            res.kind = ZeroDimResult::Kind::PositiveDimensional;
            res.axis = axis;
            return res;
        }
    }
    res.reason = "no pure power for some variable and no coordinate-axis witness";
    return res;
}

}  // namespace arcsing
