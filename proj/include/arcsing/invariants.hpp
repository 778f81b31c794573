#pragma once

#include "arcsing/arc.hpp"
#include "arcsing/groebner.hpp"
#include "arcsing/nash.hpp"
#include "arcsing/rees.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arcsing {

struct InvariantOptions {
    long long precision = kDefaultPrecision;
    int exponent_cap = 12;
    int membership_cap = 64;
    int max_steps = kDefaultMaxSteps;
    std::size_t sample_count_cap = 100000;
};

// The multiplicity algebra {f_i W^(ord f_i)} of the variety, closed.
inline WeightedAlgebra multiplicity_algebra(const Variety& v) {
    WeightedAlgebra g;
    g.variables = v.variables;
    for (const auto& f : v.polynomials)
        g.generators.push_back({f, f.order_at_origin_int()});
    return diff_closure(g);
}

struct ContactReport {
    long long ord_phi = 1;
    Rational r;
    Rational r_bar;
    long long rho = 0;
    Rational rho_bar;
    bool rho_from_blowups = false;  // false: rho = floor(r) ("algebraic")
};

namespace detail {

// Restriction of an arc to the kept variables (order must be preserved
// by construction when used for separated eliminations).
inline Arc project_arc(const Arc& a, const std::vector<std::size_t>& kept) {
    std::vector<FormalSeries> ims;
    for (std::size_t i : kept) ims.push_back(a.images[i]);
    return Arc(std::move(ims));
}

inline Polynomial project_poly(const Polynomial& p, const std::vector<std::size_t>& kept) {
    Polynomial r(kept.size());
    for (const auto& [m, c] : p.terms()) {
        Monomial k(kept.size());
        int moved = 0;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            k[j] = m[kept[j]];
            moved += k[j];
        }
        if (moved != total_degree(m))
            throw std::logic_error("projection of a polynomial with dropped support");
        r.add_term(std::move(k), c);
    }
    return r;
}

// Consistency of r with the eliminated algebra: r equals the minimum of the
// dropped-variable orders and the contact order of the eliminated algebra.
inline void check_elimination_consistency(const WeightedAlgebra& closure, const Arc& a,
                                          const Rational& r) {
    std::set<std::size_t> bare;
    for (const auto& gen : closure.generators) {
        if (gen.weight != 1 || gen.poly.size() != 1) continue;
        const Monomial& m = gen.poly.leading_monomial();
        if (total_degree(m) != 1) continue;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] == 1) bare.insert(i);
    }
    if (bare.empty() || bare.size() == closure.nvars()) return;
    WeightedAlgebra elim;
    try {
        elim = eliminate_separated(closure, bare);
    } catch (const ElimNotSeparated&) {
        return;
    }
    if (elim.generators.empty()) return;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < closure.nvars(); ++i)
        if (!bare.count(i)) kept.push_back(i);
    WeightedAlgebra elim_small;
    for (std::size_t i : kept) elim_small.variables.push_back(closure.variables[i]);
    for (const auto& gen : elim.generators)
        elim_small.generators.push_back({project_poly(gen.poly, kept), gen.weight});
    Rational best;
    bool have = false;
    for (std::size_t i : bare) {
        OrderValue o = a.images[i].order();
        if (!o.is_finite()) continue;
        if (!have || o.value() < best) { best = o.value(); have = true; }
    }
    try {
        OrderValue oc = contact_order(elim_small, project_arc(a, kept));
        if (oc.is_finite() && (!have || oc.value() < best)) { best = oc.value(); have = true; }
    } catch (const ArcInMaxMult&) {
        // eliminated algebra vanishes along the arc; dropped variables decide
    } catch (const PrecisionExhausted&) {
        return;
    }
    if (!have || best != r)
        throw std::logic_error("elimination consistency violated: r != eliminated contact order");
}

}  // namespace detail

inline ContactReport contact_report(const Variety& v, const Arc& a,
                                    const InvariantOptions& opt = {}) {
    v.check_invariants();
    a.check_invariants();
    validate_on_variety(a, v);
    WeightedAlgebra closure = multiplicity_algebra(v);
    OrderValue rv = contact_order(closure, a);  // throws ArcInMaxMult when infinite
    OrderValue ov = arc_order(a);
    if (!ov.is_finite())
        throw PrecisionExhausted("arc order not determined at working precision");
    ContactReport rep;
    rep.ord_phi = static_cast<long long>(numerator(ov.value()));
    rep.r = rv.value();
    rep.r_bar = rep.r / rep.ord_phi;
    if (v.polynomials.size() == 1) {
        rep.rho = persistance(v.polynomials.front(), a, opt.max_steps, opt.precision);
        rep.rho_from_blowups = true;
    } else {
        rep.rho = static_cast<long long>(floor(rep.r));
        rep.rho_from_blowups = false;
    }
    rep.rho_bar = Rational(rep.rho) / rep.ord_phi;
    detail::check_elimination_consistency(closure, a, rep.r);
    return rep;
}

struct FamilyEntry {
    long long n = 0;
    Arc arc;
    ContactReport report;
};

struct IsolatedVerdict {
    enum class Kind { Isolated, NotIsolated, Unknown };
    Kind kind = Kind::Unknown;
    int q = 0;
    std::vector<int> pure_power_exponents;
    std::optional<std::size_t> axis;
    std::vector<FamilyEntry> family;  // witness family, NotIsolated only
    std::string reason;
};

// A two-term defining polynomial c1*m1 + c2*m2 with c1 = -c2 after
// normalization carries exact unit-coefficient monomial arcs.
inline bool is_balanced_binomial(const Polynomial& f, Monomial& m1, Monomial& m2) {
    if (f.size() != 2) return false;
    auto it = f.terms().begin();
    const auto& [ma, ca] = *it;
    ++it;
    const auto& [mb, cb] = *it;
    if (ca + cb != 0) return false;
    m1 = mb;  // larger in grevlex first, purely for determinism
    m2 = ma;
    return true;
}

namespace detail {

// Smallest solutions of sum coeff_i * e_i = rhs with e_i >= min_e, found by
// bounded lexicographic search.
inline bool solve_balance(const std::vector<long long>& coeffs, long long rhs,
                          long long min_e, int width, std::vector<long long>& out) {
    if (coeffs.empty()) return rhs == 0;
    if (coeffs.size() == 1) {
        if (rhs <= 0 || rhs % coeffs.front() != 0) return false;
        long long e = rhs / coeffs.front();
        if (e < min_e) return false;
        out.push_back(e);
        return true;
    }
    for (long long e = min_e; e < min_e + width; ++e) {
        std::vector<long long> rest;
        if (solve_balance({coeffs.begin() + 1, coeffs.end()}, rhs - coeffs.front() * e,
                          min_e, width, rest)) {
            out.push_back(e);
            out.insert(out.end(), rest.begin(), rest.end());
            return true;
        }
    }
    return false;
}

}  // namespace detail

// Monomial-arc family along a coordinate axis of a balanced binomial
// hypersurface: the axis goes to t, the axis-side variables get exponents
// growing with N, and the opposite side solves the exponent balance.
inline std::vector<FamilyEntry> family_search(const Variety& v, std::size_t axis,
                                              long long n_lo, long long n_hi,
                                              const InvariantOptions& opt = {}) {
    v.check_invariants();
    if (v.polynomials.size() != 1)
        throw NoMonomialSolution("automatic family synthesis needs a hypersurface");
    const Polynomial& f = v.polynomials.front();
    Monomial m1, m2;
    if (!is_balanced_binomial(f, m1, m2))
        throw NoMonomialSolution("automatic family synthesis needs a balanced binomial");
    WeightedAlgebra closure = multiplicity_algebra(v);
    if (!sing_contains_axis(closure, axis))
        throw WitnessRejected("axis is not contained in the singular locus");
    // Put the axis on the m2 side.
    if (m1[axis] > m2[axis]) std::swap(m1, m2);
    std::size_t n = v.nvars();
    std::vector<std::size_t> side2, side1;  // axis side / opposite side unknowns
    for (std::size_t i = 0; i < n; ++i) {
        if (i == axis) continue;
        if (m2[i] > 0) side2.push_back(i);
        else if (m1[i] > 0) side1.push_back(i);
    }
    std::vector<FamilyEntry> out;
    std::optional<Rational> last;
    for (long long N = n_lo; N <= n_hi; ++N) {
        bool found = false;
        for (long long grow = N + 1; grow <= N + 1 + 4 * static_cast<long long>(total_degree(m1) + total_degree(m2)) && !found; ++grow) {
            long long rhs = m2[axis] - m1[axis];  // e_axis = 1
            for (std::size_t i : side2) rhs += m2[i] * grow;
            std::vector<long long> coeffs;
            for (std::size_t i : side1) coeffs.push_back(m1[i] - m2[i]);
            std::vector<long long> sol;
            if (!detail::solve_balance(coeffs, rhs, N + 1, 64, sol)) continue;
            std::vector<FormalSeries> ims(n);
            for (std::size_t i = 0; i < n; ++i) ims[i] = FormalSeries::zero();
            ims[axis] = FormalSeries::t();
            for (std::size_t k = 0; k < side2.size(); ++k) ims[side2[k]] = FormalSeries::t(grow);
            for (std::size_t k = 0; k < side1.size(); ++k) ims[side1[k]] = FormalSeries::t(sol[k]);
            // Variables absent from both monomials stay at t^(N+1).
            for (std::size_t i = 0; i < n; ++i)
                if (i != axis && m1[i] == 0 && m2[i] == 0) ims[i] = FormalSeries::t(N + 1);
            Arc arc(std::move(ims));
            try {
                validate_on_variety(arc, v);
            } catch (const ArcNotOnVariety&) {
                continue;
            }
            ContactReport rep = contact_report(v, arc, opt);
            if (last && rep.r_bar <= *last) continue;  // keep r-bar strictly increasing
            last = rep.r_bar;
            out.push_back({N, std::move(arc), std::move(rep)});
            found = true;
        }
        if (!found)
            throw NoMonomialSolution("no monomial arc solves the exponent balance at N=" +
                                     std::to_string(N));
    }
    return out;
}

// Family sweep over a declared arc family.
inline std::vector<FamilyEntry> family_sweep(const Variety& v, const ArcFamily& fam,
                                             const InvariantOptions& opt = {}) {
    std::vector<FamilyEntry> out;
    for (long long N = fam.n_lo; N <= fam.n_hi; ++N) {
        Arc arc = instantiate_family(fam, N);
        ContactReport rep = contact_report(v, arc, opt);
        out.push_back({N, std::move(arc), std::move(rep)});
    }
    return out;
}

struct PhiEntry {
    std::vector<long long> exponents;  // unit-coefficient monomial arc t^e_i
    Rational r_bar;
};

struct PhiSample {
    std::vector<PhiEntry> entries;
    std::optional<Rational> max_observed;
    std::optional<Rational> min_observed;
};

// Exhaustive sweep of unit-coefficient monomial arcs with exponents <= cap
// lying on a balanced binomial hypersurface.
inline PhiSample phi_sample(const Variety& v, const InvariantOptions& opt = {}) {
    v.check_invariants();
    if (v.polynomials.size() != 1)
        throw NoMonomialSolution("monomial-arc enumeration needs a hypersurface");
    Monomial m1, m2;
    if (!is_balanced_binomial(v.polynomials.front(), m1, m2))
        throw NoMonomialSolution("monomial-arc enumeration needs a balanced binomial");
    std::size_t n = v.nvars();
    WeightedAlgebra closure = multiplicity_algebra(v);
    PhiSample out;
    std::vector<long long> e(n, 1);
    const long long cap = opt.exponent_cap;
    // Enumerate all exponent vectors in [1, cap]^n and keep the balanced ones.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (out.entries.size() >= opt.sample_count_cap) return;
        if (i == n) {
            long long bal = 0;
            for (std::size_t k = 0; k < n; ++k) bal += (m1[k] - m2[k]) * e[k];
            if (bal != 0) return;
            std::vector<FormalSeries> ims(n);
            for (std::size_t k = 0; k < n; ++k) ims[k] = FormalSeries::t(e[k]);
            Arc arc(std::move(ims));
            OrderValue r = OrderValue::infinity();
            try {
                r = contact_order(closure, arc);
            } catch (const ArcInMaxMult&) {
                return;
            }
            long long ord = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (ord == 0 || e[k] < ord) ord = e[k];
            Rational rb = r.value() / ord;
            if (!out.max_observed || rb > *out.max_observed) out.max_observed = rb;
            if (!out.min_observed || rb < *out.min_observed) out.min_observed = rb;
            out.entries.push_back({e, std::move(rb)});
            return;
        }
        for (e[i] = 1; e[i] <= cap; ++e[i]) rec(i + 1);
        e[i] = 1;
    };
    rec(0);
    return out;
}

inline IsolatedVerdict isolated_verdict(const Variety& v, const InvariantOptions& opt = {}) {
    v.check_invariants();
    IsolatedVerdict verdict;
    WeightedAlgebra closure = multiplicity_algebra(v);
    OrderValue ord0 = algebra_order_at_origin(closure);
    if (ord0.is_finite() && ord0.value() < 1) {
        verdict.reason = "origin not in Max mult of a singular variety";
        return verdict;
    }
    bool smooth = true;
    for (const auto& f : v.polynomials)
        if (f.order_at_origin_int() > 1) smooth = false;
    if (smooth) {
        verdict.reason = "origin not in Max mult of a singular variety";
        return verdict;
    }
    ZeroDimResult zd = zero_dim_at_origin(weight1_ideal(closure), opt.membership_cap);
    switch (zd.kind) {
        case ZeroDimResult::Kind::Isolated:
            verdict.kind = IsolatedVerdict::Kind::Isolated;
            verdict.q = zd.q;
            verdict.pure_power_exponents = zd.pure_power_exponents;
            return verdict;
        case ZeroDimResult::Kind::PositiveDimensional: {
            verdict.kind = IsolatedVerdict::Kind::NotIsolated;
            verdict.axis = zd.axis;
            try {
                verdict.family = family_search(v, *zd.axis, 1, 5, opt);
            } catch (const MathDomainError&) {
                // Axis witness stands on its own; the family is corroboration.
            }
            return verdict;
        }
        default:
            verdict.reason = zd.reason;
            return verdict;
    }
}

}  // namespace arcsing
