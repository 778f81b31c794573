#pragma once

#include "arcsing/arc.hpp"
#include "arcsing/errors.hpp"
#include "arcsing/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arcsing {

struct WeightedGenerator {
    Polynomial poly;
    int weight = 1;

    bool operator==(const WeightedGenerator& o) const {
        return weight == o.weight && poly == o.poly;
    }
};

// Finitely generated weighted (Rees) algebra, encoded by its generators.
struct WeightedAlgebra {
    std::vector<std::string> variables;
    std::vector<WeightedGenerator> generators;
    bool closed = false;

    std::size_t nvars() const { return variables.size(); }
};

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Rational& lc = p.leading_coefficient();
    if (lc == 1) return p;
    return Rational(1) / lc * p;
}

namespace detail {

struct GenLess {
    bool operator()(const WeightedGenerator& a, const WeightedGenerator& b) const {
        if (a.weight != b.weight) return a.weight < b.weight;
        GrevlexLess less;
        auto ita = a.poly.terms().rbegin(), enda = a.poly.terms().rend();
        auto itb = b.poly.terms().rbegin(), endb = b.poly.terms().rend();
        for (; ita != enda && itb != endb; ++ita, ++itb) {
            if (less(ita->first, itb->first)) return true;
            if (less(itb->first, ita->first)) return false;
            if (ita->second != itb->second) return ita->second < itb->second;
        }
        return (ita == enda) && (itb != endb);
    }
};

}  // namespace detail

// Monic generators, deterministic order, no duplicates.
inline WeightedAlgebra normalized(const WeightedAlgebra& g) {
    WeightedAlgebra r;
    r.variables = g.variables;
    r.closed = g.closed;
    std::set<WeightedGenerator, detail::GenLess> seen;
    for (const auto& gen : g.generators) {
        if (gen.poly.is_zero()) continue;
        seen.insert({monic(gen.poly), gen.weight});
    }
    r.generators.assign(seen.begin(), seen.end());
    return r;
}

// Smallest algebra containing both: generator lists concatenated.
inline WeightedAlgebra join(const WeightedAlgebra& g, const WeightedAlgebra& h) {
    if (g.variables != h.variables)
        throw std::invalid_argument("join over different variable lists");
    WeightedAlgebra r = g;
    r.generators.insert(r.generators.end(), h.generators.begin(), h.generators.end());
    r.closed = false;
    return normalized(r);
}

namespace detail {

inline void iterate_partials(const Polynomial& f, int remaining_weight,
                             std::size_t from_var, int order_used, int max_order,
                             std::vector<WeightedGenerator>& out) {
    for (std::size_t v = from_var; v < f.nvars(); ++v) {
        Polynomial d = f.derivative(v);
        if (d.is_zero()) continue;
        int used = order_used + 1;
        out.push_back({d, remaining_weight - 1});
        if (used < max_order)
            iterate_partials(d, remaining_weight - 1, v, used, max_order, out);
    }
}

// Drop generators expressible as products of two others with matching
// total weight; keeps printed closures close to minimal.
inline void remove_redundant(std::vector<WeightedGenerator>& gens) {
    std::vector<WeightedGenerator> kept;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (j == i) continue;
            for (std::size_t k = j; k < gens.size(); ++k) {
                if (k == i) continue;
                if (gens[j].weight + gens[k].weight != gens[i].weight) continue;
                if (monic(gens[j].poly * gens[k].poly) == gens[i].poly) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant) kept.push_back(gens[i]);
    }
    gens = std::move(kept);
}

}  // namespace detail

// Saturation under iterated partial derivatives: for f W^b and |alpha| < b,
// adds (d^alpha f) W^(b - |alpha|). Valid in characteristic zero.
inline WeightedAlgebra diff_closure(const WeightedAlgebra& g) {
    WeightedAlgebra r;
    r.variables = g.variables;
    for (const auto& gen : g.generators) {
        r.generators.push_back(gen);
        if (gen.weight > 1)
            detail::iterate_partials(gen.poly, gen.weight, 0, 0, gen.weight - 1,
                                     r.generators);
    }
    r = normalized(r);
    detail::remove_redundant(r.generators);
    r.closed = true;
    return r;
}

// min over generators of ord_origin(poly) / weight.
inline OrderValue algebra_order_at_origin(const WeightedAlgebra& g) {
    std::optional<Rational> best;
    for (const auto& gen : g.generators) {
        Rational v = Rational(gen.poly.order_at_origin_int()) / gen.weight;
        if (!best || v < *best) best = v;
    }
    if (!best) throw std::invalid_argument("algebra has no generators");
    return OrderValue::finite(*best);
}

// Order of the image algebra along the arc: min over generators of
// ord_t(phi(f)) / weight. Infinity means the arc lies in Sing(g).
inline OrderValue contact_order(const WeightedAlgebra& g, const Arc& a) {
    std::optional<Rational> best_finite;
    std::optional<Rational> best_bound;
    for (const auto& gen : g.generators) {
        OrderValue o = substitute(gen.poly, a).order().divided_by(gen.weight);
        if (o.is_finite()) {
            if (!best_finite || o.value() < *best_finite) best_finite = o.value();
        } else if (o.is_at_least()) {
            if (!best_bound || o.value() < *best_bound) best_bound = o.value();
        }
    }
    if (best_finite) {
        if (best_bound && *best_bound <= *best_finite)
            throw PrecisionExhausted("contact order ambiguous at working precision");
        return OrderValue::finite(*best_finite);
    }
    if (best_bound)
        throw PrecisionExhausted("all generators vanish up to working precision");
    throw ArcInMaxMult("arc is contained in the singular locus of the algebra");
}

// Order of f along the generic point of a coordinate axis: the minimum
// total degree of its terms in the non-axis variables.
inline int order_along_axis(const Polynomial& p, std::size_t axis) {
    int best = -1;
    for (const auto& [m, c] : p.terms()) {
        int d = total_degree(m) - m[axis];
        if (best < 0 || d < best) best = d;
    }
    return best;  // -1 for the zero polynomial
}

inline bool sing_contains_axis(const WeightedAlgebra& g, std::size_t axis) {
    if (axis >= g.nvars()) throw std::out_of_range("axis index");
    for (const auto& gen : g.generators)
        if (order_along_axis(gen.poly, axis) < gen.weight) return false;
    return true;
}

namespace detail {

inline bool involves(const Monomial& m, const std::vector<bool>& dropped) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] > 0 && dropped[i]) return true;
    return false;
}

// Sufficient membership check for monomial elements: m W^w lies in the
// algebra if m factors through single-term generators of total weight >= w.
inline bool monomial_in_algebra(const WeightedAlgebra& g, const Monomial& m, int w) {
    if (w <= 0) return true;
    for (const auto& gen : g.generators) {
        if (gen.poly.size() != 1) continue;
        const Monomial& gm = gen.poly.leading_monomial();
        if (total_degree(gm) == 0) continue;
        if (!divides(gm, m)) continue;
        if (monomial_in_algebra(g, mono_div(m, gm), w - gen.weight)) return true;
    }
    return false;
}

}  // namespace detail

// Trace of the algebra on the kept variables, for separated presentations:
// every dropped variable must occur as a bare weight-1 generator, and every
// mixed generator must split into dropped-monomial factors times elements
// of the algebra, leaving a pure part in the kept variables.
inline WeightedAlgebra eliminate_separated(const WeightedAlgebra& g,
                                           const std::set<std::size_t>& drop) {
    std::vector<bool> dropped(g.nvars(), false);
    for (std::size_t v : drop) {
        if (v >= g.nvars()) throw std::out_of_range("dropped variable index");
        dropped[v] = true;
        bool bare = false;
        for (const auto& gen : g.generators) {
            if (gen.weight != 1) continue;
            if (gen.poly == Polynomial::variable(g.nvars(), v)) { bare = true; break; }
        }
        if (!bare)
            throw ElimNotSeparated("no bare weight-1 generator for dropped variable " +
                                   g.variables[v]);
    }

    WeightedAlgebra r;
    r.variables = g.variables;
    for (const auto& gen : g.generators) {
        Polynomial pure(g.nvars());
        bool mixed = false;
        for (const auto& [m, c] : gen.poly.terms()) {
            if (!detail::involves(m, dropped)) {
                pure.add_term(m, c);
                continue;
            }
            mixed = true;
            // Split the term into its dropped and kept monomial factors.
            Monomial mdrop(g.nvars(), 0), mkeep(g.nvars(), 0);
            int kdrop = 0;
            for (std::size_t i = 0; i < g.nvars(); ++i) {
                if (dropped[i]) { mdrop[i] = m[i]; kdrop += m[i]; }
                else mkeep[i] = m[i];
            }
            // m W^b = (mdrop W^kdrop) * (mkeep W^(b-kdrop)); the first factor
            // is a product of bare generators, the second must be checked.
            if (kdrop < gen.weight &&
                !detail::monomial_in_algebra(g, mkeep, gen.weight - kdrop))
                throw ElimNotSeparated("generator not separable: " +
                                       gen.poly.str(g.variables) + " W^" +
                                       std::to_string(gen.weight));
        }
        if (!mixed) {
            if (!pure.is_zero()) r.generators.push_back({pure, gen.weight});
        } else if (!pure.is_zero()) {
            // The mixed part lies in the algebra, so its complement does too.
            r.generators.push_back({pure, gen.weight});
        }
    }
    // Keep only generators supported on the kept variables.
    std::vector<WeightedGenerator> kept;
    for (const auto& gen : r.generators) {
        bool ok = true;
        for (const auto& [m, c] : gen.poly.terms())
            if (detail::involves(m, dropped)) { ok = false; break; }
        if (ok) kept.push_back(gen);
    }
    r.generators = std::move(kept);
    r.closed = g.closed;
    return normalized(r);
}

inline std::vector<Polynomial> weight1_ideal(const WeightedAlgebra& g) {
    if (!g.closed)
        throw std::invalid_argument("weight-1 ideal requires a differentially closed algebra");
    std::vector<Polynomial> out;
    for (const auto& gen : g.generators)
        if (gen.weight == 1) out.push_back(gen.poly);
    return out;
}

// Rank over Q of the linear parts of order-1 weight-1 generators: a lower
// bound for the tau invariant.
inline int tau_lower_bound(const WeightedAlgebra& g) {
    if (!g.closed)
        throw std::invalid_argument("tau bound requires a differentially closed algebra");
    std::vector<std::vector<Rational>> rows;
    for (const auto& gen : g.generators) {
        if (gen.weight != 1 || gen.poly.is_zero()) continue;
        if (gen.poly.order_at_origin_int() != 1) continue;
        rows.push_back(gen.poly.linear_part());
    }
    // Gaussian elimination.
    int rank = 0;
    std::size_t n = g.nvars();
    for (std::size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace arcsing
