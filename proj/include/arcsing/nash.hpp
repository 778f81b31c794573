#pragma once

#include "arcsing/arc.hpp"
#include "arcsing/errors.hpp"
#include "arcsing/rees.hpp"

#include <optional>
#include <vector>

namespace arcsing {

inline constexpr int kDefaultMaxSteps = 256;

struct BlowupStep {
    std::size_t chart = 0;               // variable index of the chart
    std::vector<Rational> center;        // point followed, in the previous chart
    Polynomial strict_transform;         // recentered at the origin
    Arc lifted_arc;                      // recentered; validates on the transform
    int multiplicity = 1;
};

struct NashTrace {
    enum class Termination { FirstDrop, MaxSteps, Smooth };
    std::vector<int> m;                  // m_0, m_1, ...
    std::vector<BlowupStep> steps;
    Termination terminated = Termination::MaxSteps;
};

namespace detail {

// Chart indices achieving the minimal finite order among arc images.
inline std::vector<std::size_t> minimal_order_charts(const Arc& a) {
    std::optional<Rational> best;
    std::optional<Rational> bound;
    for (const auto& s : a.images) {
        OrderValue o = s.order();
        if (o.is_finite()) {
            if (!best || o.value() < *best) best = o.value();
        } else if (o.is_at_least()) {
            if (!bound || o.value() < *bound) bound = o.value();
        }
    }
    if (!best || (bound && *bound <= *best))
        throw PrecisionExhausted("cannot determine the minimal-order chart");
    std::vector<std::size_t> charts;
    for (std::size_t i = 0; i < a.images.size(); ++i) {
        OrderValue o = a.images[i].order();
        if (o.is_finite() && o.value() == *best) charts.push_back(i);
    }
    return charts;
}

}  // namespace detail

// One point blowup in the given chart: substitutes x_j -> x_chart * x_j for
// j != chart, divides out the exceptional factor to the full multiplicity m,
// lifts the arc by componentwise division, and recenters at the point the
// lifted arc selects. Exposed separately so chart independence can be checked.
inline BlowupStep blowup_step(const Polynomial& f, const Arc& a, std::size_t chart,
                              int m, long long prec = kDefaultPrecision) {
    std::size_t n = f.nvars();
    std::vector<Polynomial> images;
    images.reserve(n);
    Polynomial xc = Polynomial::variable(n, chart);
    for (std::size_t j = 0; j < n; ++j)
        images.push_back(j == chart ? xc : xc * Polynomial::variable(n, j));
    Polynomial total = f.substitute(images);
    Monomial excep(n, 0);
    excep[chart] = m;
    Polynomial strict;
    try {
        strict = total.divide_by_monomial(excep);
    } catch (const std::domain_error&) {
        throw NonExactStrictTransform("exceptional factor does not divide the total transform");
    }

    BlowupStep step;
    step.chart = chart;
    std::vector<FormalSeries> lifted(n);
    for (std::size_t j = 0; j < n; ++j)
        lifted[j] = (j == chart) ? a.images[chart]
                                 : series_divide(a.images[j], a.images[chart], prec);
    // The lifted arc selects the next center: its constant terms.
    step.center.resize(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        step.center[j] = lifted[j].constant_term();
        if (step.center[j] != 0) lifted[j].set_coeff(0, 0);
    }
    step.strict_transform = strict.translate(step.center);
    step.lifted_arc = Arc(std::move(lifted));
    OrderValue mv = step.strict_transform.order_at_origin();
    if (!mv.is_finite())
        throw NonExactStrictTransform("strict transform vanished identically");
    step.multiplicity = static_cast<int>(numerator(mv.value()));
    return step;
}

// Nash multiplicity sequence of the hypersurface V(f) along the arc,
// simulated by iterated point blowups of the graph arc.
inline NashTrace nash_sequence(const Polynomial& f, const Arc& arc, int max_steps = kDefaultMaxSteps,
                               bool stop_at_first_drop = true,
                               long long prec = kDefaultPrecision) {
    NashTrace trace;
    int m0 = f.order_at_origin_int();
    trace.m.push_back(m0);
    if (m0 == 1) {
        trace.terminated = NashTrace::Termination::Smooth;
        return trace;
    }
    Polynomial g = f.extend_vars(1);
    Arc cur = graph(arc);
    int m_prev = m0;
    for (int i = 1; i <= max_steps; ++i) {
        std::size_t chart = detail::minimal_order_charts(cur).front();
        BlowupStep step = blowup_step(g, cur, chart, m_prev, prec);
        g = step.strict_transform;
        cur = step.lifted_arc;
        m_prev = step.multiplicity;
        trace.m.push_back(step.multiplicity);
        trace.steps.push_back(std::move(step));
        if (stop_at_first_drop && m_prev < m0) {
            trace.terminated = NashTrace::Termination::FirstDrop;
            return trace;
        }
        if (m_prev == 1 && !stop_at_first_drop) {
            trace.terminated = NashTrace::Termination::Smooth;
            return trace;
        }
    }
    trace.terminated = NashTrace::Termination::MaxSteps;
    return trace;
}

// First index i with m_i < m_0.
inline int persistance(const Polynomial& f, const Arc& arc, int max_steps = kDefaultMaxSteps,
                       long long prec = kDefaultPrecision) {
    // Refuse arcs inside Max mult up front: the sequence would never drop.
    WeightedAlgebra raw{{}, {{f, f.order_at_origin_int()}}, false};
    raw.variables.resize(f.nvars());
    contact_order(diff_closure(raw), arc);

    NashTrace t = nash_sequence(f, arc, max_steps, true, prec);
    if (t.terminated != NashTrace::Termination::FirstDrop)
        throw MaxStepsExceeded("no multiplicity drop within the step budget");
    return static_cast<int>(t.m.size()) - 1;
}

}  // namespace arcsing
