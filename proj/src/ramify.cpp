#include "padicft/ramify.hpp"

#include <algorithm>

#include "padicft/arith.hpp"

namespace padicft::ramify {

namespace {

void validate_value(const ValueGroupElement& v) {
    if (v.regime == Regime::Exact) {
        require(!v.minus_c && !v.minus_d_logr && v.logr_coeff == Rational(0),
                "InvalidDatum", "exact elements carry no boundary symbols");
    } else if (v.regime == Regime::RZero) {
        require(!v.minus_c && !v.minus_d_logr, "InvalidDatum",
                "the constants c, d only appear in the r->1 regime");
    }
}

// sign of the flat-part difference in the limit of the shared regime;
// 0 means structurally equal flat parts
int compare_flat(const ValueGroupElement& a, const ValueGroupElement& b) {
    switch (a.regime) {
    case Regime::Exact:
        if (a.flat_const != b.flat_const) return a.flat_const < b.flat_const ? -1 : 1;
        return 0;
    case Regime::RZero:
        // log r -> -infinity: a larger r-exponent drives the value down
        if (a.logr_coeff != b.logr_coeff) return a.logr_coeff > b.logr_coeff ? -1 : 1;
        if (a.flat_const != b.flat_const) return a.flat_const < b.flat_const ? -1 : 1;
        return 0;
    case Regime::ROne:
        // log r -> 0^-: limits first (-c strictly lowers a limit)...
        if (a.minus_c != b.minus_c) {
            if (a.minus_c) {
                require(a.flat_const <= b.flat_const, "SymbolicIncomparable",
                        "cannot sign flat_const difference against the unknown c");
                return -1;
            }
            require(b.flat_const <= a.flat_const, "SymbolicIncomparable",
                    "cannot sign flat_const difference against the unknown c");
            return 1;
        }
        if (a.flat_const != b.flat_const) return a.flat_const < b.flat_const ? -1 : 1;
        // ...then the direction of approach: value = K log r with
        // K = logr_coeff - d [flag]; log r < 0, so larger K means smaller value
        if (a.minus_d_logr != b.minus_d_logr) {
            if (a.minus_d_logr) {
                // K_a = coeff_a - d < coeff_a; comparable only when that
                // already places it below K_b
                require(a.logr_coeff <= b.logr_coeff, "SymbolicIncomparable",
                        "cannot sign the log r coefficient against the unknown d");
                return 1; // K_a < K_b, so a's flat part is the larger one
            }
            require(b.logr_coeff <= a.logr_coeff, "SymbolicIncomparable",
                    "cannot sign the log r coefficient against the unknown d");
            return -1;
        }
        if (a.logr_coeff != b.logr_coeff) return a.logr_coeff > b.logr_coeff ? -1 : 1;
        return 0;
    }
    return 0; // unreachable
}

} // namespace

ValueGroupElement value_exact(const Rational& flat_log, const Rational& sharp) {
    ValueGroupElement v;
    v.flat_const = flat_log;
    v.sharp = sharp;
    return v;
}

ValueGroupElement value_boundary(Regime regime, const Rational& flat_const,
                                 bool minus_c, const Rational& logr_coeff,
                                 bool minus_d_logr, const Rational& sharp) {
    ValueGroupElement v;
    v.regime = regime;
    v.flat_const = flat_const;
    v.minus_c = minus_c;
    v.logr_coeff = logr_coeff;
    v.minus_d_logr = minus_d_logr;
    v.sharp = sharp;
    validate_value(v);
    return v;
}

int compare_value(const ValueGroupElement& a, const ValueGroupElement& b) {
    validate_value(a);
    validate_value(b);
    require(a.regime == b.regime, "RegimeMismatch",
            "value-group elements live at different boundary regimes");
    int flat = compare_flat(a, b);
    if (flat != 0) return flat;
    // gamma_K sits below every divisible element: larger sharp, smaller gamma
    if (a.sharp != b.sharp) return a.sharp > b.sharp ? -1 : 1;
    return 0;
}

SlopeDecomposition make_decomposition(std::vector<SlopeEntry> entries) {
    SlopeDecomposition dec;
    dec.entries = std::move(entries);
    for (size_t i = 0; i < dec.entries.size(); i++) {
        require(dec.entries[i].length >= 1, "InvalidDatum",
                "slope lengths must be positive");
        for (size_t j = i + 1; j < dec.entries.size(); j++)
            require(compare_value(dec.entries[i].slope, dec.entries[j].slope) != 0,
                    "InvalidDatum", "slopes of a decomposition must be distinct");
    }
    return dec;
}

SlopeDecomposition decomposition_union(const SlopeDecomposition& A,
                                       const SlopeDecomposition& B) {
    std::vector<SlopeEntry> merged = A.entries;
    for (const auto& e : B.entries) {
        bool found = false;
        for (auto& m : merged) {
            if (compare_value(m.slope, e.slope) == 0) {
                m.length += e.length;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(e);
    }
    return make_decomposition(std::move(merged));
}

Rational swan(const SlopeDecomposition& dec) {
    Rational sw = 0;
    for (const auto& e : dec.entries) sw += e.slope.sharp * Rational(e.length);
    return sw;
}

SlopeDecomposition tensor_slopes(const SlopeDecomposition& A,
                                 const SlopeDecomposition& B) {
    std::vector<SlopeEntry> out;
    auto contribute = [&out](const ValueGroupElement& slope, std::int64_t length) {
        for (auto& e : out) {
            if (e.slope == slope) {
                e.length += length;
                return;
            }
        }
        out.push_back({slope, length});
    };
    for (const auto& ea : A.entries) {
        for (const auto& eb : B.entries) {
            std::int64_t len = ea.length * eb.length;
            // an unramified (trivial-slope) factor does not move the slope
            if (ea.slope.is_trivial()) {
                contribute(eb.slope, len);
                continue;
            }
            if (eb.slope.is_trivial()) {
                contribute(ea.slope, len);
                continue;
            }
            int cmp = compare_value(ea.slope, eb.slope);
            require(cmp != 0, "EqualSlopes",
                    "tensor slopes are only defined for distinct slopes");
            contribute(cmp < 0 ? ea.slope : eb.slope, len);
        }
    }
    return make_decomposition(std::move(out));
}

namespace {

bool is_prime_power(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t p = 2; p * p <= q; p++) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true; // q itself prime
}

} // namespace

Rational herbrand(std::int64_t q, const Rational& x,
                  std::optional<std::int64_t> level) {
    require(is_prime_power(q), "InvalidDatum", "q must be a prime power >= 2");
    if (level) require(*level >= 1, "InvalidDatum", "level must be positive");
    if (x <= Rational(0)) return x;
    std::int64_t cut = level ? *level - 1 : -1; // branch switch at m-1
    if (!level || x <= Rational(cut)) {
        std::int64_t fl = x.floor();
        Rational qf = Rational(arith::ipow(q, fl));
        return qf * Rational(q - 1) * (x - Rational(fl)) + qf - Rational(1);
    }
    Rational qc = Rational(arith::ipow(q, cut));
    return qc * Rational(q - 1) * (x - Rational(cut)) + qc - Rational(1);
}

TransferResult transfer(std::int64_t n, const Rational& sl_sigma, std::int64_t q) {
    require(sl_sigma >= Rational(0), "InvalidDatum", "slopes are non-negative");
    require(n > 1 || (n == 1 && sl_sigma == Rational(0)), "HypothesisViolated",
            "one-dimensional inputs transfer trivially unless unramified");
    TransferResult t;
    t.sl_V = herbrand(q, sl_sigma);
    t.sw_V = Rational(n) * t.sl_V;
    t.ft_rank = Rational(n) + t.sw_V;
    return t;
}

std::int64_t carayol_dim(std::int64_t q, std::int64_t sw_sigma) {
    require(is_prime_power(q), "InvalidDatum", "q must be a prime power >= 2");
    require(sw_sigma >= 1, "InvalidDatum", "the Swan conductor must be positive");
    if (sw_sigma % 2 == 0) return 2 * arith::ipow(q, sw_sigma / 2);
    return (q + 1) * arith::ipow(q, (sw_sigma - 1) / 2);
}

Rational gos_chi(const Rational& alpha, const Rational& beta) {
    return -alpha - beta;
}

ValueGroupElement boundary_slopes(SheafKind kind, BoundarySide side, Regime regime,
                                  const Rational& sl_V) {
    require(regime != Regime::Exact, "InvalidDatum",
            "boundary slopes live in a boundary regime");
    if (kind == SheafKind::Ltilde) {
        require(sl_V >= Rational(0), "InvalidDatum", "slopes are non-negative");
        // r^{sl} gamma^{sl} at p^-, r^{sl} gamma^{-sl} at p^+
        Rational sharp = side == BoundarySide::Inner ? sl_V : -sl_V;
        return value_boundary(regime, 0, false, sl_V, false, sharp);
    }
    if (regime == Regime::RZero) // trivial near the puncture, both sides
        return value_boundary(regime, 0, false, 0, false, 0);
    require(side == BoundarySide::Outer, "UnsupportedCombination",
            "no inner r->1 slope is available for the character sheaf");
    // exp(-c) r^{-d} gamma with c, d > 0 symbolic
    return value_boundary(regime, 0, true, 0, true, 1);
}

PipelineResult ft_stalk_rank_pipeline(std::int64_t n, const Rational& sl_sigma,
                                      std::int64_t q) {
    require(n > 1 || (n == 1 && sl_sigma == Rational(0)), "HypothesisViolated",
            "one-dimensional inputs transfer trivially unless unramified");
    Rational sl_V = herbrand(q, sl_sigma);
    // near the puncture the character sheaf is unramified and the n slopes
    // r^{sl} gamma^{sl} of the transferred sheaf carry the whole conductor
    auto near0 = tensor_slopes(
        make_decomposition(
            {{boundary_slopes(SheafKind::Ltilde, BoundarySide::Inner, Regime::RZero,
                              sl_V),
              n}}),
        make_decomposition(
            {{boundary_slopes(SheafKind::Lpsi, BoundarySide::Inner, Regime::RZero),
              1}}));
    // near the outer boundary the character slope exp(-c) r^{-d} gamma drops
    // below r^{sl} gamma^{-sl} and wins every comparison
    auto near1 = tensor_slopes(
        make_decomposition(
            {{boundary_slopes(SheafKind::Ltilde, BoundarySide::Outer, Regime::ROne,
                              sl_V),
              n}}),
        make_decomposition(
            {{boundary_slopes(SheafKind::Lpsi, BoundarySide::Outer, Regime::ROne),
              1}}));
    PipelineResult r;
    r.alpha = swan(near0);
    r.beta = swan(near1);
    r.rank = r.alpha + r.beta;
    return r;
}

StepProfile make_profile(std::optional<Rational> lo, std::optional<Rational> hi,
                         std::vector<Rational> breaks, std::vector<Rational> values) {
    StepProfile p{std::move(lo), std::move(hi), std::move(breaks), std::move(values)};
    require(p.values.size() == p.breaks.size() + 1, "InvalidDatum",
            "need one value per segment");
    if (p.lo && p.hi)
        require(*p.lo < *p.hi, "InvalidDatum", "empty domain");
    for (size_t i = 0; i < p.breaks.size(); i++) {
        if (i > 0)
            require(p.breaks[i - 1] < p.breaks[i], "InvalidDatum",
                    "breakpoints must increase");
        if (p.lo) require(*p.lo < p.breaks[i], "InvalidDatum", "breakpoint below domain");
        if (p.hi) require(p.breaks[i] < *p.hi, "InvalidDatum", "breakpoint above domain");
    }
    return p;
}

PLFunction pl_discriminant(const StepProfile& profile) {
    for (size_t i = 1; i < profile.values.size(); i++)
        require(profile.values[i - 1] <= profile.values[i], "NotConvexifiable",
                "the conductor profile must be non-decreasing in -log r");
    PLFunction f;
    f.lo = profile.lo;
    f.hi = profile.hi;
    f.breaks = profile.breaks;
    f.slopes = profile.values;
    if (profile.values.back() == Rational(0)) {
        // vanishing tail: delta = 0 on the last segment
        f.anchor_s = f.breaks.empty() ? Rational(0) : f.breaks.back();
        f.anchor_val = 0;
    } else if (f.hi) {
        f.anchor_s = *f.hi; // delta(hi) = 0 by the explicit constant argument
        f.anchor_val = 0;
    } else if (f.lo) {
        f.anchor_s = *f.lo; // unbounded above: pin the left endpoint instead
        f.anchor_val = 0;
    } else {
        f.anchor_s = 0; // a line; only the derivative statements matter
        f.anchor_val = 0;
    }
    return f;
}

namespace {

void check_in_domain(const PLFunction& f, const Rational& s) {
    if (f.lo) require(*f.lo <= s, "InvalidDatum", "point below the domain");
    if (f.hi) require(s <= *f.hi, "InvalidDatum", "point above the domain");
}

} // namespace

Rational pl_eval(const PLFunction& f, const Rational& s) {
    check_in_domain(f, s);
    // integrate the slopes from the anchor to s
    Rational val = f.anchor_val;
    Rational a = f.anchor_s, b = s;
    int sign = 1;
    if (b < a) {
        std::swap(a, b);
        sign = -1;
    }
    // segment boundaries clipped to [a, b]
    Rational prev = a;
    for (size_t i = 0; i <= f.breaks.size(); i++) {
        Rational seg_end = i < f.breaks.size() ? f.breaks[i] : b;
        if (i < f.breaks.size() && seg_end < a) continue;
        if (seg_end > b) seg_end = b;
        if (seg_end > prev) {
            val += Rational(sign) * f.slopes[i] * (seg_end - prev);
            prev = seg_end;
        }
        if (prev == b) break;
    }
    return val;
}

std::pair<Rational, Rational> pl_derivatives(const PLFunction& f, const Rational& s) {
    check_in_domain(f, s);
    size_t seg = 0;
    while (seg < f.breaks.size() && f.breaks[seg] <= s) seg++;
    // seg is now the segment to the right of s
    Rational right = f.slopes[seg];
    Rational left = right;
    if (seg > 0 && f.breaks[seg - 1] == s) left = f.slopes[seg - 1];
    return {left, right};
}

bool pl_convex(const PLFunction& f) {
    for (size_t i = 1; i < f.slopes.size(); i++)
        if (f.slopes[i - 1] > f.slopes[i]) return false;
    return true;
}

StepProfile profile_reflect(const StepProfile& p) {
    StepProfile r;
    r.lo = p.hi ? std::optional<Rational>(-*p.hi) : std::nullopt;
    r.hi = p.lo ? std::optional<Rational>(-*p.lo) : std::nullopt;
    for (auto it = p.breaks.rbegin(); it != p.breaks.rend(); ++it)
        r.breaks.push_back(-*it);
    // (delta o inv)' (s) = -delta'(-s)
    for (auto it = p.values.rbegin(); it != p.values.rend(); ++it)
        r.values.push_back(-*it);
    return r;
}

PLFunction pl_reflect(const PLFunction& f) {
    PLFunction r;
    r.lo = f.hi ? std::optional<Rational>(-*f.hi) : std::nullopt;
    r.hi = f.lo ? std::optional<Rational>(-*f.lo) : std::nullopt;
    for (auto it = f.breaks.rbegin(); it != f.breaks.rend(); ++it)
        r.breaks.push_back(-*it);
    for (auto it = f.slopes.rbegin(); it != f.slopes.rend(); ++it)
        r.slopes.push_back(-*it);
    r.anchor_s = -f.anchor_s;
    r.anchor_val = f.anchor_val;
    return r;
}

} // namespace padicft::ramify
