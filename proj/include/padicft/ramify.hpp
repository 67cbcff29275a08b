#ifndef PADICFT_RAMIFY_HPP
#define PADICFT_RAMIFY_HPP

// Slope arithmetic in the value group of a rank-2 valuation, Swan
// conductors, the Herbrand transfer through the tower of unramified-twist
// extensions, the discriminant function calculus for piecewise-linear
// conductor profiles, and the boundary Euler-characteristic formula with its
// closed-form cross-check.
//
// A value-group element is written uniquely as gamma = gamma^flat * gamma_K^s
// with gamma^flat divisible; we track log(gamma^flat) as a rational, plus
// symbolic variants for elements that only make sense near a boundary of the
// annulus (r -> 0 or r -> 1), where the flat part is a monomial
// exp(flat_const) * exp(-c) * r^{logr_coeff} * r^{-d} in the existential
// constants c, d > 0.  Within one comparison the symbols c and d are shared.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padicft/errors.hpp"
#include "padicft/rational.hpp"

namespace padicft::ramify {

enum class Regime { Exact, RZero, ROne };

struct ValueGroupElement {
    Regime regime = Regime::Exact;
    Rational flat_const = 0;   // rational part of log(gamma^flat)
    bool minus_c = false;      // extra -c term, c > 0 unknown (ROne only)
    Rational logr_coeff = 0;   // coefficient of log r (boundary regimes only)
    bool minus_d_logr = false; // extra -d*log r term, d > 0 unknown (ROne only)
    Rational sharp = 0;        // exponent of gamma_K

    bool operator==(const ValueGroupElement& o) const {
        return regime == o.regime && flat_const == o.flat_const &&
               minus_c == o.minus_c && logr_coeff == o.logr_coeff &&
               minus_d_logr == o.minus_d_logr && sharp == o.sharp;
    }
    // gamma = 1: no flat part, no gamma_K part
    bool is_trivial() const {
        return flat_const == Rational(0) && !minus_c && logr_coeff == Rational(0) &&
               !minus_d_logr && sharp == Rational(0);
    }
};

ValueGroupElement value_exact(const Rational& flat_log, const Rational& sharp);
ValueGroupElement value_boundary(Regime regime, const Rational& flat_const,
                                 bool minus_c, const Rational& logr_coeff,
                                 bool minus_d_logr, const Rational& sharp);

// three-way order: -1 if a < b (a more ramified), 0 if equal, +1 if a > b.
// gamma_K lies under every divisible element, so ties in the flat part are
// broken by the *larger* sharp exponent being the *smaller* element.
// Throws RegimeMismatch when the regimes differ and SymbolicIncomparable
// when the unknown constants leave the sign undetermined.
int compare_value(const ValueGroupElement& a, const ValueGroupElement& b);

struct SlopeEntry {
    ValueGroupElement slope;
    std::int64_t length = 1; // >= 1
    bool operator==(const SlopeEntry& o) const {
        return slope == o.slope && length == o.length;
    }
};

// pairwise-distinct slopes with multiplicities
struct SlopeDecomposition {
    std::vector<SlopeEntry> entries;
    std::int64_t total_length() const {
        std::int64_t t = 0;
        for (const auto& e : entries) t += e.length;
        return t;
    }
    bool operator==(const SlopeDecomposition& o) const { return entries == o.entries; }
};

// validates lengths >= 1 and pairwise-distinct slopes
SlopeDecomposition make_decomposition(std::vector<SlopeEntry> entries);

// disjoint union; equal slopes merge by adding lengths
SlopeDecomposition decomposition_union(const SlopeDecomposition& A,
                                       const SlopeDecomposition& B);

// sw = sum of sharp * length over the decomposition (rational on purpose:
// the sharp exponents live in the divisible hull)
Rational swan(const SlopeDecomposition& dec);

// Slopes of a tensor product: a trivial factor is unramified and only
// multiplies lengths; otherwise the smaller (more ramified) slope wins.
// Equal nontrivial slopes are out of contract (errors: EqualSlopes).
SlopeDecomposition tensor_slopes(const SlopeDecomposition& A,
                                 const SlopeDecomposition& B);

// Herbrand function psi_{E_m/E} of the level-m extension (level = nullopt
// means the full tower):
//   x <= 0          -> x
//   0 <= x <= m-1   -> q^{floor x}(q-1)(x - floor x) + q^{floor x} - 1
//   x >= m-1        -> q^{m-1}(q-1)(x - (m-1)) + q^{m-1} - 1
// The tower uses the middle branch for all x >= 0.
Rational herbrand(std::int64_t q, const Rational& x,
                  std::optional<std::int64_t> level = std::nullopt);

// The transfer of an n-dimensional input with minimal-twist slope sl_sigma:
// sl_V = psi_infty(sl_sigma), sw_V = n * sl_V, ft_rank = n + sw_V.
// Requires n > 1, or n = 1 with sl_sigma = 0 (errors: HypothesisViolated).
struct TransferResult {
    Rational sl_V;
    Rational sw_V;
    Rational ft_rank;
};

TransferResult transfer(std::int64_t n, const Rational& sl_sigma, std::int64_t q);

// closed form for the dimension attached to a Swan conductor sw >= 1:
// 2 q^{sw/2} for even sw, (q+1) q^{(sw-1)/2} for odd sw
std::int64_t carayol_dim(std::int64_t q, std::int64_t sw_sigma);

// boundary Euler characteristic of the punctured disk: -alpha - beta
Rational gos_chi(const Rational& alpha, const Rational& beta);

enum class SheafKind { Ltilde, Lpsi };
enum class BoundarySide { Inner, Outer }; // p^- and p^+

// The unique boundary slope of the two sheaves in play:
//   Ltilde (slope sl >= 0):  r^{sl} gamma^{sl} at p^-, r^{sl} gamma^{-sl} at
//                            p^+ (either regime);
//   Lpsi near r -> 0:        trivial (gamma = 1) on both sides;
//   Lpsi at p^+ near r -> 1: exp(-c) r^{-d} gamma with c, d > 0 symbolic.
// Lpsi at p^- near r -> 1 is not modeled (errors: UnsupportedCombination).
ValueGroupElement boundary_slopes(SheafKind kind, BoundarySide side, Regime regime,
                                  const Rational& sl_V = 0);

// The rank of the transformed stalk computed the long way around: alpha from
// the tensor slopes near 0, beta from the tensor slopes near 1 (where the
// Lpsi slope wins the symbolic comparison), rank = alpha + beta.  Agrees
// with transfer(...).ft_rank.  Preconditions as for transfer.
struct PipelineResult {
    Rational alpha;
    Rational beta;
    Rational rank;
};

PipelineResult ft_stalk_rank_pipeline(std::int64_t n, const Rational& sl_sigma,
                                      std::int64_t q);

// --- piecewise-linear discriminant calculus -------------------------------

// A step function of s = -log r on an open interval: value values[i] between
// breaks[i-1] and breaks[i].  Endpoints at infinity are omitted.
struct StepProfile {
    std::optional<Rational> lo; // nullopt = -infinity
    std::optional<Rational> hi; // nullopt = +infinity
    std::vector<Rational> breaks; // strictly increasing, inside (lo, hi)
    std::vector<Rational> values; // size = breaks.size() + 1
};

StepProfile make_profile(std::optional<Rational> lo, std::optional<Rational> hi,
                         std::vector<Rational> breaks, std::vector<Rational> values);

// A continuous piecewise-linear function pinned by one anchor value.
struct PLFunction {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    std::vector<Rational> breaks;
    std::vector<Rational> slopes; // size = breaks.size() + 1
    Rational anchor_s = 0;        // a finite point of the closed domain
    Rational anchor_val = 0;
};

// The discriminant function: the continuous delta with delta' = profile,
// anchored at 0 on the vanishing tail when the profile ends at 0, else at
// the finite right endpoint, else at the finite left endpoint, else at 0.
// Requires non-decreasing values, i.e. delta convex (errors:
// NotConvexifiable).
PLFunction pl_discriminant(const StepProfile& profile);

Rational pl_eval(const PLFunction& f, const Rational& s);

// one-sided derivatives at s; they differ exactly at breakpoints
std::pair<Rational, Rational> pl_derivatives(const PLFunction& f, const Rational& s);

// is the function convex (slopes non-decreasing)?
bool pl_convex(const PLFunction& f);

// the inversion r -> 1/r, i.e. s -> -s, on both representations
StepProfile profile_reflect(const StepProfile& p);
PLFunction pl_reflect(const PLFunction& f);

} // namespace padicft::ramify

#endif
