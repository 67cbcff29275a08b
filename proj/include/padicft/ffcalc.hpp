#ifndef PADICFT_FFCALC_HPP
#define PADICFT_FFCALC_HPP

// Slope calculus for flat coherent sheaves on the curve over a geometric
// point.  Over a point every flat coherent sheaf splits as a direct sum of
// stable bundles O(d/h) and torsion sheaves classified by their length, so
// the whole theory is bookkeeping on those invariants: rank/degree,
// Harder-Narasimhan polygons, unramified-cover functors (pullback and
// pushforward along the degree-r cover), the two presentation constructions,
// duality for Banach-Colmez data, and the four-entry Ext lookup table.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "padicft/errors.hpp"
#include "padicft/rational.hpp"

namespace padicft::ffcalc {

// O(d/h)^{⊕mult}: a stable bundle of slope d/h in lowest terms, with
// multiplicity.  rank = h·mult, degree = d·mult.
struct StableDatum {
    std::int64_t d = 0;    // degree of one copy
    std::int64_t h = 1;    // rank of one copy, >= 1, gcd(|d|, h) = 1
    std::int64_t mult = 1; // >= 1

    Rational slope() const { return Rational(d, h); }
    bool operator==(const StableDatum& o) const {
        return d == o.d && h == o.h && mult == o.mult;
    }
};

// Direct sum of stable bundles and torsion sheaves (tracked by length only).
// Canonical form: bundles sorted by strictly decreasing slope with equal
// slopes merged; torsion lengths sorted decreasingly.
struct CoherentDatum {
    std::vector<StableDatum> bundles;
    std::vector<std::int64_t> torsion; // lengths, each >= 1

    bool operator==(const CoherentDatum& o) const {
        return bundles == o.bundles && torsion == o.torsion;
    }
};

// validates invariants (gcd, positivity) and canonicalizes
CoherentDatum make_coherent(std::vector<StableDatum> bundles,
                            std::vector<std::int64_t> torsion = {});
CoherentDatum canonicalize(CoherentDatum F);

// (rank, degree): rank = Σ h·mult, degree = Σ d·mult + Σ torsion lengths
std::pair<std::int64_t, std::int64_t> rank_degree(const CoherentDatum& F);

// One merged slope stratum of the HN filtration.  Torsion is the slope-+∞
// stratum (rank 0), drawn as the initial vertical segment of the polygon.
struct HNSegment {
    bool infinite = false; // +∞ slope (torsion part)
    Rational slope;        // meaningful iff !infinite
    std::int64_t rank = 0;
    std::int64_t degree = 0;
    bool operator==(const HNSegment& o) const {
        return infinite == o.infinite && (infinite || slope == o.slope) &&
               rank == o.rank && degree == o.degree;
    }
};

struct HNPolygon {
    std::vector<HNSegment> segments; // strictly decreasing slopes, +∞ first
    // cumulative (rank, degree) vertices from (0,0) to (rank F, deg F)
    std::vector<std::pair<std::int64_t, std::int64_t>> vertices;
};

HNPolygon hn_polygon(const CoherentDatum& F);

// dual: (d,h) ↦ (−d,h); only bundles are dualizable here
// (errors: TorsionNotDualizable)
CoherentDatum dual(const CoherentDatum& F);

// twist by O(n): (d,h) ↦ (d+nh, h); torsion lengths are unchanged
CoherentDatum twist(const CoherentDatum& F, std::int64_t n);

enum class ChangeField { Pullback, Pushforward };

// Functors along the degree-r unramified cover.
//   pullback:    O(d/h)^{⊕c} ↦ O(rd/h)^{⊕c·gcd(rd,h)}; rank kept, degree ×r;
//                torsion lengths ×r.
//   pushforward: O(d/h)^{⊕c} ↦ O(d/(rh))^{⊕c·gcd(d,rh)}; rank ×r, degree
//                kept; torsion lengths kept.
// (slopes written in lowest terms on the right)
CoherentDatum change_field(const CoherentDatum& F, std::int64_t r, ChangeField dir);

// 0 → O(−1)^{left} → O^{middle} → F → 0 with left = deg F, middle = rank F +
// deg F; valid whenever every slope of F is >= 0 (torsion allowed).
// (errors: NegativeSlope)
struct PresentationNonneg {
    std::int64_t left = 0;   // copies of O(−1)
    std::int64_t middle = 0; // copies of O
};

PresentationNonneg presentation_nonneg(const CoherentDatum& F);

// Presentation of a positive-slope datum by a semistable bundle of slope 1/r:
// pull back along the degree-r cover (r = rank F, or 1 for torsion-only
// data), twist by −1, apply presentation_nonneg, twist back, push forward.
// ambient = O(1/r)^{⊕ r·deg F} surjects onto the pushforward of the pullback
// of F with kernel O^{d′}, d′ = r·(r·deg F − rank F).
// (errors: NonPositiveSlope)
struct PresentationPositive {
    std::int64_t r = 1;
    std::int64_t d_prime = 0;
    CoherentDatum ambient;
};

PresentationPositive presentation_positive(const CoherentDatum& F);

// n₀ = max(0, ⌈−min finite slope⌉ + 1): every slope of F(n) is positive for
// n >= n₀.  A sufficient slope bound, not the minimal possible twist.
std::int64_t ample_twist_bound(const CoherentDatum& F);

// Graded pieces of a Banach-Colmez datum along the W-filtration:
// positive-slope part (degree 0), pro-étale local system, classifying part,
// negative-slope part (degree 1).  Duals of torsion data are not sheaves, so
// they are tracked separately as formal lengths.
struct BCDatum {
    CoherentDatum degree0;                  // all slopes > 0 (torsion allowed)
    std::int64_t locsys_rank = 0;           // >= 0
    std::int64_t classifying_rank = 0;      // >= 0
    CoherentDatum degree1;                  // all slopes < 0, no torsion
    std::vector<std::int64_t> dual_torsion; // formal duals of torsion lengths

    bool operator==(const BCDatum& o) const {
        return degree0 == o.degree0 && locsys_rank == o.locsys_rank &&
               classifying_rank == o.classifying_rank && degree1 == o.degree1 &&
               dual_torsion == o.dual_torsion;
    }
};

BCDatum make_bc(CoherentDatum degree0, std::int64_t locsys_rank,
                std::int64_t classifying_rank, CoherentDatum degree1,
                std::vector<std::int64_t> dual_torsion = {});

// swaps locsys ↔ classifying, dualizes both bundle parts across the two
// degrees, and swaps torsion with its formal dual; an involution
BCDatum bc_dualize(const BCDatum& B);

// graded ranks (degree0 bundles, locsys, classifying, degree1); duality
// reverses this profile
std::array<std::int64_t, 4> bc_rank_profile(const BCDatum& B);

// (dim, kernel_shift) for a positive-slope datum: dim = deg F and the
// kernel-of-the-trace map sits in shift −2·dim.  (errors: NonPositiveSlope)
std::pair<std::int64_t, std::int64_t> bc_dimension(const CoherentDatum& F);

// --- the four-entry Ext lookup table -------------------------------------

enum class ExtGenerator { UnitE, SkyscraperOSharp };

// gen(twist)[shift]; shift −j means cohomological degree j
struct ExtTerm {
    ExtGenerator gen = ExtGenerator::UnitE;
    std::int64_t twist = 0;
    std::int64_t shift = 0;
    bool operator==(const ExtTerm& o) const {
        return gen == o.gen && twist == o.twist && shift == o.shift;
    }
};

using ExtEntry = std::vector<ExtTerm>; // canonical: decreasing shift, then twist

// (E,E) ↦ E[0]; (E,O♯) ↦ O♯[0]; (O♯,O♯) ↦ O♯[0] ⊕ O♯[−1]; (O♯,E) ↦ O♯(−1)[−1]
ExtEntry ext_table(ExtGenerator x, ExtGenerator y);

// the duality E(t)[−j] ↦ E(−t)[j], O♯(t)[−j] ↦ O♯(−t−1)[j−1]
ExtEntry serre_dual(const ExtEntry& e);

ExtEntry ext_twist(const ExtEntry& e, std::int64_t c);

// the uniform twist c with serre_dual(ext_table(x,y)) = ext_table(y,x)(c);
// throws ContractError("SerreMismatch") if no such c exists
std::int64_t serre_twist_offset(ExtGenerator x, ExtGenerator y);

} // namespace padicft::ffcalc

#endif
