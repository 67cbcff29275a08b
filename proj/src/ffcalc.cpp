#include "padicft/ffcalc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace padicft::ffcalc {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void validate_stable(const StableDatum& s) {
    require(s.h >= 1, "InvalidDatum", "stable rank must be positive");
    require(s.mult >= 1, "InvalidDatum", "multiplicity must be positive");
    require(std::gcd(abs64(s.d), s.h) == 1, "InvalidDatum",
            "slope " + std::to_string(s.d) + "/" + std::to_string(s.h) +
                " is not in lowest terms");
}

bool all_slopes_at_least(const CoherentDatum& F, const Rational& bound, bool strict) {
    for (const auto& s : F.bundles) {
        if (strict ? !(s.slope() > bound) : !(s.slope() >= bound)) return false;
    }
    return true; // torsion has slope +∞
}

} // namespace

CoherentDatum canonicalize(CoherentDatum F) {
    // merge equal (d,h) and sort by decreasing slope (HN order)
    std::map<Rational, StableDatum, std::greater<Rational>> merged;
    for (const auto& s : F.bundles) {
        auto [it, fresh] = merged.try_emplace(s.slope(), s);
        if (!fresh) it->second.mult += s.mult;
    }
    F.bundles.clear();
    for (auto& [slope, s] : merged) F.bundles.push_back(s);
    std::sort(F.torsion.begin(), F.torsion.end(), std::greater<>());
    return F;
}

CoherentDatum make_coherent(std::vector<StableDatum> bundles,
                            std::vector<std::int64_t> torsion) {
    CoherentDatum F{std::move(bundles), std::move(torsion)};
    for (const auto& s : F.bundles) validate_stable(s);
    for (auto len : F.torsion)
        require(len >= 1, "InvalidDatum", "torsion length must be positive");
    return canonicalize(std::move(F));
}

std::pair<std::int64_t, std::int64_t> rank_degree(const CoherentDatum& F) {
    std::int64_t rank = 0, degree = 0;
    for (const auto& s : F.bundles) {
        rank += s.h * s.mult;
        degree += s.d * s.mult;
    }
    for (auto len : F.torsion) degree += len;
    return {rank, degree};
}

HNPolygon hn_polygon(const CoherentDatum& F) {
    CoherentDatum G = canonicalize(F);
    HNPolygon poly;
    poly.vertices.emplace_back(0, 0);
    std::int64_t x = 0, y = 0;
    std::int64_t torsion_deg = std::accumulate(G.torsion.begin(), G.torsion.end(),
                                               std::int64_t{0});
    if (torsion_deg > 0) {
        HNSegment seg;
        seg.infinite = true;
        seg.rank = 0;
        seg.degree = torsion_deg;
        poly.segments.push_back(seg);
        y += torsion_deg;
        poly.vertices.emplace_back(x, y);
    }
    for (const auto& s : G.bundles) { // already strictly decreasing slopes
        HNSegment seg;
        seg.slope = s.slope();
        seg.rank = s.h * s.mult;
        seg.degree = s.d * s.mult;
        poly.segments.push_back(seg);
        x += seg.rank;
        y += seg.degree;
        poly.vertices.emplace_back(x, y);
    }
    return poly;
}

CoherentDatum dual(const CoherentDatum& F) {
    require(F.torsion.empty(), "TorsionNotDualizable",
            "torsion sheaves have no dual in this calculus");
    CoherentDatum G;
    for (const auto& s : F.bundles) G.bundles.push_back({-s.d, s.h, s.mult});
    return canonicalize(std::move(G));
}

CoherentDatum twist(const CoherentDatum& F, std::int64_t n) {
    CoherentDatum G = F;
    for (auto& s : G.bundles) s.d += n * s.h; // gcd(|d+nh|, h) = gcd(|d|, h) = 1
    return canonicalize(std::move(G));
}

CoherentDatum change_field(const CoherentDatum& F, std::int64_t r, ChangeField dir) {
    require(r >= 1, "InvalidDatum", "cover degree must be positive");
    CoherentDatum G;
    for (const auto& s : F.bundles) {
        StableDatum t;
        if (dir == ChangeField::Pullback) {
            std::int64_t g = std::gcd(abs64(r * s.d), s.h);
            t = {r * s.d / g, s.h / g, s.mult * g};
        } else {
            std::int64_t g = std::gcd(abs64(s.d), r * s.h);
            t = {s.d / g, r * s.h / g, s.mult * g};
        }
        G.bundles.push_back(t);
    }
    for (auto len : F.torsion)
        G.torsion.push_back(dir == ChangeField::Pullback ? r * len : len);
    return canonicalize(std::move(G));
}

PresentationNonneg presentation_nonneg(const CoherentDatum& F) {
    require(all_slopes_at_least(F, Rational(0), /*strict=*/false), "NegativeSlope",
            "presentation by O requires all slopes >= 0");
    auto [rank, degree] = rank_degree(F);
    PresentationNonneg P;
    P.left = degree;
    P.middle = rank + degree;
    // middle − left recovers (rank, degree): (middle−left)·rk O = rank and
    // 0·middle − (−1)·left = degree
    require(P.middle - P.left == rank && P.left == degree, "Internal",
            "presentation bookkeeping failed");
    return P;
}

PresentationPositive presentation_positive(const CoherentDatum& F) {
    require(all_slopes_at_least(F, Rational(0), /*strict=*/true), "NonPositiveSlope",
            "presentation by O(1/r) requires all slopes > 0");
    auto [rank, degree] = rank_degree(F);
    PresentationPositive P;
    P.r = rank > 0 ? rank : 1;
    // the proof recipe: pull back along the degree-r cover (slopes become
    // >= 1), twist by −1, present by O's, twist the sequence back, push down
    CoherentDatum pulled = change_field(F, P.r, ChangeField::Pullback);
    PresentationNonneg inner = presentation_nonneg(twist(pulled, -1));
    // pushforward sends O^{left} to O^{⊕ r·left} and O(1)^{middle} to
    // O(1/r)^{⊕ middle}
    P.d_prime = P.r * inner.left;
    if (inner.middle > 0)
        P.ambient = change_field(
            make_coherent({StableDatum{1, 1, inner.middle}}), P.r,
            ChangeField::Pushforward);
    auto [arank, adeg] = rank_degree(P.ambient);
    require(arank - P.d_prime == P.r * rank && adeg == P.r * degree, "Internal",
            "positive presentation bookkeeping failed");
    return P;
}

std::int64_t ample_twist_bound(const CoherentDatum& F) {
    if (F.bundles.empty()) return 0; // only the +∞ slope around
    Rational mn = F.bundles.front().slope();
    for (const auto& s : F.bundles) mn = std::min(mn, s.slope());
    return std::max<std::int64_t>(0, (-mn).ceil() + 1);
}

BCDatum make_bc(CoherentDatum degree0, std::int64_t locsys_rank,
                std::int64_t classifying_rank, CoherentDatum degree1,
                std::vector<std::int64_t> dual_torsion) {
    BCDatum B;
    B.degree0 = canonicalize(std::move(degree0));
    B.degree1 = canonicalize(std::move(degree1));
    B.locsys_rank = locsys_rank;
    B.classifying_rank = classifying_rank;
    B.dual_torsion = std::move(dual_torsion);
    std::sort(B.dual_torsion.begin(), B.dual_torsion.end(), std::greater<>());
    require(locsys_rank >= 0 && classifying_rank >= 0, "InvalidDatum",
            "ranks must be non-negative");
    require(all_slopes_at_least(B.degree0, Rational(0), /*strict=*/true),
            "InvalidDatum", "degree-0 part must have positive slopes");
    require(B.degree1.torsion.empty(), "InvalidDatum",
            "degree-1 part cannot contain torsion");
    for (const auto& s : B.degree1.bundles)
        require(s.slope() < Rational(0), "InvalidDatum",
                "degree-1 part must have negative slopes");
    for (auto len : B.dual_torsion)
        require(len >= 1, "InvalidDatum", "torsion length must be positive");
    return B;
}

BCDatum bc_dualize(const BCDatum& B) {
    CoherentDatum bundles0; // degree-0 bundle part, torsion handled formally
    bundles0.bundles = B.degree0.bundles;
    BCDatum D;
    D.locsys_rank = B.classifying_rank;
    D.classifying_rank = B.locsys_rank;
    D.degree1 = dual(bundles0);
    D.degree0 = dual(B.degree1);
    D.degree0.torsion = B.dual_torsion; // formal double dual lands back
    D.dual_torsion = B.degree0.torsion;
    return D;
}

std::array<std::int64_t, 4> bc_rank_profile(const BCDatum& B) {
    return {rank_degree(B.degree0).first, B.locsys_rank, B.classifying_rank,
            rank_degree(B.degree1).first};
}

std::pair<std::int64_t, std::int64_t> bc_dimension(const CoherentDatum& F) {
    require(all_slopes_at_least(F, Rational(0), /*strict=*/true), "NonPositiveSlope",
            "dimension bookkeeping requires positive slopes");
    auto [rank, degree] = rank_degree(F);
    (void)rank;
    return {degree, -2 * degree};
}

namespace {

ExtEntry ext_canonical(ExtEntry e) {
    std::sort(e.begin(), e.end(), [](const ExtTerm& a, const ExtTerm& b) {
        if (a.shift != b.shift) return a.shift > b.shift;
        if (a.twist != b.twist) return a.twist > b.twist;
        return a.gen < b.gen;
    });
    return e;
}

} // namespace

ExtEntry ext_table(ExtGenerator x, ExtGenerator y) {
    using G = ExtGenerator;
    if (x == G::UnitE && y == G::UnitE) return {{G::UnitE, 0, 0}};
    if (x == G::UnitE && y == G::SkyscraperOSharp)
        return {{G::SkyscraperOSharp, 0, 0}};
    if (x == G::SkyscraperOSharp && y == G::SkyscraperOSharp)
        return {{G::SkyscraperOSharp, 0, 0}, {G::SkyscraperOSharp, 0, -1}};
    return {{G::SkyscraperOSharp, -1, -1}};
}

ExtEntry serre_dual(const ExtEntry& e) {
    ExtEntry out;
    for (const auto& t : e) {
        if (t.gen == ExtGenerator::UnitE)
            out.push_back({t.gen, -t.twist, -t.shift});
        else // O♯(t)[−j] ↦ O♯(−t−1)[j−1], and shift = −j
            out.push_back({t.gen, -t.twist - 1, -t.shift - 1});
    }
    return ext_canonical(std::move(out));
}

ExtEntry ext_twist(const ExtEntry& e, std::int64_t c) {
    ExtEntry out = e;
    for (auto& t : out) t.twist += c;
    return ext_canonical(std::move(out));
}

std::int64_t serre_twist_offset(ExtGenerator x, ExtGenerator y) {
    ExtEntry lhs = serre_dual(ext_table(x, y));
    ExtEntry rhs = ext_table(y, x);
    require(!lhs.empty() && lhs.size() == rhs.size(), "SerreMismatch",
            "entry sizes disagree");
    std::int64_t c = lhs.front().twist - rhs.front().twist;
    require(ext_twist(rhs, c) == ext_canonical(lhs), "SerreMismatch",
            "rows do not match up to a uniform twist");
    return c;
}

} // namespace padicft::ffcalc
