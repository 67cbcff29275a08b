#ifndef PADICFT_FROBSOLVE_HPP
#define PADICFT_FROBSOLVE_HPP

#include <map>
#include <memory>
#include <vector>

#include "padicft/arith.hpp"
#include "padicft/rational.hpp"

// Twisted Laurent polynomials sum_i a_i F^i over a truncated model R of
// perfected F_q power series in t: exponents are rationals with p-power
// denominators, F a = phi(a) F with phi the q-power Frobenius.  phi scales
// exponents by q and fixes the F_q coefficients, so everything in sight is
// F_q-linear.  R is windowed: terms with exponent >= emax are truncated away
// (emax is the shared hard bound), and exponent denominators must divide
// p^max_denom_exp, else PrecisionLoss.  Each series tracks its own lower
// bound emin <= 0; operations extend it as needed.

namespace padicft::frobsolve {

using padicft::Rational;
using std::int64_t;

struct SeriesParams {
    int64_t p = 2;
    int f = 1;          // q = p^f
    Rational emax = 16; // hard truncation bound, > 0
    int max_denom_exp = 12;

    int64_t q() const { return arith::ipow(p, f); }
    void validate() const;
    bool operator==(const SeriesParams& o) const {
        return p == o.p && f == o.f && emax == o.emax && max_denom_exp == o.max_denom_exp;
    }
};

struct SeriesTerm {
    Rational e;
    int c; // F_q index, nonzero
    bool operator==(const SeriesTerm& o) const { return e == o.e && c == o.c; }
};

struct Series {
    SeriesParams par;
    Rational emin = 0; // all exponents lie in [emin, emax)
    std::vector<SeriesTerm> terms; // strictly increasing exponents, nonzero coeffs

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Series& o) const { return terms == o.terms; } // values, not bounds
};

Series series_make(const SeriesParams& par, std::vector<SeriesTerm> terms);
Series series_zero(const SeriesParams& par);
Series series_monomial(const SeriesParams& par, const Rational& e, int c);
Series series_add(const Series& a, const Series& b);
Series series_neg(const Series& a);
Series series_scale(int c, const Series& a); // by an F_q coefficient
Series series_mul(const Series& a, const Series& b);
// phi^j: exponents scaled by q^j, coefficients fixed; truncates at emax,
// checks the denominator bound for j < 0 (roots) and for folded exponents
Series series_phi_pow(const Series& a, int j);
bool series_in_Rpp(const Series& a); // all exponents > 0

struct TwistedLaurent {
    SeriesParams par;
    std::map<int, Series> coeff; // F-power -> nonzero coefficient series

    bool is_zero() const { return coeff.empty(); }
    bool operator==(const TwistedLaurent& o) const { return coeff == o.coeff; }
};

TwistedLaurent twisted_zero(const SeriesParams& par);
TwistedLaurent twisted_term(int i, const Series& a);
TwistedLaurent twisted_add(const TwistedLaurent& A, const TwistedLaurent& B);
TwistedLaurent twisted_neg(const TwistedLaurent& A);
// (a F^i)(b F^j) = a phi^i(b) F^{i+j}, extended bilinearly, truncated at emax
TwistedLaurent twisted_mul(const TwistedLaurent& A, const TwistedLaurent& B);
TwistedLaurent f_minus_one(const SeriesParams& par); // F - 1

// class of A in coker(F - 1) = R / R^{++}: fold every a_i F^i to
// a_i^{q^{-i}} F^0 and keep the part with exponents <= 0
Series coker_class(const TwistedLaurent& A);

struct NotSolvableError : ContractError {
    Series cls; // the nonzero cokernel class obstructing the solve
    explicit NotSolvableError(Series cls_)
        : ContractError("NotSolvable", "coker class of the right-hand side is nonzero"),
          cls(std::move(cls_)) {}
};

// solves (F - 1) b = a in the window; succeeds iff coker_class(a) = 0
// (throws NotSolvableError carrying the class otherwise).  The returned b is
// the unique reduced solution: verification identity phi(b_{i-1}) - b_i = a_i.
TwistedLaurent solve_F_minus_one(const TwistedLaurent& a);

} // namespace padicft::frobsolve

#endif
