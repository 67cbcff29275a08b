#ifndef PADICFT_SCHWARTZ_HPP
#define PADICFT_SCHWARTZ_HPP

// Bruhat-Schwartz functions E^d -> Lambda and their exact Fourier analysis.
//
// A function is stored on a window (m, k): it is supported in (pi^{-m}O)^d
// and constant on cosets of (pi^k O)^d, so a total table over the finite
// group (pi^{-m}O / pi^k O)^d determines it.  Tables are indexed by
// flat = sum_j idx_j * npoints^j over the d coordinates, where idx_j is the
// WindowSpace point index of coordinate j (digit-major, little-endian from
// exponent -m).
//
// The transform is the exact finite sum f^(v) = q^{-kd} sum f(u) psi(<u,v>)
// for the conductor-0 character psi; it swaps the window to (k, m).  With
// the Haar normalization vol(O^d) = 1 the unit ball is self-dual and the
// inverse transform (psi -> psi^{-1}) is a two-sided inverse on the nose.

#include <cstdint>
#include <vector>

#include "padicft/arith.hpp"
#include "padicft/errors.hpp"

namespace padicft::schwartz {

using arith::Lambda;
using arith::LambdaRing;
using arith::LocalFieldSpec;
using arith::WindowElement;

struct SchwartzFunction {
    LocalFieldSpec field;
    LambdaRing ring;
    int d = 1;
    int m = 0, k = 0;
    std::vector<Lambda> values; // size npoints(field, m, k)^d

    SchwartzFunction(const LocalFieldSpec& field_, const LambdaRing& ring_, int d_,
                     int m_, int k_);

    std::int64_t points_per_coord() const; // q^(m+k)
    std::int64_t npoints() const;          // q^((m+k)d)
};

// all-zero function on the given window
SchwartzFunction schwartz_zero(const LocalFieldSpec& field, const LambdaRing& ring,
                               int d, int m, int k);

// indicator of (pi^j O)^d (j may be negative)
SchwartzFunction indicator_ball(const LocalFieldSpec& field, const LambdaRing& ring,
                                int d, int j);

// shrink to the unique minimal window; equality goes through canonical forms
SchwartzFunction canonicalize(const SchwartzFunction& f);
SchwartzFunction widen(const SchwartzFunction& f, int m, int k);
bool equal(const SchwartzFunction& f, const SchwartzFunction& g);

// pointwise operations (widen to a common window first, canonicalize after);
// errors: FieldMismatch when fields, dimensions or coefficient rings differ
SchwartzFunction add(const SchwartzFunction& f, const SchwartzFunction& g);
SchwartzFunction scale(const Lambda& c, const SchwartzFunction& f);
SchwartzFunction mul(const SchwartzFunction& f, const SchwartzFunction& g);

// integral against the Haar measure with vol(O^d) = 1
Lambda integrate(const SchwartzFunction& f);

// f^(v) = integral of f(u) psi(<u,v>) du; window (m,k) -> (k,m); the inverse
// flag evaluates psi^{-1}.  errors: InsufficientRoots when the coefficient
// ring has no primitive p^(m+k)-th root of unity (characteristic 0)
SchwartzFunction fourier(const SchwartzFunction& f, bool inverse = false);

// (f*g)(x) = integral f(y) g(x-y) dy
SchwartzFunction convolve(const SchwartzFunction& f, const SchwartzFunction& g);

// x -> f(-x); the square of the Fourier transform
SchwartzFunction negate_arg(const SchwartzFunction& f);

// x -> f(x - t) for t given coordinatewise in window (mt, kt); the class of
// t modulo pi^k is all that can matter
SchwartzFunction translate(const SchwartzFunction& f, const std::vector<WindowElement>& t,
                           int mt, int kt);

// x -> psi(<x, t>) f(x) for t in the window dual to f's (after trimming);
// exchanges with translate under the transform
SchwartzFunction modulate(const SchwartzFunction& f, const std::vector<WindowElement>& t,
                          int mt, int kt);

// --- truncated elements of E and matrices over E ---------------------------

// A truncated nonzero element is pi^val * unit with the unit given as a
// class in O / pi^prec (lowest digit nonzero).  Exact zeros are tagged; a
// "fuzzy" element is only known to vanish modulo pi^{zero_prec} (the residue
// of catastrophic cancellation) and cannot be pivoted on.
struct EAdicEntry {
    enum class State { ExactZero, Nonzero, Fuzzy };
    State state = State::ExactZero;
    int val = 0;        // exact valuation (Nonzero)
    WindowElement unit; // window (0, prec), digit 0 nonzero (Nonzero)
    int prec = 0;       // unit digits known (Nonzero)
    int zero_prec = 0;  // known zero modulo pi^{zero_prec} (Fuzzy)
};

EAdicEntry eadic_zero();
EAdicEntry eadic_from_digits(const LocalFieldSpec& field, int val,
                             const std::vector<int>& unit_digits);
// the class of the integer c (characteristic 0: exact value; characteristic
// p: c maps through the prime field) at the given unit precision
EAdicEntry eadic_from_int(const LocalFieldSpec& field, std::int64_t c, int prec);

EAdicEntry eadic_add(const LocalFieldSpec& field, const EAdicEntry& a,
                     const EAdicEntry& b);
EAdicEntry eadic_neg(const LocalFieldSpec& field, const EAdicEntry& a);
EAdicEntry eadic_mul(const LocalFieldSpec& field, const EAdicEntry& a,
                     const EAdicEntry& b);
// errors: SingularMatrix on exact zero, InsufficientPrecision on fuzzy input
EAdicEntry eadic_inv(const LocalFieldSpec& field, const EAdicEntry& a);

// d x d matrices, row-major
using EAdicMatrix = std::vector<std::vector<EAdicEntry>>;

EAdicMatrix matrix_identity(const LocalFieldSpec& field, int d);
EAdicMatrix matrix_transpose(const EAdicMatrix& g);

struct MatrixInverse {
    EAdicMatrix inv;
    int det_val = 0; // exact valuation of det g
};

// Gauss-Jordan with valuation-aware pivoting; errors: SingularMatrix when a
// column is exactly zero, InsufficientPrecision when cancellation hides the
// pivot
MatrixInverse matrix_inverse(const LocalFieldSpec& field, const EAdicMatrix& g);

// x -> f(g^{-1}(x - t)).  Entries of g^{-1} must resolve the acting window:
// entry (val, unit mod pi^prec) suffices when val + prec >= k + m' for the
// widened support exponent m' (errors: InsufficientPrecision), g invertible
// (errors: SingularMatrix).  t as in translate; pass an empty t for 0.
SchwartzFunction affine_act(const SchwartzFunction& f, const EAdicMatrix& g,
                            const std::vector<WindowElement>& t, int mt, int kt);

// |det g| = q^{-val(det g)} as an element of the coefficient ring
Lambda det_norm(const LambdaRing& ring, const LocalFieldSpec& field,
                const EAdicMatrix& g);

} // namespace padicft::schwartz

namespace padicft::schwartz_detail {

// the fast transform kernel: returns the output table in the window (k, m)
// ordering, q^{-kd} scale included
std::vector<arith::Lambda> fourier_table(const arith::LocalFieldSpec& field,
                                         const arith::LambdaRing& ring, int d, int m,
                                         int k, const std::vector<arith::Lambda>& values,
                                         bool inverse);

} // namespace padicft::schwartz_detail

#endif
