#ifndef PADICFT_ARITH_HPP
#define PADICFT_ARITH_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "padicft/errors.hpp"

namespace padicft::arith {

using std::int64_t;
using std::size_t;

int64_t ipow(int64_t b, int e); // b^e with overflow guard
int64_t mulmod(int64_t a, int64_t b, int64_t m);
int64_t invmod(int64_t a, int64_t m); // extended Euclid; NotInvertible if gcd != 1
int64_t powmod(int64_t a, int64_t e, int64_t m);

// ---------------------------------------------------------------------------
// Base field: either the unramified extension of Q_p of degree f (uniformizer
// p) or the Laurent series field F_q((pi)), q = p^f.  Ramified
// mixed-characteristic fields are out of scope and rejected.
// ---------------------------------------------------------------------------

enum class Characteristic { zero, positive };

struct LocalFieldSpec {
    int64_t p = 2;
    int f = 1;
    Characteristic ch = Characteristic::zero;

    int64_t q() const { return ipow(p, f); }
    void validate() const;
    bool operator==(const LocalFieldSpec& o) const {
        return p == o.p && f == o.f && ch == o.ch;
    }
};

// ---------------------------------------------------------------------------
// Galois ring GR(p^N, f) = (Z/p^N)[x] / (h), where h is the monic degree-f
// lift of the Conway polynomial for (p, f) whose roots are Teichmueller
// (h divides x^{q-1} - 1 over Z/p^N).  Frobenius is then root substitution
// x -> x^p.  N = 1 gives F_q.  Elements are coefficient vectors of length f
// with entries reduced mod p^N.
// ---------------------------------------------------------------------------

using GRElem = std::vector<int64_t>;

class GaloisRing {
public:
    GaloisRing(int64_t p, int N, int f);

    int64_t p;
    int N;
    int f;
    int64_t pN;              // characteristic p^N
    std::vector<int64_t> modulus; // h: f+1 coefficients, monic, Teichmueller lift

    GRElem zero() const { return GRElem(f, 0); }
    GRElem one() const;
    GRElem from_int(int64_t c) const;
    GRElem add(const GRElem& a, const GRElem& b) const;
    GRElem sub(const GRElem& a, const GRElem& b) const;
    GRElem neg(const GRElem& a) const;
    GRElem mul(const GRElem& a, const GRElem& b) const;
    GRElem scalar_mul(int64_t c, const GRElem& a) const;
    bool is_zero(const GRElem& a) const;

    GRElem frobenius(const GRElem& a) const;      // x -> x^p substitution
    int64_t trace(const GRElem& a) const;         // sum of sigma^i, lands in Z/p^N

    // dense index <-> element; index = sum_s a[s] * p^(N*s), s < f
    int64_t to_index(const GRElem& a) const;
    GRElem from_index(int64_t idx) const;

    size_t size() const; // p^(N f)

    // shared, cached per (p, N, f)
    static std::shared_ptr<const GaloisRing> get(int64_t p, int N, int f);

private:
    std::vector<GRElem> xpow_red;  // x^f .. x^{2f-2} reduced mod h
    std::vector<GRElem> frob_img;  // (x^p)^s mod h for s < f
};

// Plain lookup tables for F_q = GR(p, f), used by positive-characteristic
// window arithmetic.  Elements are indices in [0, q); index = sum c_s p^s for
// the coefficient vector (c_0..c_{f-1}) of the Conway generator's powers.
struct FqTable {
    int64_t p;
    int f;
    int64_t q;
    std::vector<int> add;   // q*q
    std::vector<int> mul;   // q*q
    std::vector<int> neg;   // q
    std::vector<int> tr;    // q -> [0, p), trace to F_p

    int a(int x, int y) const { return add[(size_t)x * q + y]; }
    int m(int x, int y) const { return mul[(size_t)x * q + y]; }

    static std::shared_ptr<const FqTable> get(int64_t p, int f);
};

// ---------------------------------------------------------------------------
// Coefficient ring Lambda = (Z/ell^n)[zeta] with zeta a primitive p^M-th root
// of unity: coefficient vectors of length phi(p^M) reduced modulo
// (ell^n, Phi_{p^M}).  M = 0 degenerates to Z/ell^n.  Requires ell != p so
// that q is invertible.
// ---------------------------------------------------------------------------

struct Lambda {
    std::vector<uint32_t> c; // length phi(p^M), entries in [0, ell^n)
    bool operator==(const Lambda& o) const { return c == o.c; }
    bool operator!=(const Lambda& o) const { return !(c == o.c); }
};

class LambdaRing {
public:
    LambdaRing(int64_t ell, int n, int M, int64_t p);

    int64_t ell;
    int n;
    int M;
    int64_t p;
    int64_t lmod;  // ell^n
    int64_t pM;    // p^M
    int64_t phi;   // phi(p^M): coefficient count

    Lambda zero() const;
    Lambda one() const { return from_int(1); }
    Lambda from_int(int64_t v) const;
    Lambda zeta_pow(int64_t e) const;            // zeta^(e mod p^M)
    Lambda zeta_level(int N, int64_t e) const;   // zeta_{p^N}^e; needs N <= M

    Lambda add(const Lambda& a, const Lambda& b) const;
    Lambda sub(const Lambda& a, const Lambda& b) const;
    Lambda neg(const Lambda& a) const;
    Lambda mul(const Lambda& a, const Lambda& b) const;
    Lambda scalar_mul(int64_t s, const Lambda& a) const;
    bool is_zero(const Lambda& a) const;

    int64_t int_inverse(int64_t c) const; // inverse of an integer mod ell^n
    int64_t q_power_inverse(int64_t q, int64_t e) const; // (q^e)^{-1} mod ell^n

    bool operator==(const LambdaRing& o) const {
        return ell == o.ell && n == o.n && M == o.M && p == o.p;
    }
};

// ---------------------------------------------------------------------------
// Window element: a class in pi^{-m} O / pi^k O.
//   char p:  data[i] is the F_q digit at exponent -m+i, 0 <= i < m+k
//            (digits little-endian from exponent -m; no carries).
//   char 0:  data is a GR(p^{m+k}, f) element g, the class of g / p^m.
// The enclosing WindowSpace fixes the field and (m, k) and provides the
// group operations and the dense point indexing used by tables and
// serialization: per-element index = sum_i D_i q^i where D_i is the digit at
// exponent -m+i (for char 0, D_i packs the i-th base-p digits of the f
// coordinates: D_i = sum_s c_{s,i} p^s).
// ---------------------------------------------------------------------------

struct WindowElement {
    int m = 0, k = 0;
    std::vector<int64_t> data;
    bool operator==(const WindowElement& o) const {
        return m == o.m && k == o.k && data == o.data;
    }
};

class WindowSpace {
public:
    WindowSpace(const LocalFieldSpec& field, int m, int k);

    LocalFieldSpec field;
    int m, k;
    int64_t npoints; // q^(m+k)

    WindowElement zero() const;
    WindowElement add(const WindowElement& a, const WindowElement& b) const;
    WindowElement sub(const WindowElement& a, const WindowElement& b) const;
    WindowElement neg(const WindowElement& a) const;
    bool is_zero(const WindowElement& a) const;

    int64_t to_index(const WindowElement& a) const;
    WindowElement from_index(int64_t idx) const;

    // digit at exponent -m+i as an index in [0, q); defined for both
    // characteristics (see class comment)
    int digit(const WindowElement& a, int i) const;

    std::shared_ptr<const GaloisRing> ring() const { return ring_; } // char 0
    std::shared_ptr<const FqTable> fq() const { return fq_; }        // char p

private:
    std::shared_ptr<const GaloisRing> ring_;
    std::shared_ptr<const FqTable> fq_;
};

// The multiplication pairing (pi^{-m}O/pi^k) x (pi^{-k}O/pi^m) -> pi^{-(m+k)}O/O.
// vcheck lives in window (m, k), v in the dual window (k, m); WindowMismatch
// otherwise.  The result is the product class in window (m+k, 0).
WindowElement window_pair(const LocalFieldSpec& field,
                          const WindowElement& vcheck, int m1, int k1,
                          const WindowElement& v, int m2, int k2);

// Standard additive character of conductor 0 evaluated on a window (N, 0)
// class x:
//   char 0:  zeta_{p^N} ^ IntRep(Tr_{E/Q_p}(p^N x) mod p^N)
//   char p:  zeta_p ^ Tr_{F_q/F_p}(coefficient of pi^{-1} in x)
// `inverse` evaluates psi^{-1}.  Requires the ring to supply the needed root
// (M >= N resp. M >= 1) and ring.p == field.p; InsufficientRoots otherwise.
Lambda char_eval(const LocalFieldSpec& field, const LambdaRing& ring,
                 const WindowElement& x, bool inverse = false);

} // namespace padicft::arith

#endif
