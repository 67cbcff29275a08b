#include "padicft/arith.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace padicft::arith {

int64_t ipow(int64_t b, int e) {
    if (e < 0) throw InputError("ipow: negative exponent");
    int64_t r = 1;
    for (int i = 0; i < e; i++) {
        if (b != 0 && r > INT64_MAX / (b < 0 ? -b : b))
            throw std::overflow_error("ipow overflow");
        r *= b;
    }
    return r;
}

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
    return (int64_t)((__int128)a * b % m);
}

int64_t powmod(int64_t a, int64_t e, int64_t m) {
    a %= m;
    if (a < 0) a += m;
    int64_t r = 1 % m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int64_t invmod(int64_t a, int64_t m) {
    a %= m;
    if (a < 0) a += m;
    int64_t t = 0, nt = 1, r = m, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) contract_fail("NotInvertible", std::to_string(a) + " has no inverse mod " + std::to_string(m));
    return t < 0 ? t + m : t;
}

static bool is_prime(int64_t v) {
    if (v < 2) return false;
    for (int64_t d = 2; d * d <= v; d++)
        if (v % d == 0) return false;
    return true;
}

void LocalFieldSpec::validate() const {
    if (!is_prime(p)) throw InputError("field p must be prime, got " + std::to_string(p));
    if (f < 1) throw InputError("field f must be >= 1");
    // ramified mixed-characteristic base fields are out of scope by design
}

// ---------------------------------------------------------------------------
// Conway polynomials (monic, little-endian coefficient lists including the
// leading 1) for the small (p, f) this library supports.
// ---------------------------------------------------------------------------

static const std::vector<int64_t>* conway_poly(int64_t p, int f) {
    static const std::map<std::pair<int64_t, int>, std::vector<int64_t>> table = {
        {{2, 1}, {1, 1}},          // x + 1
        {{2, 2}, {1, 1, 1}},       // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},    // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {{3, 1}, {1, 1}},          // x + 1  (root 2 = -1 is primitive mod 3)
        {{3, 2}, {2, 2, 1}},       // x^2 + 2x + 2
        {{3, 3}, {1, 2, 0, 1}},    // x^3 + 2x + 1
        {{5, 1}, {3, 1}},          // x + 3
        {{5, 2}, {2, 4, 1}},       // x^2 + 4x + 2
        {{7, 1}, {4, 1}},          // x + 4
        {{7, 2}, {3, 6, 1}},       // x^2 + 6x + 3
    };
    auto it = table.find({p, f});
    return it == table.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Small polynomial helpers (little-endian coefficient vectors).
// ---------------------------------------------------------------------------

using Poly = std::vector<int64_t>;

static void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

static Poly pmul(const Poly& a, const Poly& b, int64_t mod) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], mod)) % mod;
    ptrim(r);
    return r;
}

static Poly padd(const Poly& a, const Poly& b, int64_t mod) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++) {
        int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v % mod;
    }
    ptrim(r);
    return r;
}

static Poly psub(const Poly& a, const Poly& b, int64_t mod) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); i++) {
        int64_t v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((v % mod) + mod) % mod;
    }
    ptrim(r);
    return r;
}

// division by a monic divisor; returns quotient, leaves remainder in a
static Poly pdivmod_monic(Poly& a, const Poly& b, int64_t mod) {
    if (b.empty() || b.back() != 1) throw std::logic_error("pdivmod_monic: divisor not monic");
    Poly q;
    if (a.size() >= b.size()) {
        q.assign(a.size() - b.size() + 1, 0);
        for (size_t shift = q.size(); shift-- > 0;) {
            int64_t c = a[shift + b.size() - 1];
            if (c == 0) continue;
            q[shift] = c;
            for (size_t i = 0; i < b.size(); i++) {
                int64_t v = a[shift + i] - mulmod(c, b[i], mod);
                a[shift + i] = ((v % mod) + mod) % mod;
            }
        }
    }
    ptrim(a);
    return q;
}

// extended Euclid over F_p: returns (u, v) with u*a + v*b = 1
static std::pair<Poly, Poly> pbezout(Poly a, Poly b, int64_t p) {
    Poly u0 = {1}, v0 = {}, u1 = {}, v1 = {1};
    while (!b.empty()) {
        // normalize b to monic for the division helper
        int64_t lead = b.back();
        int64_t il = invmod(lead, p);
        Poly bm = b;
        for (auto& c : bm) c = mulmod(c, il, p);
        Poly rem = a;
        Poly q = pdivmod_monic(rem, bm, p);
        for (auto& c : q) c = mulmod(c, il, p); // q for the unnormalized b
        // (a, b) <- (b, a - q b)
        a = b;
        b = rem;
        Poly nu = psub(u0, pmul(q, u1, p), p);
        Poly nv = psub(v0, pmul(q, v1, p), p);
        u0 = u1; v0 = v1; u1 = nu; v1 = nv;
    }
    if (a.size() != 1) throw std::logic_error("pbezout: inputs not coprime");
    int64_t il = invmod(a[0], p);
    for (auto& c : u0) c = mulmod(c, il, p);
    for (auto& c : v0) c = mulmod(c, il, p);
    return {u0, v0};
}

// Hensel-lift the factorization x^{q-1} - 1 = h * g from mod p to mod p^N,
// starting from the Conway polynomial h.  Returns the lifted h (monic, its
// roots are the Teichmueller representatives).
static Poly teichmueller_lift(int64_t p, int N, int f, const Poly& conway) {
    int64_t q = ipow(p, f);
    int64_t pN = ipow(p, N);
    Poly F(q, 0); // x^{q-1} - 1
    F[q - 1] = 1;
    F[0] = pN - 1;
    if ((size_t)f == (size_t)q - 1) {
        // h has full degree (only q = 2): the lift is F itself
        return F;
    }
    Poly h = conway;
    Poly g = F;
    for (auto& c : g) c %= p;
    Poly rem = g;
    g = pdivmod_monic(rem, h, p);
    if (!rem.empty()) throw std::logic_error("conway polynomial does not divide x^{q-1}-1");
    auto [u, v] = pbezout(h, g, p);

    int64_t pj = 1;
    for (int j = 1; j < N; j++) {
        pj *= p;
        int64_t pj1 = pj * p;
        // e = (F - h g) / p^j  (mod p)
        Poly hg = pmul(h, g, pj1);
        Poly diff = psub(F, hg, pj1);
        Poly e(diff.size(), 0);
        for (size_t i = 0; i < diff.size(); i++) {
            if (diff[i] % pj != 0) throw std::logic_error("hensel: invariant broken");
            e[i] = (diff[i] / pj) % p;
        }
        ptrim(e);
        Poly ve = pmul(v, e, p);
        Poly dh = ve;
        Poly w = pdivmod_monic(dh, h, p); // dh <- ve mod h, w = ve div h
        Poly dg = padd(pmul(u, e, p), pmul(w, g, p), p);
        // h += p^j dh, g += p^j dg
        h.resize(std::max(h.size(), dh.size() + 0), 0);
        for (size_t i = 0; i < dh.size(); i++) h[i] = (h[i] + pj * dh[i]) % pj1;
        for (size_t i = dh.size(); i < h.size(); i++) h[i] %= pj1;
        g.resize(std::max(g.size(), dg.size()), 0);
        for (size_t i = 0; i < dg.size(); i++) g[i] = (g[i] + pj * dg[i]) % pj1;
        for (size_t i = dg.size(); i < g.size(); i++) g[i] %= pj1;
    }
    // final sanity: h divides x^{q-1} - 1 mod p^N
    Poly check = psub(F, pmul(h, g, pN), pN);
    if (!check.empty()) throw std::logic_error("hensel lift failed verification");
    return h;
}

// ---------------------------------------------------------------------------
// GaloisRing
// ---------------------------------------------------------------------------

GaloisRing::GaloisRing(int64_t p_, int N_, int f_) : p(p_), N(N_), f(f_) {
    LocalFieldSpec probe{p, f, Characteristic::zero};
    probe.validate();
    if (N < 1) throw InputError("GaloisRing needs N >= 1");
    pN = ipow(p, N);
    if (pN > (int64_t(1) << 40)) throw InputError("GaloisRing characteristic too large");
    const auto* cw = conway_poly(p, f);
    if (!cw) contract_fail("UnsupportedField",
                           "no Conway polynomial on file for p=" + std::to_string(p) +
                               ", f=" + std::to_string(f));
    modulus = teichmueller_lift(p, N, f, *cw);
    // reduction table x^f .. x^{2f-2}
    GRElem r(f, 0);
    for (int s = 0; s < f; s++) r[s] = ((pN - modulus[s]) % pN); // x^f = -(lower part)
    xpow_red.push_back(r);
    for (int j = f + 1; j <= 2 * f - 2; j++) {
        GRElem prev = xpow_red.back();
        GRElem nxt(f, 0);
        int64_t top = prev[f - 1];
        for (int s = f - 1; s >= 1; s--) nxt[s] = prev[s - 1];
        nxt[0] = 0;
        for (int s = 0; s < f; s++) nxt[s] = (nxt[s] + mulmod(top, xpow_red[0][s], pN)) % pN;
        xpow_red.push_back(nxt);
    }
    // Frobenius images (x^p)^s
    GRElem xp = from_int(1);
    {
        // compute x^p by repeated shift-reduce
        GRElem x(f, 0);
        if (f == 1) {
            // x is congruent to -modulus[0]
            x[0] = (pN - modulus[0]) % pN;
        } else {
            x[1] = 1;
        }
        GRElem acc = one();
        for (int64_t e = 0; e < p; e++) acc = mul(acc, x);
        xp = acc;
    }
    frob_img.resize(f);
    frob_img[0] = one();
    for (int s = 1; s < f; s++) frob_img[s] = mul(frob_img[s - 1], xp);
}

GRElem GaloisRing::one() const {
    GRElem r(f, 0);
    r[0] = 1 % pN;
    return r;
}

GRElem GaloisRing::from_int(int64_t c) const {
    GRElem r(f, 0);
    c %= pN;
    if (c < 0) c += pN;
    r[0] = c;
    return r;
}

GRElem GaloisRing::add(const GRElem& a, const GRElem& b) const {
    GRElem r(f);
    for (int s = 0; s < f; s++) r[s] = (a[s] + b[s]) % pN;
    return r;
}

GRElem GaloisRing::sub(const GRElem& a, const GRElem& b) const {
    GRElem r(f);
    for (int s = 0; s < f; s++) r[s] = (a[s] - b[s] + pN) % pN;
    return r;
}

GRElem GaloisRing::neg(const GRElem& a) const {
    GRElem r(f);
    for (int s = 0; s < f; s++) r[s] = (pN - a[s]) % pN;
    return r;
}

GRElem GaloisRing::scalar_mul(int64_t c, const GRElem& a) const {
    c %= pN;
    if (c < 0) c += pN;
    GRElem r(f);
    for (int s = 0; s < f; s++) r[s] = mulmod(c, a[s], pN);
    return r;
}

GRElem GaloisRing::mul(const GRElem& a, const GRElem& b) const {
    std::vector<int64_t> prod(2 * f - 1, 0);
    for (int i = 0; i < f; i++)
        for (int j = 0; j < f; j++)
            prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], pN)) % pN;
    GRElem r(prod.begin(), prod.begin() + f);
    for (int j = f; j <= 2 * f - 2; j++) {
        const GRElem& red = xpow_red[j - f];
        for (int s = 0; s < f; s++) r[s] = (r[s] + mulmod(prod[j], red[s], pN)) % pN;
    }
    return r;
}

bool GaloisRing::is_zero(const GRElem& a) const {
    for (int s = 0; s < f; s++)
        if (a[s] % pN != 0) return false;
    return true;
}

GRElem GaloisRing::frobenius(const GRElem& a) const {
    GRElem r(f, 0);
    for (int s = 0; s < f; s++) {
        for (int t = 0; t < f; t++)
            r[t] = (r[t] + mulmod(a[s], frob_img[s][t], pN)) % pN;
    }
    return r;
}

int64_t GaloisRing::trace(const GRElem& a) const {
    GRElem acc = a, cur = a;
    for (int i = 1; i < f; i++) {
        cur = frobenius(cur);
        acc = add(acc, cur);
    }
    for (int s = 1; s < f; s++)
        if (acc[s] != 0) throw std::logic_error("trace did not land in the prime subring");
    return acc[0];
}

int64_t GaloisRing::to_index(const GRElem& a) const {
    int64_t idx = 0;
    for (int s = f - 1; s >= 0; s--) idx = idx * pN + a[s];
    return idx;
}

GRElem GaloisRing::from_index(int64_t idx) const {
    GRElem a(f);
    for (int s = 0; s < f; s++) {
        a[s] = idx % pN;
        idx /= pN;
    }
    return a;
}

size_t GaloisRing::size() const {
    size_t r = 1;
    for (int s = 0; s < f; s++) r *= (size_t)pN;
    return r;
}

std::shared_ptr<const GaloisRing> GaloisRing::get(int64_t p, int N, int f) {
    static std::map<std::tuple<int64_t, int, int>, std::shared_ptr<const GaloisRing>> cache;
    auto key = std::make_tuple(p, N, f);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto r = std::make_shared<const GaloisRing>(p, N, f);
    cache[key] = r;
    return r;
}

std::shared_ptr<const FqTable> FqTable::get(int64_t p, int f) {
    static std::map<std::pair<int64_t, int>, std::shared_ptr<const FqTable>> cache;
    auto key = std::make_pair(p, f);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ring = GaloisRing::get(p, 1, f);
    auto t = std::make_shared<FqTable>();
    t->p = p;
    t->f = f;
    t->q = ipow(p, f);
    int64_t q = t->q;
    t->add.resize((size_t)q * q);
    t->mul.resize((size_t)q * q);
    t->neg.resize((size_t)q);
    t->tr.resize((size_t)q);
    for (int64_t i = 0; i < q; i++) {
        GRElem a = ring->from_index(i);
        t->neg[i] = (int)ring->to_index(ring->neg(a));
        t->tr[i] = (int)ring->trace(a);
        for (int64_t j = 0; j < q; j++) {
            GRElem b = ring->from_index(j);
            t->add[(size_t)i * q + j] = (int)ring->to_index(ring->add(a, b));
            t->mul[(size_t)i * q + j] = (int)ring->to_index(ring->mul(a, b));
        }
    }
    cache[key] = t;
    return t;
}

// ---------------------------------------------------------------------------
// LambdaRing
// ---------------------------------------------------------------------------

LambdaRing::LambdaRing(int64_t ell_, int n_, int M_, int64_t p_)
    : ell(ell_), n(n_), M(M_), p(p_) {
    if (!is_prime(ell)) throw InputError("ell must be prime");
    if (!is_prime(p)) throw InputError("p must be prime");
    if (ell == p) throw InputError("ell must differ from p (q must be invertible)");
    if (n < 1) throw InputError("n must be >= 1");
    if (M < 0) throw InputError("M must be >= 0");
    lmod = ipow(ell, n);
    if (lmod > (int64_t(1) << 31)) throw InputError("ell^n too large");
    pM = ipow(p, M);
    phi = (M == 0) ? 1 : pM / p * (p - 1);
}

Lambda LambdaRing::zero() const {
    Lambda r;
    r.c.assign((size_t)phi, 0);
    return r;
}

Lambda LambdaRing::from_int(int64_t v) const {
    Lambda r = zero();
    v %= lmod;
    if (v < 0) v += lmod;
    r.c[0] = (uint32_t)v;
    return r;
}

// fold a length-p^M exponent array (coefficients of zeta^0..zeta^{pM-1})
// into the phi(p^M)-dimensional basis using Phi_{p^M}(zeta) = 0:
// zeta^{phi+s} = -sum_{j<p-1} zeta^{j p^{M-1} + s}
static Lambda fold_cyclic(const LambdaRing& R, std::vector<int64_t>& arr) {
    int64_t pM1 = R.pM / R.p; // p^{M-1} (0 exponents in the fold range if M==0)
    for (int64_t e = R.pM - 1; e >= R.phi; e--) {
        int64_t c = arr[e] % R.lmod;
        if (c == 0) continue;
        int64_t s = e - R.phi;
        for (int64_t j = 0; j + 1 < R.p; j++) {
            int64_t tgt = j * pM1 + s;
            arr[tgt] = ((arr[tgt] - c) % R.lmod + R.lmod) % R.lmod;
        }
        arr[e] = 0;
    }
    Lambda r;
    r.c.resize((size_t)R.phi);
    for (int64_t i = 0; i < R.phi; i++) r.c[i] = (uint32_t)(((arr[i] % R.lmod) + R.lmod) % R.lmod);
    return r;
}

Lambda LambdaRing::zeta_pow(int64_t e) const {
    e %= pM;
    if (e < 0) e += pM;
    std::vector<int64_t> arr((size_t)pM, 0);
    arr[e] = 1;
    return fold_cyclic(*this, arr);
}

Lambda LambdaRing::zeta_level(int N, int64_t e) const {
    if (N < 0) throw InputError("negative root level");
    if (N > M)
        contract_fail("InsufficientRoots", "need zeta_{p^" + std::to_string(N) +
                                               "} but M=" + std::to_string(M));
    int64_t pN = ipow(p, N);
    e %= pN;
    if (e < 0) e += pN;
    return zeta_pow(e * (pM / pN));
}

Lambda LambdaRing::add(const Lambda& a, const Lambda& b) const {
    Lambda r;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); i++) {
        uint32_t v = a.c[i] + b.c[i];
        r.c[i] = v >= (uint32_t)lmod ? v - (uint32_t)lmod : v;
    }
    return r;
}

Lambda LambdaRing::sub(const Lambda& a, const Lambda& b) const {
    Lambda r;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); i++) {
        uint32_t v = a.c[i] + (uint32_t)lmod - b.c[i];
        r.c[i] = v >= (uint32_t)lmod ? v - (uint32_t)lmod : v;
    }
    return r;
}

Lambda LambdaRing::neg(const Lambda& a) const { return sub(zero(), a); }

Lambda LambdaRing::mul(const Lambda& a, const Lambda& b) const {
    std::vector<int64_t> arr((size_t)pM, 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) {
            size_t e = i + j;
            if (e >= (size_t)pM) e -= (size_t)pM;
            arr[e] = (arr[e] + (int64_t)a.c[i] * b.c[j]) % lmod;
        }
    }
    return fold_cyclic(*this, arr);
}

Lambda LambdaRing::scalar_mul(int64_t s, const Lambda& a) const {
    s %= lmod;
    if (s < 0) s += lmod;
    Lambda r;
    r.c.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = (uint32_t)(((int64_t)a.c[i] * s) % lmod);
    return r;
}

bool LambdaRing::is_zero(const Lambda& a) const {
    for (uint32_t v : a.c)
        if (v != 0) return false;
    return true;
}

int64_t LambdaRing::int_inverse(int64_t c) const { return invmod(c, lmod); }

int64_t LambdaRing::q_power_inverse(int64_t q, int64_t e) const {
    if (e < 0) return powmod(q, -e, lmod);
    return powmod(int_inverse(q % lmod), e, lmod);
}

// ---------------------------------------------------------------------------
// WindowSpace
// ---------------------------------------------------------------------------

WindowSpace::WindowSpace(const LocalFieldSpec& field_, int m_, int k_)
    : field(field_), m(m_), k(k_) {
    field.validate();
    if (m < 0 || k < 0) throw InputError("window exponents must be >= 0");
    npoints = ipow(field.q(), m + k);
    if (field.ch == Characteristic::zero) {
        if (m + k > 0) ring_ = GaloisRing::get(field.p, m + k, field.f);
    } else {
        fq_ = FqTable::get(field.p, field.f);
    }
}

WindowElement WindowSpace::zero() const {
    WindowElement e;
    e.m = m;
    e.k = k;
    if (field.ch == Characteristic::zero)
        e.data.assign((size_t)field.f, 0);
    else
        e.data.assign((size_t)(m + k), 0);
    return e;
}

WindowElement WindowSpace::add(const WindowElement& a, const WindowElement& b) const {
    require(a.m == m && a.k == k && b.m == m && b.k == k, "WindowMismatch",
            "window add with mismatched windows");
    WindowElement r = zero();
    if (field.ch == Characteristic::zero) {
        if (m + k == 0) return r;
        for (int s = 0; s < field.f; s++) r.data[s] = (a.data[s] + b.data[s]) % ring_->pN;
    } else {
        for (int i = 0; i < m + k; i++) r.data[i] = fq_->a((int)a.data[i], (int)b.data[i]);
    }
    return r;
}

WindowElement WindowSpace::neg(const WindowElement& a) const {
    WindowElement r = zero();
    if (field.ch == Characteristic::zero) {
        if (m + k == 0) return r;
        for (int s = 0; s < field.f; s++) r.data[s] = (ring_->pN - a.data[s]) % ring_->pN;
    } else {
        for (int i = 0; i < m + k; i++) r.data[i] = fq_->neg[a.data[i]];
    }
    return r;
}

WindowElement WindowSpace::sub(const WindowElement& a, const WindowElement& b) const {
    return add(a, neg(b));
}

bool WindowSpace::is_zero(const WindowElement& a) const {
    for (int64_t v : a.data)
        if (v != 0) return false;
    return true;
}

int WindowSpace::digit(const WindowElement& a, int i) const {
    if (field.ch == Characteristic::positive) return (int)a.data[i];
    int64_t pi = ipow(field.p, i);
    int d = 0;
    for (int s = field.f - 1; s >= 0; s--)
        d = d * (int)field.p + (int)((a.data[s] / pi) % field.p);
    return d;
}

int64_t WindowSpace::to_index(const WindowElement& a) const {
    int64_t q = field.q();
    int64_t idx = 0;
    for (int i = m + k - 1; i >= 0; i--) idx = idx * q + digit(a, i);
    return idx;
}

WindowElement WindowSpace::from_index(int64_t idx) const {
    WindowElement r = zero();
    int64_t q = field.q();
    if (field.ch == Characteristic::positive) {
        for (int i = 0; i < m + k; i++) {
            r.data[i] = idx % q;
            idx /= q;
        }
    } else {
        for (int i = 0; i < m + k; i++) {
            int64_t D = idx % q;
            idx /= q;
            int64_t pi = ipow(field.p, i);
            for (int s = 0; s < field.f; s++) {
                r.data[s] += (D % field.p) * pi;
                D /= field.p;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

WindowElement window_pair(const LocalFieldSpec& field,
                          const WindowElement& vcheck, int m1, int k1,
                          const WindowElement& v, int m2, int k2) {
    require(m2 == k1 && k2 == m1, "WindowMismatch",
            "pair needs dual windows (m,k) and (k,m)");
    require(vcheck.m == m1 && vcheck.k == k1 && v.m == m2 && v.k == k2,
            "WindowMismatch", "pair arguments disagree with declared windows");
    int S = m1 + k1;
    WindowElement r;
    r.m = S;
    r.k = 0;
    if (field.ch == Characteristic::zero) {
        if (S == 0) {
            r.data.assign((size_t)field.f, 0);
            return r;
        }
        auto ring = GaloisRing::get(field.p, S, field.f);
        r.data = ring->mul(vcheck.data, v.data);
    } else {
        auto fq = FqTable::get(field.p, field.f);
        r.data.assign((size_t)S, 0);
        // exponent of result position i is -S+i; vcheck position ia has
        // exponent -m1+ia, v position ib has exponent -m2+ib
        for (int ia = 0; ia < m1 + k1; ia++) {
            if (vcheck.data[ia] == 0) continue;
            for (int ib = 0; ib < m2 + k2; ib++) {
                int i = ia + ib; // = S + (e, e = exponent) ; keep e < 0 only
                if (i >= S) continue;
                int prod = fq->m((int)vcheck.data[ia], (int)v.data[ib]);
                r.data[i] = fq->a((int)r.data[i], prod);
            }
        }
    }
    return r;
}

Lambda char_eval(const LocalFieldSpec& field, const LambdaRing& ring,
                 const WindowElement& x, bool inverse) {
    require(ring.p == field.p, "FieldMismatch",
            "coefficient ring roots are for a different residue characteristic");
    require(x.k == 0, "WindowMismatch", "char_eval expects a window (N, 0) class");
    int N = x.m;
    if (N == 0) return ring.from_int(1);
    if (field.ch == Characteristic::zero) {
        auto gr = GaloisRing::get(field.p, N, field.f);
        int64_t tr = gr->trace(x.data);
        if (inverse) tr = (gr->pN - tr) % gr->pN;
        return ring.zeta_level(N, tr);
    }
    auto fq = FqTable::get(field.p, field.f);
    int64_t tr = fq->tr[x.data[N - 1]]; // digit at exponent -1
    if (inverse) tr = (field.p - tr) % field.p;
    return ring.zeta_level(1, tr);
}

} // namespace padicft::arith
