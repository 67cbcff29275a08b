#include "padicft/schwartz.hpp"

#include <algorithm>
#include <utility>

namespace padicft::schwartz {

namespace {

using arith::GaloisRing;
using arith::GRElem;
using arith::ipow;
using arith::WindowSpace;

void decode_flat(std::int64_t flat, int d, std::int64_t ppc, std::vector<std::int64_t>& out) {
    out.resize(d);
    for (int j = 0; j < d; j++) {
        out[j] = flat % ppc;
        flat /= ppc;
    }
}

void check_compatible(const SchwartzFunction& f, const SchwartzFunction& g) {
    require(f.field == g.field, "FieldMismatch", "functions live over different fields");
    require(f.d == g.d, "FieldMismatch", "functions have different dimensions");
    require(f.ring == g.ring, "FieldMismatch", "functions have different coefficient rings");
}

// Reinterpret the class x (window (ma, ka), digits at exponents [-ma, ka)) as
// a class in window (mb, kb) with kb <= ka.  Returns false when x has a
// nonzero digit below exponent -mb (so it does not lie in pi^{-mb} O).
bool reindex_window(const LocalFieldSpec& field, const WindowElement& x, int ma, int ka,
                    int mb, int kb, WindowElement& out) {
    require(kb <= ka, "InsufficientPrecision",
            "window reindex cannot add digits beyond the known level");
    const std::int64_t q = field.q();
    WindowSpace wa(field, ma, ka);
    std::int64_t idx = wa.to_index(x);
    int shift = mb - ma;
    if (shift >= 0) {
        idx = (idx % ipow(q, ma + kb)) * ipow(q, shift);
    } else {
        if (idx % ipow(q, -shift) != 0) return false;
        idx = (idx / ipow(q, -shift)) % ipow(q, mb + kb);
    }
    out = WindowSpace(field, mb, kb).from_index(idx);
    return true;
}

// Product of the classes a in (ma, ka) and b in (mb, kb), reported in window
// (ma+mb, kout).  Well defined exactly when kout <= min(ka - mb, kb - ma).
WindowElement window_mul(const LocalFieldSpec& field, const WindowElement& a, int ma, int ka,
                         const WindowElement& b, int mb, int kb, int kout) {
    require(kout <= ka - mb && kout <= kb - ma, "InsufficientPrecision",
            "window product would exceed the available precision");
    WindowSpace wout(field, ma + mb, kout);
    if (field.ch == arith::Characteristic::positive) {
        const auto fq = wout.fq();
        int len = ma + mb + kout;
        WindowElement r;
        r.m = ma + mb;
        r.k = kout;
        r.data.assign(len, 0);
        for (int i = 0; i < ma + ka; i++) {
            if (a.data[i] == 0) continue;
            for (int j2 = 0; j2 < mb + kb; j2++) {
                int e = i + j2; // exponent -(ma+mb) + e
                if (e >= len) break;
                r.data[e] =
                    fq->a((int)r.data[e], fq->m((int)a.data[i], (int)b.data[j2]));
            }
        }
        return r;
    }
    int nbig = ma + mb + kout;
    auto gr = GaloisRing::get(field.p, nbig, field.f);
    GRElem ar = a.data, br = b.data;
    for (auto& c : ar) c %= gr->pN;
    for (auto& c : br) c %= gr->pN;
    GRElem prod = gr->mul(ar, br);
    WindowElement r;
    r.m = ma + mb;
    r.k = kout;
    r.data = std::move(prod);
    return r;
}

// Inverse of a unit u in O / pi^prec (digit 0 nonzero).
WindowElement unit_inv(const LocalFieldSpec& field, const WindowElement& u, int prec) {
    if (field.ch == arith::Characteristic::positive) {
        const auto fq = arith::FqTable::get(field.p, field.f);
        const std::int64_t q = fq->q;
        auto fq_inv = [&](int c) {
            for (int e = 1; e < (int)q; e++)
                if (fq->m(c, e) == 1) return e;
            contract_fail("SingularMatrix", "digit is not invertible");
            return 0;
        };
        std::vector<int> inv(prec, 0);
        int c0i = fq_inv((int)u.data[0]);
        inv[0] = c0i;
        for (int j2 = 1; j2 < prec; j2++) {
            int s = 0;
            for (int i = 1; i <= j2; i++)
                s = fq->a(s, fq->m((int)u.data[i], inv[j2 - i]));
            inv[j2] = fq->m(fq->neg[s], c0i);
        }
        WindowElement r;
        r.m = 0;
        r.k = prec;
        r.data.assign(inv.begin(), inv.end());
        return r;
    }
    auto gr = GaloisRing::get(field.p, prec, field.f);
    const auto fq = arith::FqTable::get(field.p, field.f);
    // residue of u as an F_q index, then Newton lifting y <- y (2 - u y)
    int res = 0;
    for (int s = field.f - 1; s >= 0; s--)
        res = res * (int)field.p + (int)(u.data[s] % field.p);
    int resi = 0;
    for (int e = 1; e < (int)fq->q; e++)
        if (fq->m(res, e) == 1) {
            resi = e;
            break;
        }
    require(resi != 0, "SingularMatrix", "unit part is not invertible");
    GRElem y(gr->zero());
    for (int s = 0; s < field.f; s++) {
        y[s] = resi % field.p;
        resi /= (int)field.p;
    }
    GRElem two = gr->from_int(2);
    for (int it = 0; it < prec; it++) // quadratic convergence; prec passes are ample
        y = gr->mul(y, gr->sub(two, gr->mul(u.data, y)));
    WindowElement r;
    r.m = 0;
    r.k = prec;
    r.data = std::move(y);
    return r;
}

// Assemble an element of window (mb, kb) from the digit string ds whose i-th
// entry sits at exponent e0 + i.  Digits below -mb must be zero (returns
// false otherwise); digits at or above kb are dropped (the caller guarantees
// they carry no needed information).
bool from_digit_string(const LocalFieldSpec& field, const std::vector<int>& ds, int e0,
                       int mb, int kb, WindowElement& out) {
    const std::int64_t q = field.q();
    const int len = (int)ds.size();
    for (int i = 0; i < len; i++)
        if (e0 + i < -mb && ds[i] != 0) return false;
    std::int64_t idx = 0;
    for (int e = kb - 1; e >= -mb; e--) {
        int i = e - e0;
        idx = idx * q + ((i >= 0 && i < len) ? ds[i] : 0);
    }
    out = WindowSpace(field, mb, kb).from_index(idx);
    return true;
}

int max_exact_prec(const LocalFieldSpec& field) {
    const std::int64_t q = field.q();
    int L = 0;
    std::int64_t v = 1;
    while (v <= (std::int64_t{1} << 60) / q && L < 12) {
        v *= q;
        L++;
    }
    return L;
}

} // namespace

SchwartzFunction::SchwartzFunction(const LocalFieldSpec& field_, const LambdaRing& ring_,
                                   int d_, int m_, int k_)
    : field(field_), ring(ring_), d(d_), m(m_), k(k_) {
    field.validate();
    if (d < 1) throw InputError("dimension must be at least 1");
    if (m < 0 || k < 0) throw InputError("window exponents must be nonnegative");
    require(ring.p == field.p, "FieldMismatch",
            "coefficient ring roots of unity must match the residue characteristic");
    values.assign((size_t)npoints(), ring.zero());
}

std::int64_t SchwartzFunction::points_per_coord() const { return ipow(field.q(), m + k); }

std::int64_t SchwartzFunction::npoints() const { return ipow(field.q(), (m + k) * d); }

SchwartzFunction schwartz_zero(const LocalFieldSpec& field, const LambdaRing& ring, int d,
                               int m, int k) {
    return SchwartzFunction(field, ring, d, m, k);
}

SchwartzFunction indicator_ball(const LocalFieldSpec& field, const LambdaRing& ring, int d,
                                int j) {
    if (j >= 0) {
        SchwartzFunction f(field, ring, d, 0, j);
        f.values[0] = ring.one();
        return f;
    }
    SchwartzFunction f(field, ring, d, -j, 0);
    std::fill(f.values.begin(), f.values.end(), ring.one());
    return f;
}

SchwartzFunction canonicalize(const SchwartzFunction& f0) {
    SchwartzFunction f = f0;
    const std::int64_t q = f.field.q();
    bool changed = true;
    while (changed) {
        changed = false;
        if (f.m > 0) {
            const std::int64_t ppc = f.points_per_coord();
            bool ok = true;
            for (std::int64_t flat = 0; flat < (std::int64_t)f.values.size() && ok; flat++) {
                if (f.ring.is_zero(f.values[(size_t)flat])) continue;
                std::int64_t rest = flat;
                for (int j = 0; j < f.d; j++) {
                    if ((rest % ppc) % q != 0) {
                        ok = false;
                        break;
                    }
                    rest /= ppc;
                }
            }
            if (ok) {
                SchwartzFunction g(f.field, f.ring, f.d, f.m - 1, f.k);
                const std::int64_t nppc = ppc / q;
                for (std::int64_t nf = 0; nf < (std::int64_t)g.values.size(); nf++) {
                    std::int64_t rest = nf, of = 0, mult = 1;
                    for (int j = 0; j < f.d; j++) {
                        of += (rest % nppc) * q * mult;
                        rest /= nppc;
                        mult *= ppc;
                    }
                    g.values[(size_t)nf] = f.values[(size_t)of];
                }
                f = std::move(g);
                changed = true;
                continue;
            }
        }
        if (f.k > 0) {
            const std::int64_t ppc = f.points_per_coord();
            const std::int64_t top = ppc / q;
            bool ok = true;
            for (std::int64_t flat = 0; flat < (std::int64_t)f.values.size() && ok; flat++) {
                std::int64_t rest = flat, base = 0, mult = 1;
                for (int j = 0; j < f.d; j++) {
                    base += ((rest % ppc) % top) * mult;
                    rest /= ppc;
                    mult *= ppc;
                }
                if (!(f.values[(size_t)flat] == f.values[(size_t)base])) ok = false;
            }
            if (ok) {
                SchwartzFunction g(f.field, f.ring, f.d, f.m, f.k - 1);
                for (std::int64_t nf = 0; nf < (std::int64_t)g.values.size(); nf++) {
                    std::int64_t rest = nf, of = 0, mult = 1;
                    for (int j = 0; j < f.d; j++) {
                        of += (rest % top) * mult;
                        rest /= top;
                        mult *= ppc;
                    }
                    g.values[(size_t)nf] = f.values[(size_t)of];
                }
                f = std::move(g);
                changed = true;
            }
        }
    }
    return f;
}

SchwartzFunction widen(const SchwartzFunction& f, int m, int k) {
    require(m >= f.m && k >= f.k, "FieldMismatch", "widen target must contain the window");
    if (m == f.m && k == f.k) return f;
    const std::int64_t q = f.field.q();
    const std::int64_t ppc_old = f.points_per_coord();
    const std::int64_t lo = ipow(q, m - f.m);
    SchwartzFunction g(f.field, f.ring, f.d, m, k);
    const std::int64_t ppc_new = g.points_per_coord();
    for (std::int64_t nf = 0; nf < (std::int64_t)g.values.size(); nf++) {
        std::int64_t rest = nf, of = 0, mult = 1;
        bool inside = true;
        for (int j = 0; j < f.d; j++) {
            std::int64_t idx = rest % ppc_new;
            rest /= ppc_new;
            if (idx % lo != 0) {
                inside = false;
                break;
            }
            of += ((idx / lo) % ppc_old) * mult;
            mult *= ppc_old;
        }
        if (inside) g.values[(size_t)nf] = f.values[(size_t)of];
    }
    return g;
}

bool equal(const SchwartzFunction& f, const SchwartzFunction& g) {
    if (!(f.field == g.field) || f.d != g.d || !(f.ring == g.ring)) return false;
    SchwartzFunction cf = canonicalize(f);
    SchwartzFunction cg = canonicalize(g);
    return cf.m == cg.m && cf.k == cg.k && cf.values == cg.values;
}

SchwartzFunction add(const SchwartzFunction& f, const SchwartzFunction& g) {
    check_compatible(f, g);
    SchwartzFunction a = widen(f, std::max(f.m, g.m), std::max(f.k, g.k));
    SchwartzFunction b = widen(g, a.m, a.k);
    for (size_t i = 0; i < a.values.size(); i++)
        a.values[i] = a.ring.add(a.values[i], b.values[i]);
    return canonicalize(a);
}

SchwartzFunction scale(const Lambda& c, const SchwartzFunction& f) {
    SchwartzFunction g = f;
    for (auto& v : g.values) v = g.ring.mul(c, v);
    return canonicalize(g);
}

SchwartzFunction mul(const SchwartzFunction& f, const SchwartzFunction& g) {
    check_compatible(f, g);
    SchwartzFunction a = widen(f, std::max(f.m, g.m), std::max(f.k, g.k));
    SchwartzFunction b = widen(g, a.m, a.k);
    for (size_t i = 0; i < a.values.size(); i++)
        a.values[i] = a.ring.mul(a.values[i], b.values[i]);
    return canonicalize(a);
}

Lambda integrate(const SchwartzFunction& f) {
    Lambda s = f.ring.zero();
    for (const auto& v : f.values) s = f.ring.add(s, v);
    return f.ring.scalar_mul(f.ring.q_power_inverse(f.field.q(), (std::int64_t)f.k * f.d), s);
}

SchwartzFunction fourier(const SchwartzFunction& f, bool inverse) {
    int needed = (f.field.ch == arith::Characteristic::zero) ? f.m + f.k
                                                             : (f.m + f.k > 0 ? 1 : 0);
    require(f.ring.M >= needed, "InsufficientRoots",
            "coefficient ring lacks the roots of unity for this window");
    SchwartzFunction g(f.field, f.ring, f.d, f.k, f.m);
    g.values =
        schwartz_detail::fourier_table(f.field, f.ring, f.d, f.m, f.k, f.values, inverse);
    return g;
}

SchwartzFunction convolve(const SchwartzFunction& f, const SchwartzFunction& g) {
    check_compatible(f, g);
    const int M = std::max(f.m, g.m), K = std::max(f.k, g.k);
    SchwartzFunction a = widen(f, M, K);
    SchwartzFunction b = widen(g, M, K);
    WindowSpace ws(f.field, M, K);
    const std::int64_t ppc = ws.npoints;

    // per-coordinate subtraction table (or on-the-fly when large)
    std::vector<std::int64_t> subtab;
    if (ppc <= 4096) {
        subtab.assign((size_t)(ppc * ppc), 0);
        for (std::int64_t x = 0; x < ppc; x++) {
            WindowElement ex = ws.from_index(x);
            for (std::int64_t y = 0; y < ppc; y++)
                subtab[(size_t)(x * ppc + y)] =
                    ws.to_index(ws.sub(ex, ws.from_index(y)));
        }
    }
    auto sub_idx = [&](std::int64_t x, std::int64_t y) {
        if (!subtab.empty()) return subtab[(size_t)(x * ppc + y)];
        return ws.to_index(ws.sub(ws.from_index(x), ws.from_index(y)));
    };

    SchwartzFunction cw(f.field, f.ring, f.d, M, K);
    const std::int64_t n = (std::int64_t)cw.values.size();
    const std::int64_t s0 = f.ring.q_power_inverse(f.field.q(), (std::int64_t)K * f.d);
    std::vector<std::int64_t> xs, ys;
    for (std::int64_t x = 0; x < n; x++) {
        decode_flat(x, f.d, ppc, xs);
        Lambda acc = f.ring.zero();
        for (std::int64_t y = 0; y < n; y++) {
            if (f.ring.is_zero(b.values[(size_t)y])) continue;
            decode_flat(y, f.d, ppc, ys);
            std::int64_t diff = 0, mult = 1;
            for (int j = 0; j < f.d; j++) {
                diff += sub_idx(xs[j], ys[j]) * mult;
                mult *= ppc;
            }
            if (f.ring.is_zero(a.values[(size_t)diff])) continue;
            acc = f.ring.add(acc, f.ring.mul(a.values[(size_t)diff], b.values[(size_t)y]));
        }
        cw.values[(size_t)x] = f.ring.scalar_mul(s0, acc);
    }

    // the result is constant on cosets of pi^{min k} already; report it on the
    // window (max m, min k) by reading representatives
    const int kout = std::min(f.k, g.k);
    if (kout == K) return cw;
    SchwartzFunction out(f.field, f.ring, f.d, M, kout);
    const std::int64_t ppo = out.points_per_coord();
    for (std::int64_t nf = 0; nf < (std::int64_t)out.values.size(); nf++) {
        std::int64_t rest = nf, of = 0, mult = 1;
        for (int j = 0; j < f.d; j++) {
            // the representative with zero top digits has the same index
            of += (rest % ppo) * mult;
            rest /= ppo;
            mult *= ppc;
        }
        out.values[(size_t)nf] = cw.values[(size_t)of];
    }
    return out;
}

SchwartzFunction negate_arg(const SchwartzFunction& f) {
    WindowSpace ws(f.field, f.m, f.k);
    const std::int64_t ppc = ws.npoints;
    std::vector<std::int64_t> negtab((size_t)ppc);
    for (std::int64_t x = 0; x < ppc; x++)
        negtab[(size_t)x] = ws.to_index(ws.neg(ws.from_index(x)));
    SchwartzFunction g(f.field, f.ring, f.d, f.m, f.k);
    std::vector<std::int64_t> xs;
    for (std::int64_t flat = 0; flat < (std::int64_t)f.values.size(); flat++) {
        decode_flat(flat, f.d, ppc, xs);
        std::int64_t of = 0, mult = 1;
        for (int j = 0; j < f.d; j++) {
            of += negtab[(size_t)xs[j]] * mult;
            mult *= ppc;
        }
        g.values[(size_t)of] = f.values[(size_t)flat];
    }
    return g;
}

SchwartzFunction translate(const SchwartzFunction& f, const std::vector<WindowElement>& t,
                           int mt, int kt) {
    if (t.empty()) return f;
    require((int)t.size() == f.d, "FieldMismatch", "translation vector has wrong dimension");
    require(kt >= f.k, "InsufficientPrecision",
            "translation must be known modulo the function level");
    SchwartzFunction a = widen(f, std::max(f.m, mt), f.k);
    WindowSpace ws(f.field, a.m, a.k);
    const std::int64_t ppc = ws.npoints;
    std::vector<std::int64_t> tidx(f.d);
    for (int j = 0; j < f.d; j++) {
        require(t[j].m == mt && t[j].k == kt, "FieldMismatch",
                "translation coordinates must share the stated window");
        WindowElement emb;
        bool okr = reindex_window(f.field, t[j], mt, kt, a.m, a.k, emb);
        require(okr, "FieldMismatch", "translation does not fit the widened window");
        tidx[j] = ws.to_index(emb);
    }
    SchwartzFunction g(f.field, f.ring, f.d, a.m, a.k);
    std::vector<std::int64_t> xs;
    for (std::int64_t flat = 0; flat < (std::int64_t)g.values.size(); flat++) {
        decode_flat(flat, f.d, ppc, xs);
        std::int64_t of = 0, mult = 1;
        for (int j = 0; j < f.d; j++) {
            of += ws.to_index(ws.sub(ws.from_index(xs[j]), ws.from_index(tidx[j]))) * mult;
            mult *= ppc;
        }
        g.values[(size_t)flat] = a.values[(size_t)of];
    }
    return canonicalize(g);
}

SchwartzFunction modulate(const SchwartzFunction& f, const std::vector<WindowElement>& t,
                          int mt, int kt) {
    if (t.empty()) return f;
    require((int)t.size() == f.d, "FieldMismatch", "modulation vector has wrong dimension");
    const int K = std::max(f.k, mt);
    require(kt >= f.m, "InsufficientPrecision",
            "modulation character needs t modulo pi^m");
    SchwartzFunction a = widen(f, f.m, K);
    std::vector<WindowElement> td(f.d);
    for (int j = 0; j < f.d; j++) {
        require(t[j].m == mt && t[j].k == kt, "FieldMismatch",
                "modulation coordinates must share the stated window");
        bool okr = reindex_window(f.field, t[j], mt, kt, K, a.m, td[j]);
        require(okr, "FieldMismatch", "modulation vector does not fit the dual window");
    }
    WindowSpace ws(f.field, a.m, a.k);
    WindowSpace wpair(f.field, a.m + a.k, 0);
    const std::int64_t ppc = ws.npoints;
    std::vector<std::int64_t> xs;
    for (std::int64_t flat = 0; flat < (std::int64_t)a.values.size(); flat++) {
        if (a.ring.is_zero(a.values[(size_t)flat])) continue;
        decode_flat(flat, f.d, ppc, xs);
        WindowElement acc = wpair.zero();
        for (int j = 0; j < f.d; j++)
            acc = wpair.add(acc, arith::window_pair(f.field, ws.from_index(xs[j]), a.m, a.k,
                                                     td[j], a.k, a.m));
        a.values[(size_t)flat] =
            a.ring.mul(a.values[(size_t)flat], arith::char_eval(f.field, a.ring, acc));
    }
    return canonicalize(a);
}

// --- truncated E-adic arithmetic -------------------------------------------

EAdicEntry eadic_zero() { return EAdicEntry{}; }

EAdicEntry eadic_from_digits(const LocalFieldSpec& field, int val,
                             const std::vector<int>& unit_digits) {
    require(!unit_digits.empty() && unit_digits[0] != 0, "FieldMismatch",
            "unit part must start with a nonzero digit");
    const std::int64_t q = field.q();
    std::int64_t idx = 0;
    for (int i = (int)unit_digits.size() - 1; i >= 0; i--) {
        require(unit_digits[i] >= 0 && unit_digits[i] < q, "FieldMismatch",
                "digit out of range");
        idx = idx * q + unit_digits[i];
    }
    EAdicEntry e;
    e.state = EAdicEntry::State::Nonzero;
    e.val = val;
    e.prec = (int)unit_digits.size();
    e.unit = WindowSpace(field, 0, e.prec).from_index(idx);
    return e;
}

EAdicEntry eadic_from_int(const LocalFieldSpec& field, std::int64_t c, int prec) {
    require(prec >= 1, "FieldMismatch", "precision must be at least one digit");
    prec = std::min(prec, max_exact_prec(field));
    if (c == 0) return eadic_zero();
    if (field.ch == arith::Characteristic::positive) {
        std::int64_t r = ((c % field.p) + field.p) % field.p;
        if (r == 0) return eadic_zero();
        EAdicEntry e;
        e.state = EAdicEntry::State::Nonzero;
        e.val = 0;
        e.prec = prec;
        e.unit = WindowSpace(field, 0, prec).from_index(r);
        return e;
    }
    int v = 0;
    std::int64_t u = c;
    while (u % field.p == 0) {
        u /= field.p;
        v++;
    }
    auto gr = GaloisRing::get(field.p, prec, field.f);
    EAdicEntry e;
    e.state = EAdicEntry::State::Nonzero;
    e.val = v;
    e.prec = prec;
    e.unit.m = 0;
    e.unit.k = prec;
    e.unit.data = gr->from_int(u);
    return e;
}

EAdicEntry eadic_neg(const LocalFieldSpec& field, const EAdicEntry& a) {
    if (a.state != EAdicEntry::State::Nonzero) return a;
    EAdicEntry e = a;
    e.unit = WindowSpace(field, 0, a.prec).neg(a.unit);
    return e;
}

EAdicEntry eadic_mul(const LocalFieldSpec& field, const EAdicEntry& a, const EAdicEntry& b) {
    using S = EAdicEntry::State;
    if (a.state == S::ExactZero || b.state == S::ExactZero) return eadic_zero();
    if (a.state == S::Fuzzy || b.state == S::Fuzzy) {
        EAdicEntry e;
        e.state = S::Fuzzy;
        std::int64_t za = (a.state == S::Fuzzy) ? a.zero_prec : a.val;
        std::int64_t zb = (b.state == S::Fuzzy) ? b.zero_prec : b.val;
        e.zero_prec = (int)(za + zb);
        return e;
    }
    EAdicEntry e;
    e.state = S::Nonzero;
    e.val = a.val + b.val;
    e.prec = std::min(a.prec, b.prec);
    e.unit = window_mul(field, a.unit, 0, a.prec, b.unit, 0, b.prec, e.prec);
    return e;
}

EAdicEntry eadic_add(const LocalFieldSpec& field, const EAdicEntry& a, const EAdicEntry& b) {
    using S = EAdicEntry::State;
    if (a.state == S::ExactZero) return b;
    if (b.state == S::ExactZero) return a;
    if (a.state == S::Fuzzy && b.state == S::Fuzzy) {
        EAdicEntry e;
        e.state = S::Fuzzy;
        e.zero_prec = std::min(a.zero_prec, b.zero_prec);
        return e;
    }
    if (a.state == S::Fuzzy || b.state == S::Fuzzy) {
        const EAdicEntry& fz = (a.state == S::Fuzzy) ? a : b;
        const EAdicEntry& nz = (a.state == S::Fuzzy) ? b : a;
        if (nz.val < fz.zero_prec) {
            EAdicEntry e = nz;
            e.prec = std::min(nz.prec, fz.zero_prec - nz.val);
            WindowElement tr;
            reindex_window(field, nz.unit, 0, nz.prec, 0, e.prec, tr);
            e.unit = tr;
            return e;
        }
        EAdicEntry e;
        e.state = S::Fuzzy;
        e.zero_prec = fz.zero_prec;
        return e;
    }
    const int v = std::min(a.val, b.val);
    const std::int64_t know = std::min((std::int64_t)a.val + a.prec,
                                       (std::int64_t)b.val + b.prec);
    const int L = (int)(know - v);
    WindowSpace ws(field, 0, L);
    const std::int64_t q = field.q();
    auto lift = [&](const EAdicEntry& x) {
        // pi^{x.val - v} * unit as a class in O / pi^L O
        const std::int64_t avail = know - x.val; // visible digits of x
        if (avail <= 0) return ws.zero();
        std::int64_t idx = WindowSpace(field, 0, x.prec).to_index(x.unit);
        idx %= ipow(q, std::min<std::int64_t>(x.prec, avail));
        idx *= ipow(q, x.val - v);
        return ws.from_index(idx);
    };
    WindowElement s = ws.add(lift(a), lift(b));
    int j = 0;
    while (j < L && ws.digit(s, j) == 0) j++;
    if (j == L) {
        EAdicEntry e;
        e.state = S::Fuzzy;
        e.zero_prec = (int)know;
        return e;
    }
    EAdicEntry e;
    e.state = S::Nonzero;
    e.val = v + j;
    e.prec = L - j;
    e.unit = WindowSpace(field, 0, e.prec).from_index(ws.to_index(s) / ipow(q, j));
    return e;
}

EAdicEntry eadic_inv(const LocalFieldSpec& field, const EAdicEntry& a) {
    using S = EAdicEntry::State;
    if (a.state == S::ExactZero)
        contract_fail("SingularMatrix", "exact zero has no inverse");
    if (a.state == S::Fuzzy)
        contract_fail("InsufficientPrecision",
                      "cannot invert a value only known to vanish to finite precision");
    EAdicEntry e;
    e.state = S::Nonzero;
    e.val = -a.val;
    e.prec = a.prec;
    e.unit = unit_inv(field, a.unit, a.prec);
    return e;
}

EAdicMatrix matrix_identity(const LocalFieldSpec& field, int d) {
    EAdicMatrix g((size_t)d, std::vector<EAdicEntry>((size_t)d));
    for (int i = 0; i < d; i++)
        g[(size_t)i][(size_t)i] = eadic_from_int(field, 1, max_exact_prec(field));
    return g;
}

EAdicMatrix matrix_transpose(const EAdicMatrix& g) {
    const size_t d = g.size();
    EAdicMatrix t(d, std::vector<EAdicEntry>(d));
    for (size_t i = 0; i < d; i++)
        for (size_t j = 0; j < d; j++) t[j][i] = g[i][j];
    return t;
}

MatrixInverse matrix_inverse(const LocalFieldSpec& field, const EAdicMatrix& g) {
    const int d = (int)g.size();
    require(d >= 1, "SingularMatrix", "matrix must be nonempty");
    for (const auto& row : g)
        require((int)row.size() == d, "SingularMatrix", "matrix must be square");
    EAdicMatrix W = g;
    EAdicMatrix R = matrix_identity(field, d);
    int det_val = 0;
    using S = EAdicEntry::State;
    for (int col = 0; col < d; col++) {
        int piv = -1;
        bool fuzzy_seen = false;
        for (int r = col; r < d; r++) {
            if (W[(size_t)r][(size_t)col].state == S::Nonzero &&
                (piv < 0 ||
                 W[(size_t)r][(size_t)col].val < W[(size_t)piv][(size_t)col].val))
                piv = r;
            if (W[(size_t)r][(size_t)col].state == S::Fuzzy) fuzzy_seen = true;
        }
        if (piv < 0) {
            if (fuzzy_seen)
                contract_fail("InsufficientPrecision",
                              "pivot lost to cancellation; supply more digits");
            contract_fail("SingularMatrix", "matrix column is exactly zero");
        }
        std::swap(W[(size_t)piv], W[(size_t)col]);
        std::swap(R[(size_t)piv], R[(size_t)col]);
        EAdicEntry pinv = eadic_inv(field, W[(size_t)col][(size_t)col]);
        det_val += W[(size_t)col][(size_t)col].val;
        for (int j = 0; j < d; j++) {
            W[(size_t)col][(size_t)j] = eadic_mul(field, W[(size_t)col][(size_t)j], pinv);
            R[(size_t)col][(size_t)j] = eadic_mul(field, R[(size_t)col][(size_t)j], pinv);
        }
        for (int r = 0; r < d; r++) {
            if (r == col) continue;
            EAdicEntry factor = W[(size_t)r][(size_t)col];
            if (factor.state == S::ExactZero) continue;
            for (int j = 0; j < d; j++) {
                W[(size_t)r][(size_t)j] = eadic_add(
                    field, W[(size_t)r][(size_t)j],
                    eadic_neg(field, eadic_mul(field, factor, W[(size_t)col][(size_t)j])));
                R[(size_t)r][(size_t)j] = eadic_add(
                    field, R[(size_t)r][(size_t)j],
                    eadic_neg(field, eadic_mul(field, factor, R[(size_t)col][(size_t)j])));
            }
        }
    }
    return MatrixInverse{std::move(R), det_val};
}

namespace {

// least valuation among the entries (fuzzy entries contribute their vanishing
// order as a safe lower bound)
int matrix_vmin(const EAdicMatrix& g) {
    using S = EAdicEntry::State;
    bool seen = false;
    int v = 0;
    for (const auto& row : g)
        for (const auto& e : row) {
            int cand;
            if (e.state == S::Nonzero)
                cand = e.val;
            else if (e.state == S::Fuzzy)
                cand = e.zero_prec;
            else
                continue;
            v = seen ? std::min(v, cand) : cand;
            seen = true;
        }
    require(seen, "SingularMatrix", "matrix is exactly zero");
    return v;
}

// h(x) = f(A x) where A = g^{-1} (vmin_g bounds the valuations of g itself)
SchwartzFunction linear_pullback(const SchwartzFunction& f, const EAdicMatrix& A,
                                 int vmin_g) {
    using S = EAdicEntry::State;
    const int vminA = matrix_vmin(A);
    const int mp = std::max(0, f.m - vmin_g);
    const int kp = std::max(0, f.k - vminA);
    const int my = std::max({0, mp - vminA, f.m});
    const LocalFieldSpec& fld = f.field;

    SchwartzFunction h(fld, f.ring, f.d, mp, kp);
    WindowSpace wsx(fld, mp, kp);
    WindowSpace wsy(fld, my, f.k);
    WindowSpace wsf(fld, f.m, f.k);
    const std::int64_t ppc = wsx.npoints;
    const std::int64_t ppf = wsf.npoints;

    std::vector<std::int64_t> xs;
    std::vector<WindowElement> xels((size_t)f.d);
    for (std::int64_t flat = 0; flat < (std::int64_t)h.values.size(); flat++) {
        decode_flat(flat, f.d, ppc, xs);
        for (int j = 0; j < f.d; j++) xels[(size_t)j] = wsx.from_index(xs[(size_t)j]);
        std::int64_t of = 0, mult = 1;
        bool inside = true;
        for (int i = 0; i < f.d && inside; i++) {
            WindowElement y = wsy.zero();
            for (int j = 0; j < f.d; j++) {
                const EAdicEntry& a = A[(size_t)i][(size_t)j];
                if (a.state == S::ExactZero) continue;
                if (a.state == S::Fuzzy) {
                    require(a.zero_prec - mp >= f.k, "InsufficientPrecision",
                            "matrix entry is not resolved to the acting window");
                    continue;
                }
                if (a.val - mp >= f.k) continue; // contributes 0 modulo pi^k
                require((std::int64_t)a.val + a.prec - mp >= f.k, "InsufficientPrecision",
                        "matrix entry needs at least k + m' - val digits");
                const int kk = f.k - a.val + mp;
                WindowElement ut;
                reindex_window(fld, a.unit, 0, a.prec, 0, kk, ut);
                WindowElement xt = xels[(size_t)j];
                xt.m = 0;
                xt.k = mp + kp; // reinterpret: x = pi^{-m'} * integral part
                WindowElement prod = window_mul(fld, ut, 0, kk, xt, 0, mp + kp, kk);
                WindowSpace wp(fld, 0, kk);
                std::vector<int> ds((size_t)kk);
                for (int t2 = 0; t2 < kk; t2++) ds[(size_t)t2] = wp.digit(prod, t2);
                WindowElement term;
                bool okt = from_digit_string(fld, ds, a.val - mp, my, f.k, term);
                require(okt, "InsufficientPrecision", "matrix action left the frame");
                y = wsy.add(y, term);
            }
            WindowElement yf;
            if (!reindex_window(fld, y, my, f.k, f.m, f.k, yf)) {
                inside = false;
                break;
            }
            of += wsf.to_index(yf) * mult;
            mult *= ppf;
        }
        if (inside) h.values[(size_t)flat] = f.values[(size_t)of];
    }
    return h;
}

} // namespace

SchwartzFunction affine_act(const SchwartzFunction& f, const EAdicMatrix& g,
                            const std::vector<WindowElement>& t, int mt, int kt) {
    require((int)g.size() == f.d, "FieldMismatch", "matrix dimension must match");
    MatrixInverse inv = matrix_inverse(f.field, g);
    SchwartzFunction h = linear_pullback(f, inv.inv, matrix_vmin(g));
    if (t.empty()) return canonicalize(h);
    return translate(h, t, mt, kt);
}

Lambda det_norm(const LambdaRing& ring, const LocalFieldSpec& field, const EAdicMatrix& g) {
    MatrixInverse inv = matrix_inverse(field, g);
    std::int64_t s;
    if (inv.det_val >= 0)
        s = ring.q_power_inverse(field.q(), inv.det_val);
    else
        s = arith::powmod(field.q() % ring.lmod, -inv.det_val, ring.lmod);
    return ring.scalar_mul(s, ring.one());
}

} // namespace padicft::schwartz
