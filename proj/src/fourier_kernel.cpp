#include "padicft/schwartz.hpp"

#include <cstdint>
#include <vector>

// The transform is an additive-character sum over the finite group
// W = (pi^{-m}O / pi^k O)^d.  Writing each point through its coefficient
// coordinates turns W into (Z/P)^A with P = p^S:
//   characteristic 0:  S = m+k, A = f*d   (Galois-ring coefficient vectors)
//   characteristic p:  S = 1,   A = f*(m+k)*d  (prime-field digit coordinates)
// and the pairing exponent becomes sum_axis u_axis * (L v)_axis for an
// invertible relabeling L built from the trace form (Gram matrix of the
// coefficient basis; in characteristic p also the digit reversal i <-> -1-i
// that matches pi-adic degrees summing to -1).  So the whole transform is one
// multidimensional DFT over (Z/P)^A followed by an index relabeling and the
// q^{-kd} Haar weight.
//
// The DFT runs as an in-place radix-p decimation-in-frequency pass per axis.
// Coefficient-ring elements are kept as packed phi(p^M)-word blocks; a
// multiplication by zeta^e is an index rotation with the cyclotomic folding
// zeta^{phi + s} = -sum_{t<p-1} zeta^{t p^{M-1} + s}.

namespace padicft::schwartz_detail {

namespace {

using arith::GaloisRing;
using arith::GRElem;
using arith::ipow;
using arith::Lambda;
using arith::LambdaRing;
using arith::LocalFieldSpec;
using arith::WindowSpace;

struct KernelShape {
    std::int64_t p;
    std::int64_t pM;  // p^M of the coefficient ring
    std::int64_t pM1; // p^{M-1}
    std::int64_t phi; // coefficients per ring element
    std::int64_t lmod;
    std::int64_t P; // axis length p^S
    int S;
    int A;          // number of axes
    std::int64_t N; // P^A points
};

template <class W>
class Engine {
  public:
    explicit Engine(const KernelShape& s) : s_(s), buf_((size_t)(s.N * s.phi), 0) {}

    W* block(std::int64_t point) { return buf_.data() + (size_t)(point * s_.phi); }

    void dft_all_axes() {
        std::vector<W> tmpx((size_t)(s_.p * s_.phi));
        std::vector<W> tmpy((size_t)(s_.p * s_.phi));
        std::int64_t stride = 1;
        for (int a = 0; a < s_.A; a++) {
            const std::int64_t blockpts = stride * s_.P;
            for (std::int64_t outer = 0; outer < s_.N; outer += blockpts)
                for (std::int64_t inner = 0; inner < stride; inner++)
                    dif_line(outer + inner, stride, tmpx.data(), tmpy.data());
            stride *= s_.P;
        }
    }

  private:
    void add_rot(W* dst, const W* src, std::int64_t e) {
        const std::int64_t phi = s_.phi, pM = s_.pM, pM1 = s_.pM1, lmod = s_.lmod;
        if (e == 0) {
            for (std::int64_t i = 0; i < phi; i++) {
                std::int64_t v = (std::int64_t)dst[i] + src[i];
                if (v >= lmod) v -= lmod;
                dst[i] = (W)v;
            }
            return;
        }
        for (std::int64_t i = 0; i < phi; i++) {
            const W sv = src[i];
            if (!sv) continue;
            std::int64_t j = i + e;
            if (j >= pM) j -= pM;
            if (j < phi) {
                std::int64_t v = (std::int64_t)dst[j] + sv;
                if (v >= lmod) v -= lmod;
                dst[j] = (W)v;
            } else {
                const std::int64_t off = j - phi;
                for (std::int64_t t = 0; t + 1 < s_.p; t++) {
                    const std::int64_t slot = t * pM1 + off;
                    std::int64_t v = (std::int64_t)dst[slot] - sv;
                    if (v < 0) v += lmod;
                    dst[slot] = (W)v;
                }
            }
        }
    }

    void dif_line(std::int64_t base, std::int64_t stride, W* tmpx, W* tmpy) {
        const std::int64_t p = s_.p, pM = s_.pM, pM1 = s_.pM1, phi = s_.phi;
        for (std::int64_t len = s_.P; len >= p; len /= p) {
            const std::int64_t sub = len / p;
            const std::int64_t twmul = pM / len; // zeta_len = zeta_{p^M}^twmul
            for (std::int64_t start = 0; start < s_.P; start += len) {
                for (std::int64_t o = 0; o < sub; o++) {
                    for (std::int64_t t = 0; t < p; t++) {
                        const W* src = block(base + (start + o + t * sub) * stride);
                        std::copy(src, src + phi, tmpx + t * phi);
                    }
                    std::fill(tmpy, tmpy + p * phi, (W)0);
                    for (std::int64_t j = 0; j < p; j++)
                        for (std::int64_t t = 0; t < p; t++) {
                            std::int64_t e =
                                (pM1 * ((j * t) % p) + twmul * ((o * j) % len)) % pM;
                            add_rot(tmpy + j * phi, tmpx + t * phi, e);
                        }
                    for (std::int64_t j = 0; j < p; j++) {
                        W* dst = block(base + (start + o + j * sub) * stride);
                        std::copy(tmpy + j * phi, tmpy + (j + 1) * phi, dst);
                    }
                }
            }
        }
    }

    const KernelShape& s_;
    std::vector<W> buf_;
};

// base-p digit reversal table for S-digit indices in [0, P)
std::vector<std::int64_t> reversal_table(std::int64_t p, int S, std::int64_t P) {
    std::vector<std::int64_t> rev((size_t)P);
    for (std::int64_t w = 0; w < P; w++) {
        std::int64_t x = w, r = 0;
        for (int i = 0; i < S; i++) {
            r = r * p + (x % p);
            x /= p;
        }
        rev[(size_t)w] = r;
    }
    return rev;
}

template <class W>
std::vector<Lambda> run_kernel(const LocalFieldSpec& field, const LambdaRing& ring, int d,
                               int m, int k, const std::vector<Lambda>& values,
                               bool inverse) {
    const bool char0 = field.ch == arith::Characteristic::zero;
    const int f = field.f;
    KernelShape s;
    s.p = field.p;
    s.pM = ring.pM;
    s.pM1 = ring.pM / ring.p;
    s.phi = ring.phi;
    s.lmod = ring.lmod;
    s.S = char0 ? m + k : 1;
    s.P = ipow(s.p, s.S);
    s.A = char0 ? f * d : f * (m + k) * d;
    s.N = ipow(s.P, s.A);

    Engine<W> eng(s);
    WindowSpace win(field, m, k);
    const std::int64_t ppc = win.npoints;

    // --- pack the input table into axis coordinates ---
    if (char0) {
        std::vector<std::int64_t> powP((size_t)s.A + 1);
        powP[0] = 1;
        for (int a = 0; a < s.A; a++) powP[(size_t)a + 1] = powP[(size_t)a] * s.P;
        for (std::int64_t flat = 0; flat < s.N; flat++) {
            std::int64_t rest = flat, pos = 0;
            for (int j = 0; j < d; j++) {
                const arith::WindowElement el = win.from_index(rest % ppc);
                rest /= ppc;
                for (int t = 0; t < f; t++)
                    pos += el.data[(size_t)t] * powP[(size_t)(j * f + t)];
            }
            W* dst = eng.block(pos);
            const Lambda& v = values[(size_t)flat];
            for (std::int64_t c = 0; c < s.phi; c++) dst[c] = (W)v.c[(size_t)c];
        }
    } else {
        // axis coordinates coincide with the base-p digits of the table index
        for (std::int64_t flat = 0; flat < s.N; flat++) {
            W* dst = eng.block(flat);
            const Lambda& v = values[(size_t)flat];
            for (std::int64_t c = 0; c < s.phi; c++) dst[c] = (W)v.c[(size_t)c];
        }
    }

    eng.dft_all_axes();

    // --- Gram matrix of the trace form on the coefficient basis ---
    std::vector<std::vector<std::int64_t>> G((size_t)f, std::vector<std::int64_t>((size_t)f));
    if (char0) {
        auto gr = GaloisRing::get(s.p, m + k, f);
        GRElem gen = gr->zero();
        if (f >= 2)
            gen[1] = 1;
        else
            gen = gr->one();
        std::vector<GRElem> pw((size_t)(2 * f - 1));
        pw[0] = gr->one();
        for (int e = 1; e <= 2 * f - 2; e++) pw[(size_t)e] = gr->mul(pw[(size_t)e - 1], gen);
        for (int sdx = 0; sdx < f; sdx++)
            for (int t = 0; t < f; t++)
                G[(size_t)sdx][(size_t)t] = gr->trace(pw[(size_t)(sdx + t)]);
    } else {
        const auto fq = arith::FqTable::get(s.p, f);
        std::vector<int> epow((size_t)(2 * f - 1));
        epow[0] = 1;
        for (int e = 1; e <= 2 * f - 2; e++) epow[(size_t)e] = fq->m(epow[(size_t)e - 1], (int)s.p);
        for (int sdx = 0; sdx < f; sdx++)
            for (int t = 0; t < f; t++)
                G[(size_t)sdx][(size_t)t] = fq->tr[(size_t)epow[(size_t)(sdx + t)]];
    }

    const std::vector<std::int64_t> rev = reversal_table(s.p, s.S, s.P);

    // --- relabel the raw transform into the output window and scale ---
    WindowSpace wout(field, k, m);
    const std::int64_t s0 = ring.q_power_inverse(field.q(), (std::int64_t)k * d);
    std::vector<Lambda> out((size_t)s.N, ring.zero());
    std::vector<std::int64_t> powp;
    if (!char0) {
        powp.assign((size_t)s.A + 1, 1);
        for (int a = 0; a < s.A; a++) powp[(size_t)a + 1] = powp[(size_t)a] * s.p;
    } else {
        powp.assign((size_t)s.A + 1, 1);
        for (int a = 0; a < s.A; a++) powp[(size_t)a + 1] = powp[(size_t)a] * s.P;
    }
    const int mk = m + k;
    for (std::int64_t oflat = 0; oflat < s.N; oflat++) {
        std::int64_t rest = oflat, pos = 0;
        for (int j = 0; j < d; j++) {
            const arith::WindowElement el = wout.from_index(rest % ppc);
            rest /= ppc;
            if (char0) {
                for (int sdx = 0; sdx < f; sdx++) {
                    std::int64_t w = 0;
                    for (int t = 0; t < f; t++)
                        w += G[(size_t)sdx][(size_t)t] * el.data[(size_t)t];
                    w %= s.P;
                    if (inverse && w != 0) w = s.P - w;
                    pos += rev[(size_t)w] * powp[(size_t)(j * f + sdx)];
                }
            } else {
                for (int ip = 0; ip < mk; ip++) {
                    std::int64_t digit = wout.digit(el, ip);
                    // base-p coordinates of the output digit at slot ip
                    std::vector<std::int64_t> cvec((size_t)f);
                    for (int t = 0; t < f; t++) {
                        cvec[(size_t)t] = digit % s.p;
                        digit /= s.p;
                    }
                    const int islot = mk - 1 - ip; // degrees pair to -1
                    for (int sdx = 0; sdx < f; sdx++) {
                        std::int64_t w = 0;
                        for (int t = 0; t < f; t++)
                            w += G[(size_t)sdx][(size_t)t] * cvec[(size_t)t];
                        w %= s.p;
                        if (inverse && w != 0) w = s.p - w;
                        pos += w * powp[(size_t)(sdx + f * islot + f * mk * j)];
                    }
                }
            }
        }
        const W* src = eng.block(pos);
        Lambda& ov = out[(size_t)oflat];
        for (std::int64_t c = 0; c < s.phi; c++)
            ov.c[(size_t)c] = (std::uint32_t)(((std::int64_t)src[c] * s0) % s.lmod);
    }
    return out;
}

} // namespace

std::vector<Lambda> fourier_table(const LocalFieldSpec& field, const LambdaRing& ring, int d,
                                  int m, int k, const std::vector<Lambda>& values,
                                  bool inverse) {
    field.validate();
    require(ring.p == field.p, "FieldMismatch",
            "coefficient ring roots must match the field characteristic");
    if (m + k == 0) return values; // single class per coordinate, weight q^0
    const int needed = (field.ch == arith::Characteristic::zero) ? m + k : 1;
    require(ring.M >= needed, "InsufficientRoots",
            "coefficient ring lacks the roots of unity for this window");
    const std::int64_t expect = ipow(field.q(), (m + k) * d);
    require((std::int64_t)values.size() == expect, "FieldMismatch",
            "value table size does not match the window");
    if (ring.lmod <= 0xFF) return run_kernel<std::uint8_t>(field, ring, d, m, k, values, inverse);
    return run_kernel<std::uint32_t>(field, ring, d, m, k, values, inverse);
}

} // namespace padicft::schwartz_detail
