#include "padicft/frobsolve.hpp"

#include <algorithm>

namespace padicft::frobsolve {

void SeriesParams::validate() const {
    arith::LocalFieldSpec probe{p, f, arith::Characteristic::positive};
    probe.validate();
    if (!(emax > Rational(0))) throw InputError("emax must be positive");
    if (max_denom_exp < 0) throw InputError("max_denom_exp must be >= 0");
}

static void check_params(const SeriesParams& a, const SeriesParams& b) {
    require(a == b, "PrecisionMismatch",
            "operands have different q / truncation / denominator-bound parameters");
}

// denominators must divide p^max_denom_exp
static void check_denom(const SeriesParams& par, const Rational& e) {
    int64_t den = e.den;
    int64_t cap = 0;
    int64_t d = den;
    while (d % par.p == 0) { d /= par.p; cap++; }
    require(d == 1 && cap <= par.max_denom_exp, "PrecisionLoss",
            "exponent denominator " + std::to_string(den) + " exceeds p^" +
                std::to_string(par.max_denom_exp));
}

Series series_make(const SeriesParams& par, std::vector<SeriesTerm> terms) {
    par.validate();
    auto fq = arith::FqTable::get(par.p, par.f);
    std::map<Rational, int> acc;
    for (const auto& t : terms) {
        if (t.c < 0 || t.c >= fq->q) throw InputError("coefficient index out of range");
        if (t.c == 0) continue;
        if (t.e >= par.emax) continue; // truncated window
        check_denom(par, t.e);
        auto [it, fresh] = acc.emplace(t.e, t.c);
        if (!fresh) it->second = fq->a(it->second, t.c);
    }
    Series s;
    s.par = par;
    for (auto& [e, c] : acc)
        if (c != 0) s.terms.push_back({e, c});
    s.emin = 0;
    for (auto& t : s.terms) s.emin = std::min(s.emin, t.e);
    return s;
}

Series series_zero(const SeriesParams& par) {
    Series s;
    s.par = par;
    return s;
}

Series series_monomial(const SeriesParams& par, const Rational& e, int c) {
    return series_make(par, {{e, c}});
}

Series series_add(const Series& a, const Series& b) {
    check_params(a.par, b.par);
    auto fq = arith::FqTable::get(a.par.p, a.par.f);
    Series r;
    r.par = a.par;
    r.emin = std::min(a.emin, b.emin);
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].e < b.terms[j].e)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].e < a.terms[i].e) {
            r.terms.push_back(b.terms[j++]);
        } else {
            int c = fq->a(a.terms[i].c, b.terms[j].c);
            if (c != 0) r.terms.push_back({a.terms[i].e, c});
            i++;
            j++;
        }
    }
    return r;
}

Series series_neg(const Series& a) {
    auto fq = arith::FqTable::get(a.par.p, a.par.f);
    Series r = a;
    for (auto& t : r.terms) t.c = fq->neg[t.c];
    return r;
}

Series series_scale(int c, const Series& a) {
    auto fq = arith::FqTable::get(a.par.p, a.par.f);
    Series r;
    r.par = a.par;
    r.emin = a.emin;
    if (c == 0) return r;
    for (const auto& t : a.terms) {
        int pc = fq->m(c, t.c);
        if (pc != 0) r.terms.push_back({t.e, pc});
    }
    return r;
}

Series series_mul(const Series& a, const Series& b) {
    check_params(a.par, b.par);
    auto fq = arith::FqTable::get(a.par.p, a.par.f);
    std::map<Rational, int> acc;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            Rational e = ta.e + tb.e;
            if (e >= a.par.emax) continue;
            check_denom(a.par, e);
            int c = fq->m(ta.c, tb.c);
            if (c == 0) continue;
            auto [it, fresh] = acc.emplace(e, c);
            if (!fresh) it->second = fq->a(it->second, c);
        }
    Series r;
    r.par = a.par;
    r.emin = a.emin + b.emin;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms.push_back({e, c});
    return r;
}

Series series_phi_pow(const Series& a, int j) {
    if (j == 0) return a;
    // exponent scale factor q^j
    Rational scale = rational_pow(a.par.q(), j);
    Series r;
    r.par = a.par;
    r.emin = std::min(a.emin, a.emin * scale);
    for (const auto& t : a.terms) {
        Rational e = t.e * scale;
        if (e >= a.par.emax) continue;
        check_denom(a.par, e);
        r.terms.push_back({e, t.c}); // q-power Frobenius fixes F_q
    }
    // scaling by a positive factor preserves the exponent order
    return r;
}

bool series_in_Rpp(const Series& a) {
    for (const auto& t : a.terms)
        if (!(t.e > Rational(0))) return false;
    return true;
}

// ---------------------------------------------------------------------------

TwistedLaurent twisted_zero(const SeriesParams& par) {
    TwistedLaurent A;
    A.par = par;
    return A;
}

TwistedLaurent twisted_term(int i, const Series& a) {
    TwistedLaurent A;
    A.par = a.par;
    if (!a.is_zero()) A.coeff.emplace(i, a);
    return A;
}

TwistedLaurent twisted_add(const TwistedLaurent& A, const TwistedLaurent& B) {
    check_params(A.par, B.par);
    TwistedLaurent R = A;
    for (const auto& [i, b] : B.coeff) {
        auto it = R.coeff.find(i);
        if (it == R.coeff.end()) {
            R.coeff.emplace(i, b);
        } else {
            it->second = series_add(it->second, b);
            if (it->second.is_zero()) R.coeff.erase(it);
        }
    }
    return R;
}

TwistedLaurent twisted_neg(const TwistedLaurent& A) {
    TwistedLaurent R = A;
    for (auto& [i, a] : R.coeff) a = series_neg(a);
    return R;
}

TwistedLaurent twisted_mul(const TwistedLaurent& A, const TwistedLaurent& B) {
    check_params(A.par, B.par);
    TwistedLaurent R = twisted_zero(A.par);
    for (const auto& [i, a] : A.coeff)
        for (const auto& [j, b] : B.coeff) {
            Series term = series_mul(a, series_phi_pow(b, i)); // F a = phi(a) F
            if (term.is_zero()) continue;
            R = twisted_add(R, twisted_term(i + j, term));
        }
    return R;
}

TwistedLaurent f_minus_one(const SeriesParams& par) {
    auto one = series_monomial(par, 0, 1);
    return twisted_add(twisted_term(1, one), twisted_term(0, series_neg(one)));
}

// fold a_i F^i to index 0: exponents scale by q^{-i}, coefficients fixed
Series coker_class(const TwistedLaurent& A) {
    Series s = series_zero(A.par);
    for (const auto& [i, a] : A.coeff) s = series_add(s, series_phi_pow(a, -i));
    Series cls;
    cls.par = A.par;
    cls.emin = s.emin;
    for (const auto& t : s.terms)
        if (t.e <= Rational(0)) cls.terms.push_back(t);
    return cls;
}

TwistedLaurent solve_F_minus_one(const TwistedLaurent& a) {
    const SeriesParams& par = a.par;
    // Fold every coefficient to F^0, collecting the explicit correction c with
    //   a = s F^0 + (F - 1) c:
    //   down (i > 0):  u F^i = phi^{-1}(u) F^{i-1} + (F-1)(phi^{-1}(u) F^{i-1})
    //   up   (i < 0):  u F^i = phi(u) F^{i+1} - (F-1)(u F^i)
    Series s = series_zero(par);
    TwistedLaurent corr = twisted_zero(par);
    for (const auto& [i0, a0] : a.coeff) {
        Series cur = a0;
        int i = i0;
        while (i > 0) {
            cur = series_phi_pow(cur, -1);
            i--;
            corr = twisted_add(corr, twisted_term(i, cur));
        }
        while (i < 0) {
            corr = twisted_add(corr, twisted_neg(twisted_term(i, cur)));
            cur = series_phi_pow(cur, 1);
            i++;
        }
        s = series_add(s, cur);
    }
    Series cls;
    cls.par = par;
    cls.emin = s.emin;
    Series pos = series_zero(par);
    pos.emin = s.emin;
    for (const auto& t : s.terms)
        (t.e <= Rational(0) ? cls : pos).terms.push_back(t);
    if (!cls.is_zero()) throw NotSolvableError(cls);

    // b0 solves (F-1) b0 = pos F^0 by the telescoping series b0_j = -phi^j(pos);
    // exponents grow by a factor q each step, so this terminates
    TwistedLaurent b = corr;
    Series it = pos;
    int guard = 0;
    for (int j = 0; !it.is_zero(); j++) {
        b = twisted_add(b, twisted_term(j, series_neg(it)));
        it = series_phi_pow(it, 1);
        if (++guard > 4096) throw std::logic_error("solve_F_minus_one failed to terminate");
    }
    return b;
}

} // namespace padicft::frobsolve
