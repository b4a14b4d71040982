#include "skewspec/ratpoly.hpp"

namespace skewspec::ratpoly {

namespace {
void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}
}  // namespace

int degree(const Poly& p) { return int(p.size()) - 1; }

Rat leading(const Poly& p) { return p.empty() ? Rat(0) : p.back(); }

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Rat& s) {
    Poly r = a;
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return Poly{Rat(0)};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(long(i));
    trim(r);
    return r;
}

Rat eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

double eval_double(const Poly& p, double x) {
    double acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
    return acc;
}

Poly hermite_coeffs(int n) {
    Poly hm{Rat(1)};
    if (n == 0) return hm;
    Poly h{Rat(0), Rat(2)};
    for (int k = 1; k < n; ++k) {
        // H_{k+1} = 2 z H_k - 2 k H_{k-1}
        Poly t(h.size() + 1, Rat(0));
        for (size_t i = 0; i < h.size(); ++i) t[i + 1] = Rat(2) * h[i];
        Poly next = sub(t, scale(hm, Rat(2 * k)));
        hm = h;
        h = next;
    }
    return h;
}

Poly laguerre_coeffs(int n, int nu) {
    Poly lm{Rat(1)};
    if (n == 0) return lm;
    Poly l{Rat(nu + 1), Rat(-1)};
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+nu+1-z) L_k - (k+nu) L_{k-1}
        Poly zl(l.size() + 1, Rat(0));
        for (size_t i = 0; i < l.size(); ++i) zl[i + 1] = l[i];
        Poly next = sub(sub(scale(l, Rat(2 * k + nu + 1)), zl), scale(lm, Rat(k + nu)));
        next = scale(next, Rat(1, k + 1));
        lm = l;
        l = next;
    }
    return l;
}

Poly c_poly_coeffs(const RatParams& p, int k) {
    Poly cm{Rat(1)};
    if (k == 0) return cm;
    Poly c;
    if (p.family == specfun::PolyFamily::Hermite) {
        c = Poly{Rat(0), Rat(1)};  // C_1 = z
        for (int j = 1; j < k; ++j) {
            Poly zc(c.size() + 1, Rat(0));
            for (size_t i = 0; i < c.size(); ++i) zc[i + 1] = c[i];
            Poly next = sub(zc, scale(cm, p.param * Rat(j)));
            cm = c;
            c = next;
        }
    } else {
        Rat a = p.alpha();
        c = Poly{-a * Rat(p.nu + 1), Rat(1)};  // C_1 = z - a(nu+1)
        for (int j = 1; j < k; ++j) {
            Poly zc(c.size() + 1, Rat(0));
            for (size_t i = 0; i < c.size(); ++i) zc[i + 1] = c[i];
            Poly next = sub(sub(zc, scale(c, a * Rat(2 * j + p.nu + 1))),
                            scale(cm, a * a * Rat(j) * Rat(j + p.nu)));
            cm = c;
            c = next;
        }
    }
    return c;
}

Poly q_coeffs(const RatParams& p, int k, const Rat& c) {
    if (k % 2 == 0) return c_poly_coeffs(p, k);
    int m = (k - 1) / 2;  // q_{2m+1}
    if (p.family == specfun::PolyFamily::Hermite) {
        // q_{2m+1} = C_{2m+1} - 2m C_{2m-1} + c C_{2m}
        Poly r = c_poly_coeffs(p, 2 * m + 1);
        if (m > 0) r = sub(r, scale(c_poly_coeffs(p, 2 * m - 1), Rat(2 * m)));
        r = add(r, scale(c_poly_coeffs(p, 2 * m), c));
        return r;
    }
    // q_{2m+1} = C_{2m+1} - (1+mu^2)^2 (2m)(2m+nu) C_{2m-1} + c' C_{2m},
    // c' = c + (1-mu^2)(4m^2+4m+1+(2m+1)nu)
    Rat musq = p.param;
    Rat onep = Rat(1) + musq;
    Poly r = c_poly_coeffs(p, 2 * m + 1);
    if (m > 0)
        r = sub(r, scale(c_poly_coeffs(p, 2 * m - 1), onep * onep * Rat(2 * m) * Rat(2 * m + p.nu)));
    Rat cp = c + p.alpha() * Rat(4 * m * m + 4 * m + 1 + (2 * m + 1) * p.nu);
    r = add(r, scale(c_poly_coeffs(p, 2 * m), cp));
    return r;
}

Rat norm_ratio(const RatParams& p, int n, int k) {
    auto fact_ratio = [](int a, int b) {  // a! / b!
        Rat r(1);
        for (int i = b + 1; i <= a; ++i) r *= Rat(i);
        for (int i = a + 1; i <= b; ++i) r /= Rat(i);
        return r;
    };
    if (p.family == specfun::PolyFamily::Hermite) return fact_ratio(2 * n, 2 * k);
    Rat onep = Rat(1) + p.param;
    Rat pw(1);
    for (int i = 0; i < 4 * std::abs(n - k); ++i) pw *= onep;
    if (n < k) pw = Rat(1) / pw;
    return fact_ratio(2 * n, 2 * k) * fact_ratio(2 * n + p.nu, 2 * k + p.nu) * pw;
}

}  // namespace skewspec::ratpoly
