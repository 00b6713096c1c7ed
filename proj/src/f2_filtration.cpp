#include <algorithm>

#include "nilorb/f2.hpp"

namespace nilorb::f2 {

const Subspace& Filtration::at(int a) const {
    const int idx = std::clamp(a + N, 0, static_cast<int>(geq.size()) - 1);
    return geq[static_cast<std::size_t>(idx)];
}

namespace {

Filtration filtration(const F2Space& v, int seed);

Filtration trivial(int d) {
    Filtration f;
    f.N = 0;
    f.geq = {Subspace::whole(d), Subspace(d)};
    return f;
}

Vec lift(const std::vector<Vec>& basis, Vec x) {
    Vec out = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((x >> i) & 1U) out ^= basis[i];
    return out;
}

Subspace lift(const std::vector<Vec>& basis, const Subspace& s, int ambient) {
    Subspace out(ambient);
    for (Vec x : s.basis()) out.add(lift(basis, x));
    return out;
}

bool orthogonal(const Mat& form, const Subspace& a, const Subspace& b) {
    for (Vec x : a.basis())
        for (Vec y : b.basis())
            if (form.form(x, y)) return false;
    return true;
}

Subspace kernel_of(const Mat& t) {
    return kernel_on(t.dim, Subspace::whole(t.dim).basis(), [&](Vec x) { return t.apply(x); });
}

int nil_index(const Mat& t) {
    int e = 0;
    for (Mat p = Mat::identity(t.dim); !p.is_zero(); p = p * t) {
        ++e;
        NILORB_ASSERT(e <= t.dim, "filtration: T is not nilpotent");
    }
    return e;
}

// Smallest l with q(T^l x) = 0 on all of span(basis).
int vanishing_index(const std::vector<Vec>& basis, const Mat& t, const QuadForm& q) {
    const Mat qp = q.polar();
    Mat tl = Mat::identity(t.dim);
    for (int l = 0;; ++l, tl = tl * t) {
        bool ok = true;
        for (std::size_t i = 0; i < basis.size() && ok; ++i) {
            const Vec a = tl.apply(basis[i]);
            if (q.eval(a)) ok = false;
            for (std::size_t j = i + 1; j < basis.size() && ok; ++j)
                if (qp.form(a, tl.apply(basis[j]))) ok = false;
        }
        if (ok) return l;
        NILORB_ASSERT(l <= t.dim, "filtration: vanishing index runaway");
    }
}

// {x in u : q(T^l x) = 0}.
Subspace zero_after(const Subspace& u, const Mat& tl, const QuadForm& q) {
    const Mat qp = q.polar();
    return zero_set(
        u, [&](Vec x) { return q.eval(tl.apply(x)); },
        [&](Vec x, Vec y) { return qp.form(tl.apply(x), tl.apply(y)); });
}

// Recurse on S/R and pull the inner filtration back.
Filtration assemble(const F2Space& v, int N, const Subspace& s, const Subspace& r, int seed) {
    NILORB_ASSERT(s.contains(r), "filtration: V_{>=N} not inside V_{>=-N+1}");
    NILORB_ASSERT(orthogonal(v.xi, r, s), "filtration: xi does not descend to the quotient");
    const std::vector<Vec> comp = complement_in(s, r);
    const F2Space sub = restrict_to(v, comp);
    const Filtration inner = filtration(sub, seed);
    NILORB_ASSERT(inner.N < N, "filtration: inner filtration too long");
    Filtration out;
    out.N = N;
    out.geq.push_back(Subspace::whole(v.dim));
    for (int a = -N + 1; a <= N; ++a) out.geq.push_back(r + lift(comp, inner.at(a), v.dim));
    out.geq.emplace_back(v.dim);
    return out;
}

Filtration filtration_c(const F2Space& v, int seed) {
    if (v.quad.is_zero()) return trivial(v.dim);
    const Mat b = v.quad.polar();
    const Mat t = inverse(v.ambient) * b;
    const auto all = Subspace::whole(v.dim);
    const int e = nil_index(t);
    const int f = vanishing_index(all.basis(), t, v.quad);
    const int N = std::max(e - 1, 2 * f - 1);
    const Mat te1 = power(t, e - 1);
    const Mat tf1 = power(t, f - 1);
    Subspace s;
    if (e == 2 * f + 1)
        s = kernel_of(te1);
    else if (e == 2 * f)
        s = zero_after(kernel_of(te1), tf1, v.quad);
    else if (e < 2 * f)
        s = zero_after(all, tf1, v.quad);
    else
        throw Error(ErrorKind::InternalConsistency, "filtration: e > 2f + 1");
    const Subspace r = perp(v.ambient, s, all);
    const Subspace zero_on_r = zero_after(r, Mat::identity(v.dim), v.quad);
    NILORB_ASSERT(zero_on_r == r, "filtration: alpha does not vanish on V_{>=N}");
    return assemble(v, N, s, r, seed);
}

Filtration filtration_b(const F2Space& v, int seed) {
    if (v.xi.is_zero()) return trivial(v.dim);
    const OddStructure st = odd_structure(v, seed);
    const int m = st.m;
    F2Space w = restrict_to(v, st.w);
    w.type = LieType::D;
    const int k = w.dim;
    const auto wall = Subspace::whole(k);
    const Mat t = k > 0 ? inverse(w.ambient) * w.xi : Mat(0);
    const int e = nil_index(t);
    const int f = std::max(e - m, vanishing_index(wall.basis(), t, w.quad));
    const int N = std::max(2 * m, m + f - 1);

    Subspace vu(v.dim);
    for (Vec x : st.v) vu.add(x);
    for (std::size_t i = 1; i < st.u.size(); ++i) vu.add(st.u[i]);

    const auto up = [&](const Subspace& in_w) { return lift(st.w, in_w, v.dim); };
    Subspace s;
    if (m == 0) {
        s = Subspace::span(v.dim, {st.v[0]}) + up(kernel_of(power(t, e - 1)));
    } else if (m >= f) {
        s = vu + up(wall);
    } else if (e - f < m) {
        s = vu + up(zero_after(wall, power(t, f - 1), w.quad));
    } else {
        NILORB_ASSERT(m == e - f, "filtration: m < e - f");
        const Mat te1 = power(t, e - 1);
        const Mat tf1 = power(t, f - 1);
        const Subspace ker = kernel_of(te1);
        const bool rho = std::any_of(ker.basis().begin(), ker.basis().end(),
                                     [&](Vec x) { return w.quad.eval(tf1.apply(x)) != 0; });
        if (m == f - 1 || rho) {
            s = vu + up(zero_after(ker, tf1, w.quad));
        } else {
            // w** with beta(T^{e-1} w**, x) = Q(T^{f-1} x); the square root on F_2 is the identity.
            Vec ell = 0;
            for (int i = 0; i < k; ++i)
                if (w.quad.eval(tf1.apply(bit(i)))) ell |= bit(i);
            Vec wss = 0;
            const bool ok = solve_on(wall.basis(), [&](Vec x) { return w.ambient.row_combo(te1.apply(x)); }, ell, wss);
            NILORB_ASSERT(ok, "filtration: no w** exists");
            s = vu + up(ker);
            s.add(st.u[0] ^ lift(st.w, wss));
        }
    }
    const Subspace r = zero_after(perp(v.ambient, s, Subspace::whole(v.dim)), Mat::identity(v.dim), v.quad);
    return assemble(v, N, s, r, seed);
}

Filtration filtration(const F2Space& v, int seed) {
    switch (v.type) {
        case LieType::C: return filtration_c(v, seed);
        case LieType::B: return filtration_b(v, seed);
        case LieType::D: break;
    }
    throw Error(ErrorKind::UnsupportedType, "canonical filtration: types B and C only");
}

}  // namespace

Filtration canonical_filtration_full(const F2Space& v, int pivot_seed) {
    Filtration f = filtration(v, pivot_seed);
    const auto all = Subspace::whole(v.dim);
    for (int a = -f.N; a <= f.N; ++a)
        NILORB_ASSERT(f.at(a).contains(f.at(a + 1)), "filtration: V_{>=a+1} not inside V_{>=a}");
    for (int a = v.type == LieType::B ? 1 : -f.N; a <= f.N + 1; ++a) {
        NILORB_ASSERT(perp(v.ambient, f.at(a), all) == f.at(1 - a), "filtration: V_{>=1-a} is not the perp of V_{>=a}");
        if (v.type == LieType::B)
            NILORB_ASSERT(zero_after(f.at(a), Mat::identity(v.dim), v.quad) == f.at(a), "filtration: Q nonzero on V_{>=a}");
    }
    for (int a = 0; a <= f.N; ++a) f.dims.push_back(f.at(a).dim() - f.at(a + 1).dim());
    for (int a = 1; a <= f.N; ++a)
        NILORB_ASSERT(f.at(-a).dim() - f.at(-a + 1).dim() == f.dims[static_cast<std::size_t>(a)],
                      "filtration: f_{-a} differs from f_a");
    while (!f.dims.empty() && f.dims.back() == 0) f.dims.pop_back();
    return f;
}

UpsilonSeq canonical_filtration(const F2Space& v, int pivot_seed) { return canonical_filtration_full(v, pivot_seed).dims; }

}  // namespace nilorb::f2
