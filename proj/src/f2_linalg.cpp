#include <algorithm>

#include "nilorb/f2.hpp"

namespace nilorb::f2 {

Mat Mat::identity(int d) {
    Mat m(d);
    for (int i = 0; i < d; ++i) m.rows[static_cast<std::size_t>(i)] = bit(i);
    return m;
}

void Mat::set(int i, int j, bool v) {
    auto& r = rows[static_cast<std::size_t>(i)];
    r = v ? (r | bit(j)) : (r & ~bit(j));
}

Vec Mat::apply(Vec x) const {
    Vec out = 0;
    for (int i = 0; i < dim; ++i)
        if (parity(rows[static_cast<std::size_t>(i)] & x)) out |= bit(i);
    return out;
}

Vec Mat::row_combo(Vec x) const {
    Vec out = 0;
    while (x) {
        out ^= rows[static_cast<std::size_t>(__builtin_ctzll(x))];
        x &= x - 1;
    }
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    Mat out(dim);
    for (int i = 0; i < dim; ++i) out.rows[static_cast<std::size_t>(i)] = o.row_combo(rows[static_cast<std::size_t>(i)]);
    return out;
}

Mat Mat::transpose() const {
    Mat out(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (get(i, j)) out.rows[static_cast<std::size_t>(j)] |= bit(i);
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(rows.begin(), rows.end(), [](Vec r) { return r == 0; });
}

int Mat::rank() const { return Subspace::span(dim, rows).dim(); }

Mat inverse(const Mat& m) {
    // Gauss-Jordan on [m | I].
    std::vector<Vec> a = m.rows;
    std::vector<Vec> b = Mat::identity(m.dim).rows;
    for (int col = 0; col < m.dim; ++col) {
        int piv = -1;
        for (int r = col; r < m.dim; ++r)
            if ((a[static_cast<std::size_t>(r)] >> col) & 1U) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error(ErrorKind::Domain, "inverse: singular matrix");
        std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
        std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(piv)]);
        for (int r = 0; r < m.dim; ++r)
            if (r != col && ((a[static_cast<std::size_t>(r)] >> col) & 1U)) {
                a[static_cast<std::size_t>(r)] ^= a[static_cast<std::size_t>(col)];
                b[static_cast<std::size_t>(r)] ^= b[static_cast<std::size_t>(col)];
            }
    }
    Mat out(m.dim);
    out.rows = std::move(b);
    return out;
}

Mat power(const Mat& m, int k) {
    Mat out = Mat::identity(m.dim);
    for (int i = 0; i < k; ++i) out = out * m;
    return out;
}

int QuadForm::eval(Vec x) const {
    int v = parity(diag & x);
    Vec rest = x;
    while (rest) {
        const int i = __builtin_ctzll(rest);
        rest &= rest - 1;
        v ^= parity(upper[static_cast<std::size_t>(i)] & x);
    }
    return v;
}

Mat QuadForm::polar() const {
    Mat p(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if ((upper[static_cast<std::size_t>(i)] >> j) & 1U) {
                p.toggle(i, j);
                p.toggle(j, i);
            }
    return p;
}

bool QuadForm::is_zero() const {
    return diag == 0 && std::all_of(upper.begin(), upper.end(), [](Vec r) { return r == 0; });
}

QuadForm QuadForm::from_values(Vec diag_values, const Mat& polar) {
    QuadForm q(polar.dim);
    q.diag = diag_values;
    for (int i = 0; i < polar.dim; ++i) {
        const Vec above = ~((bit(i) << 1) - 1);
        q.upper[static_cast<std::size_t>(i)] = polar.rows[static_cast<std::size_t>(i)] & above;
    }
    return q;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vs) {
    Subspace s(ambient);
    for (Vec v : vs) s.add(v);
    return s;
}

Subspace Subspace::whole(int ambient) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) s.add(bit(i));
    return s;
}

Vec Subspace::reduce(Vec x) const {
    for (Vec b : basis_)
        if (x & (b & -b)) x ^= b;
    return x;
}

bool Subspace::contains(const Subspace& o) const {
    return std::all_of(o.basis_.begin(), o.basis_.end(), [&](Vec v) { return contains(v); });
}

bool Subspace::add(Vec x) {
    x = reduce(x);
    if (!x) return false;
    const Vec lead = x & -x;
    for (Vec& b : basis_)
        if (b & lead) b ^= x;
    basis_.push_back(x);
    std::sort(basis_.begin(), basis_.end(), [](Vec a, Vec b) { return (a & -a) < (b & -b); });
    return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
    Subspace s = *this;
    for (Vec v : o.basis_) s.add(v);
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
    return kernel_on(ambient_, basis_, [&](Vec x) { return o.reduce(x); });
}

Subspace perp(const Mat& form, const Subspace& of, const Subspace& within) {
    std::vector<Vec> functionals;
    for (Vec s : of.basis()) functionals.push_back(form.row_combo(s));
    return kernel_on(within.ambient(), within.basis(), [&](Vec x) {
        Vec out = 0;
        for (std::size_t i = 0; i < functionals.size(); ++i)
            if (parity(functionals[i] & x)) out |= bit(static_cast<int>(i));
        return out;
    });
}

std::vector<Vec> complement_in(const Subspace& s, const Subspace& r) {
    NILORB_ASSERT(s.contains(r), "complement_in: r is not inside s");
    Subspace acc = r;
    std::vector<Vec> out;
    for (Vec v : s.basis())
        if (acc.add(v)) out.push_back(v);
    return out;
}

F2Space restrict_to(const F2Space& v, const std::vector<Vec>& basis) {
    const int k = static_cast<int>(basis.size());
    F2Space out;
    out.type = v.type;
    out.dim = k;
    out.ambient = Mat(k);
    out.xi = Mat(k);
    Mat qpolar(k);
    Vec diag = 0;
    const Mat vq = v.quad.polar();
    for (int i = 0; i < k; ++i) {
        const Vec bi = basis[static_cast<std::size_t>(i)];
        if (v.quad.eval(bi)) diag |= bit(i);
        for (int j = 0; j < k; ++j) {
            const Vec bj = basis[static_cast<std::size_t>(j)];
            out.ambient.set(i, j, v.ambient.form(bi, bj));
            out.xi.set(i, j, v.xi.form(bi, bj));
            qpolar.set(i, j, vq.form(bi, bj));
        }
    }
    out.quad = QuadForm::from_values(diag, qpolar);
    return out;
}

}  // namespace nilorb::f2
