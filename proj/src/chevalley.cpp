#include "nilorb/chevalley.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nilorb/errors.hpp"

namespace nilorb::chev {

Group parse_group(const std::string& s) {
    if (s == "G2" || s == "g2" || s == "G2p3") return Group::G2p3;
    if (s == "F4" || s == "f4" || s == "F4p2") return Group::F4p2;
    throw Error(ErrorKind::UnsupportedType, "unknown group '" + s + "' (expected G2 or F4)");
}

std::string group_name(Group g) { return g == Group::G2p3 ? "G2" : "F4"; }

// ---------------------------------------------------------------------------
// Finite fields

namespace {

std::vector<int> digits(int x, int p, int k) {
    std::vector<int> d(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, x /= p) d[static_cast<std::size_t>(i)] = x % p;
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int x = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
    return x;
}

// Product in F_p[x]/(modulus); modulus is monic of degree k, low coefficients given.
int poly_mul(int a, int b, int p, int k, const std::vector<int>& modulus) {
    const auto da = digits(a, p, k), db = digits(b, p, k);
    std::vector<int> prod(static_cast<std::size_t>(2 * k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[static_cast<std::size_t>(i + j)] += da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)];
    for (int d = 2 * k - 1; d >= k; --d) {
        const int c = prod[static_cast<std::size_t>(d)] % p;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < k; ++i) prod[static_cast<std::size_t>(d - k + i)] -= c * modulus[static_cast<std::size_t>(i)];
    }
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out[static_cast<std::size_t>(i)] = ((prod[static_cast<std::size_t>(i)] % p) + p) % p;
    return undigits(out, p);
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q), p_(0), k_(0) {
    if (q < 2 || q > 256) throw Error(ErrorKind::Domain, "field size out of range: " + std::to_string(q));
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p_ = d;
            break;
        }
    int rest = q;
    while (rest % p_ == 0) {
        rest /= p_;
        ++k_;
    }
    if (rest != 1) throw Error(ErrorKind::Domain, std::to_string(q) + " is not a prime power");

    const auto sq = static_cast<std::size_t>(q) * static_cast<std::size_t>(q);
    add_.resize(sq);
    mul_.resize(sq);
    neg_.resize(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) {
        const auto da = digits(a, p_, k_);
        std::vector<int> dn(da.size());
        for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[static_cast<std::size_t>(a)] = undigits(dn, p_);
        for (int b = 0; b < q; ++b) {
            const auto db = digits(b, p_, k_);
            std::vector<int> ds(da.size());
            for (std::size_t i = 0; i < da.size(); ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[static_cast<std::size_t>(a * q + b)] = undigits(ds, p_);
        }
    }
    // First monic modulus whose quotient ring has no zero divisors.
    for (int m = 0; m < q; ++m) {
        const auto modulus = digits(m, p_, k_);
        bool field = true;
        for (int a = 1; a < q && field; ++a)
            for (int b = 1; b < q && field; ++b) {
                const int c = poly_mul(a, b, p_, k_, modulus);
                mul_[static_cast<std::size_t>(a * q + b)] = c;
                if (c == 0) field = false;
            }
        if (field) {
            for (int a = 0; a < q; ++a) mul_[static_cast<std::size_t>(a)] = mul_[static_cast<std::size_t>(a * q)] = 0;
            return;
        }
    }
    throw Error(ErrorKind::InternalConsistency, "no irreducible modulus found");
}

int FiniteField::pow(int a, int k) const {
    int r = 1;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteField::from_int(std::int64_t n) const {
    return static_cast<int>(((n % p_) + p_) % p_);
}

// ---------------------------------------------------------------------------
// Root systems

RootVec RootSystem::root(int idx) const {
    const int P = num_positive();
    if (idx < 0 || idx >= 2 * P) throw Error(ErrorKind::Domain, "root index out of range");
    if (idx < P) return positive[static_cast<std::size_t>(idx)];
    RootVec v = positive[static_cast<std::size_t>(idx - P)];
    for (int& c : v) c = -c;
    return v;
}

int RootSystem::index_of(const RootVec& v) const {
    if (static_cast<int>(v.size()) != rank) return -1;
    const bool neg = std::any_of(v.begin(), v.end(), [](int c) { return c < 0; });
    RootVec w = v;
    if (neg)
        for (int& c : w) c = -c;
    const auto it = std::find(positive.begin(), positive.end(), w);
    if (it == positive.end()) return -1;
    const int i = static_cast<int>(it - positive.begin());
    return neg ? i + num_positive() : i;
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const {
    int s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            s += a[static_cast<std::size_t>(i)] * gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
    return s;
}

int RootSystem::cartan(int simple, const RootVec& beta) const {
    RootVec e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(simple)] = 1;
    return 2 * inner(beta, e) / gram[static_cast<std::size_t>(simple)][static_cast<std::size_t>(simple)];
}

RootVec RootSystem::parse(const std::string& text) const {
    RootVec v(static_cast<std::size_t>(rank), 0);
    std::size_t i = 0;
    int sign = 1;
    if (!text.empty() && text[0] == '-') {
        sign = -1;
        ++i;
    }
    int pending = -1;
    bool any = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            pending = (pending < 0 ? 0 : pending * 10) + (c - '0');
            continue;
        }
        const auto it = std::find(simple_names.begin(), simple_names.end(), std::string(1, c));
        if (it == simple_names.end()) throw Error(ErrorKind::Parse, "bad root name '" + text + "'");
        v[static_cast<std::size_t>(it - simple_names.begin())] += sign * (pending < 0 ? 1 : pending);
        pending = -1;
        any = true;
    }
    if (!any || pending >= 0) throw Error(ErrorKind::Parse, "bad root name '" + text + "'");
    return v;
}

std::string RootSystem::name(const RootVec& v) const {
    std::string out;
    const bool neg = std::any_of(v.begin(), v.end(), [](int c) { return c < 0; });
    if (neg) out += "-";
    for (int i = 0; i < rank; ++i) {
        const int c = std::abs(v[static_cast<std::size_t>(i)]);
        if (c == 0) continue;
        if (c > 1) out += std::to_string(c);
        out += simple_names[static_cast<std::size_t>(i)];
    }
    return out;
}

RootSystem RootSystem::make(Group g) {
    RootSystem rs;
    rs.group = g;
    if (g == Group::G2p3) {
        rs.rank = 2;
        rs.simple_names = {"a", "b"};
        rs.gram = {{2, -3}, {-3, 6}};
    } else {
        rs.rank = 4;
        rs.simple_names = {"p", "q", "r", "s"};
        rs.gram = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    }
    const auto n = static_cast<std::size_t>(rs.rank);
    std::set<RootVec> seen;
    std::vector<RootVec> order;
    for (std::size_t i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        seen.insert(e);
        order.push_back(e);
    }
    // Root strings: beta + alpha_i is a root iff r - <beta, alpha_i^vee> > 0.
    for (std::size_t k = 0; k < order.size(); ++k) {
        const RootVec beta = order[k];
        for (std::size_t i = 0; i < n; ++i) {
            int r = 0;
            RootVec down = beta;
            while (true) {
                down[i] -= 1;
                if (!seen.count(down)) break;
                ++r;
            }
            if (r - rs.cartan(static_cast<int>(i), beta) > 0) {
                RootVec up = beta;
                up[i] += 1;
                if (seen.insert(up).second) order.push_back(up);
            }
        }
    }
    std::sort(order.begin(), order.end(), [](const RootVec& a, const RootVec& b) {
        int ha = 0, hb = 0;
        for (int c : a) ha += c;
        for (int c : b) hb += c;
        return ha != hb ? ha < hb : a < b;
    });
    rs.positive = order;
    const std::size_t expect = g == Group::G2p3 ? 6 : 24;
    NILORB_ASSERT(rs.positive.size() == expect, "root system: wrong number of positive roots");
    return rs;
}

// ---------------------------------------------------------------------------
// Structure constants

std::vector<std::tuple<std::string, std::string, int>> listed_constants(Group g) {
    if (g == Group::G2p3) return {{"a", "b", 1}, {"a", "ab", 2}, {"a", "2ab", 3}, {"b", "3ab", -1}, {"ab", "2ab", 3}};
    std::vector<std::tuple<std::string, std::string, int>> out;
    const auto add = [&](int v, std::initializer_list<std::pair<const char*, const char*>> pairs) {
        for (const auto& [a, b] : pairs) out.emplace_back(a, b, v);
    };
    add(1, {{"p", "q"},       {"p", "qr"},        {"p", "q2r"},       {"p", "p3q4r2s"},   {"p", "qrs"},
            {"p", "q2rs"},    {"p", "q2r2s"},     {"q", "rs"},        {"q", "pq2r"},      {"q", "pq2rs"},
            {"q", "pq2r2s"},  {"q", "r"},         {"q", "p2q4r2s"},   {"r", "s"},         {"r", "qrs"},
            {"r", "pqrs"},    {"r", "p2q2rs"},    {"pq", "rs"},       {"pq", "p2q4r2s"},  {"s", "q2r"},
            {"s", "pq2r"},    {"s", "p2q2r"},     {"rs", "pqr"},      {"rs", "p2q2r"},    {"qr", "pqrs"},
            {"qr", "pq2r2s"}, {"q2r", "pq2r2s"},  {"q2r", "p2q2r2s"}, {"pq2r", "p2q2r2s"}, {"pqr", "q2rs"},
            {"qrs", "pq2rs"}});
    add(-1, {{"r", "pq"},     {"r", "p2q2r2s"},  {"s", "qr"},       {"s", "pqr"},       {"s", "p2q3rs"},
             {"pq", "q2r"},   {"pq", "q2rs"},    {"pq", "q2r2s"},   {"qr", "rs"},       {"qr", "pq2rs"},
             {"rs", "p2q2rs"}, {"q2r", "pqrs"},  {"pqr", "q2r2s"},  {"pqr", "qrs"},     {"pq2r", "q2r2s"},
             {"qrs", "pq2r"}, {"pqrs", "q2rs"},  {"p2q2r", "pq2r2s"}, {"p2q2r", "q2r2s"}});
    add(-2, {{"r", "pqr"},      {"r", "qr"},     {"r", "p2q3r2s"},  {"qr", "p2q3r2s"}, {"qr", "pqr"},
             {"rs", "pqrs"},    {"rs", "qrs"},   {"pqr", "p2q3r2s"}, {"qrs", "pqrs"},  {"q2rs", "pq2rs"},
             {"q2rs", "p2q2rs"}, {"pq2rs", "p2q2rs"}});
    add(2, {{"s", "pq2rs"}, {"s", "p2q2rs"}, {"s", "q2rs"}, {"rs", "p2q3rs"}, {"qrs", "p2q3rs"}, {"pqrs", "p2q3rs"}});
    return out;
}

int ChevalleyRep::dual_coord(int root_idx) const {
    const int P = roots.num_positive();
    return root_idx < P ? root_idx + P : root_idx - P;
}

int ChevalleyRep::structure_constant(const std::string& a, const std::string& b) const {
    const int ia = roots.index_of(roots.parse(a)), ib = roots.index_of(roots.parse(b));
    if (ia < 0 || ib < 0) throw Error(ErrorKind::Domain, "not a root: " + (ia < 0 ? a : b));
    return N[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)];
}

namespace {

RootVec add_roots(const RootVec& a, const RootVec& b) {
    RootVec s = a;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
    return s;
}

using Vec64 = std::vector<std::int64_t>;

Vec64 bracket_with(const ChevalleyRep& rep, int i, const Vec64& v) {
    Vec64 out(static_cast<std::size_t>(rep.dim), 0);
    for (int k = 0; k < rep.dim; ++k) {
        const std::int64_t c = v[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const auto& b = rep.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        for (int m = 0; m < rep.dim; ++m) out[static_cast<std::size_t>(m)] += c * b[static_cast<std::size_t>(m)];
    }
    return out;
}

void fill_constants(ChevalleyRep& rep) {
    const RootSystem& rs = rep.roots;
    const int P = rs.num_positive(), R = 2 * P;
    rep.N.assign(static_cast<std::size_t>(R), std::vector<int>(static_cast<std::size_t>(R), 0));
    auto& N = rep.N;
    const auto sum_idx = [&](int a, int b) { return rs.index_of(add_roots(rs.root(a), rs.root(b))); };

    for (const auto& [an, bn, v] : listed_constants(rs.group)) {
        const int a = rs.index_of(rs.parse(an)), b = rs.index_of(rs.parse(bn));
        if (a < 0 || b < 0 || sum_idx(a, b) < 0)
            throw Error(ErrorKind::Construction, "listed constant on a non-root pair: " + an + ", " + bn);
        auto& slot = N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (slot != 0 && slot != v) throw Error(ErrorKind::Construction, "conflicting listed constants for " + an + ", " + bn);
        slot = v;
        N[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -v;
    }
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b)
            if (a != b && sum_idx(a, b) >= 0 && N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0)
                throw Error(ErrorKind::Construction,
                            "listed constants omit " + rs.name(rs.root(a)) + ", " + rs.name(rs.root(b)));
    for (int a = 0; a < P; ++a)
        for (int b = 0; b < P; ++b)
            N[static_cast<std::size_t>(a + P)][static_cast<std::size_t>(b + P)] = -N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];

    // Mixed signs: N_{a,b}/(d,d) = N_{b,d}/(a,a) = N_{d,a}/(b,b) with d = -(a+b).
    for (int a = 0; a < R; ++a)
        for (int b = 0; b < R; ++b) {
            if ((a < P) == (b < P)) continue;
            const int c = sum_idx(a, b);
            if (c < 0) continue;
            const int d = rep.dual_coord(c);  // index of -(a+b)
            const RootVec ra = rs.root(a), rb = rs.root(b), rd = rs.root(d);
            std::int64_t num = 0, den = 1;
            if ((b < P) == (d < P)) {
                num = static_cast<std::int64_t>(N[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)]) * rs.inner(rd, rd);
                den = rs.inner(ra, ra);
            } else {
                num = static_cast<std::int64_t>(N[static_cast<std::size_t>(d)][static_cast<std::size_t>(a)]) * rs.inner(rd, rd);
                den = rs.inner(rb, rb);
            }
            if (num == 0 || num % den != 0)
                throw Error(ErrorKind::Construction, "cannot propagate constant to " + rs.name(ra) + ", " + rs.name(rb));
            N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(num / den);
        }
}

void fill_bracket(ChevalleyRep& rep) {
    const RootSystem& rs = rep.roots;
    const int P = rs.num_positive(), R = 2 * P, n = rs.rank;
    const auto D = static_cast<std::size_t>(rep.dim);
    rep.bracket.assign(D, std::vector<Vec64>(D, Vec64(D, 0)));
    for (int a = 0; a < R; ++a) {
        const RootVec ra = rs.root(a);
        for (int b = 0; b < R; ++b) {
            auto& out = rep.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (b == rep.dual_coord(a)) {
                // h_a = sum_k a_k (alpha_k, alpha_k)/(a, a) h_k
                const int aa = rs.inner(ra, ra);
                for (int k = 0; k < n; ++k) {
                    const int num = ra[static_cast<std::size_t>(k)] * rs.gram[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
                    NILORB_ASSERT(num % aa == 0, "coroot is not integral");
                    out[static_cast<std::size_t>(rep.cartan_basis(k))] = num / aa;
                }
                continue;
            }
            const int nab = rep.N[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (nab != 0) out[static_cast<std::size_t>(rs.index_of(add_roots(ra, rs.root(b))))] = nab;
        }
        for (int i = 0; i < n; ++i) {
            const int c = rs.cartan(i, ra);
            rep.bracket[static_cast<std::size_t>(rep.cartan_basis(i))][static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = c;
            rep.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(rep.cartan_basis(i))][static_cast<std::size_t>(a)] = -c;
        }
    }
}

void verify(const ChevalleyRep& rep) {
    const auto D = static_cast<std::size_t>(rep.dim);
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j)
            for (std::size_t k = 0; k < D; ++k)
                if (rep.bracket[i][j][k] != -rep.bracket[j][i][k])
                    throw Error(ErrorKind::Construction, "bracket not antisymmetric at " + std::to_string(i) + ", " + std::to_string(j));
    for (int i = 0; i < rep.dim; ++i)
        for (int j = i + 1; j < rep.dim; ++j)
            for (int k = j + 1; k < rep.dim; ++k) {
                const auto& bjk = rep.bracket[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
                const auto& bki = rep.bracket[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
                const auto& bij = rep.bracket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const Vec64 t1 = bracket_with(rep, i, bjk), t2 = bracket_with(rep, j, bki), t3 = bracket_with(rep, k, bij);
                for (std::size_t m = 0; m < D; ++m)
                    if (t1[m] + t2[m] + t3[m] != 0)
                        throw Error(ErrorKind::Construction, "Jacobi fails on basis triple (" + std::to_string(i) + ", " +
                                                                 std::to_string(j) + ", " + std::to_string(k) + ")");
            }
    for (const auto& [a, b, v] : listed_constants(rep.roots.group))
        if (rep.structure_constant(a, b) != v) throw Error(ErrorKind::Construction, "listed constant lost: " + a + ", " + b);
}

void fill_divided(ChevalleyRep& rep) {
    const int R = 2 * rep.roots.num_positive();
    const auto D = static_cast<std::size_t>(rep.dim);
    rep.divided.assign(static_cast<std::size_t>(R), {});
    for (int r = 0; r < R; ++r) {
        IntMat A(D * D, 0);
        for (std::size_t col = 0; col < D; ++col)
            for (std::size_t row = 0; row < D; ++row) A[row * D + col] = rep.bracket[static_cast<std::size_t>(r)][col][row];
        IntMat cur(D * D, 0);
        for (std::size_t i = 0; i < D; ++i) cur[i * D + i] = 1;
        auto& out = rep.divided[static_cast<std::size_t>(r)];
        out.push_back(cur);
        for (int i = 1;; ++i) {
            IntMat next(D * D, 0);
            bool nonzero = false;
            for (std::size_t a = 0; a < D; ++a)
                for (std::size_t k = 0; k < D; ++k) {
                    const std::int64_t x = A[a * D + k];
                    if (x == 0) continue;
                    for (std::size_t b = 0; b < D; ++b) next[a * D + b] += x * cur[k * D + b];
                }
            for (auto& x : next) {
                if (x % i != 0) throw Error(ErrorKind::Construction, "divided power is not integral");
                x /= i;
                nonzero = nonzero || x != 0;
            }
            if (!nonzero) break;
            NILORB_ASSERT(i <= 4, "ad e_r is not nilpotent of small order");
            out.push_back(next);
            cur = std::move(next);
        }
    }
}

}  // namespace

ChevalleyRep build_lie(Group g) {
    ChevalleyRep rep;
    rep.roots = RootSystem::make(g);
    rep.dim = 2 * rep.roots.num_positive() + rep.roots.rank;
    fill_constants(rep);
    fill_bracket(rep);
    verify(rep);
    fill_divided(rep);
    return rep;
}

// ---------------------------------------------------------------------------
// Group elements over F_q

FqMat adjoint_generator(const ChevalleyRep& rep, int root_idx, int t, const FiniteField& f) {
    const auto D = static_cast<std::size_t>(rep.dim);
    FqMat m(D * D, 0);
    const auto& pw = rep.divided.at(static_cast<std::size_t>(root_idx));
    for (std::size_t i = 0; i < pw.size(); ++i) {
        const int ti = f.pow(t, static_cast<int>(i));
        if (ti == 0) continue;
        for (std::size_t k = 0; k < D * D; ++k)
            if (pw[i][k] != 0) m[k] = f.add(m[k], f.mul(ti, f.from_int(pw[i][k])));
    }
    return m;
}

FqMat coadjoint_generator(const ChevalleyRep& rep, int root_idx, int t, const FiniteField& f) {
    const auto D = static_cast<std::size_t>(rep.dim);
    const FqMat ad = adjoint_generator(rep, root_idx, f.neg(t), f);
    FqMat c(D * D);
    for (std::size_t r = 0; r < D; ++r)
        for (std::size_t col = 0; col < D; ++col) c[r * D + col] = ad[col * D + r];
    return c;
}

FormulaReport check_coadjoint_formula(const ChevalleyRep& rep, const FiniteField& f) {
    FormulaReport rep_out;
    const RootSystem& rs = rep.roots;
    const int P = rs.num_positive();
    const auto D = static_cast<std::size_t>(rep.dim);
    for (int a = 0; a < P; ++a) {
        const RootVec ra = rs.root(a);
        for (int t = 0; t < f.q(); ++t) {
            const FqMat C = coadjoint_generator(rep, a, t, f);
            for (int b = 0; b < P; ++b) {
                std::vector<int> expect(D, 0);
                RootVec target = rs.root(b);  // i*alpha + beta
                for (int i = 0;; ++i) {
                    const int ti = rs.index_of(target);
                    if (ti < 0) break;
                    // M_{alpha, gamma, i} with gamma = -(i alpha + beta): prod_{j<i} N_{alpha, gamma + j alpha} / i!
                    RootVec g = target;
                    for (int& c : g) c = -c;
                    std::int64_t num = 1, fact = 1;
                    for (int j = 0; j < i; ++j) {
                        num *= rep.N[static_cast<std::size_t>(a)][static_cast<std::size_t>(rs.index_of(g))];
                        g = add_roots(g, ra);
                        fact *= j + 1;
                    }
                    NILORB_ASSERT(num % fact == 0, "M constant is not integral");
                    const int sign_t = f.mul(f.pow(f.neg(1), i), f.pow(t, i));
                    expect[static_cast<std::size_t>(rep.dual_coord(ti))] = f.mul(sign_t, f.from_int(num / fact));
                    target = add_roots(target, ra);
                }
                const auto col = static_cast<std::size_t>(rep.dual_coord(b));
                ++rep_out.checked;
                for (std::size_t row = 0; row < D; ++row)
                    if (C[row * D + col] != expect[row]) {
                        rep_out.mismatches.push_back("x_" + rs.name(ra) + "(" + std::to_string(t) + ") on e'_" + rs.name(rs.root(b)) +
                                                     " at coordinate " + std::to_string(row));
                        break;
                    }
            }
        }
    }
    return rep_out;
}

std::vector<std::string> check_additivity(const ChevalleyRep& rep, const FiniteField& f) {
    std::vector<std::string> bad;
    const auto D = static_cast<std::size_t>(rep.dim);
    const int R = 2 * rep.roots.num_positive();
    for (int r = 0; r < R; ++r) {
        std::vector<FqMat> ad;
        for (int t = 0; t < f.q(); ++t) ad.push_back(adjoint_generator(rep, r, t, f));
        for (int s = 0; s < f.q(); ++s)
            for (int t = 0; t < f.q(); ++t) {
                const FqMat& A = ad[static_cast<std::size_t>(s)];
                const FqMat& B = ad[static_cast<std::size_t>(t)];
                const FqMat& S = ad[static_cast<std::size_t>(f.add(s, t))];
                bool ok = true;
                for (std::size_t i = 0; i < D && ok; ++i)
                    for (std::size_t j = 0; j < D && ok; ++j) {
                        int acc = 0;
                        for (std::size_t k = 0; k < D; ++k) acc = f.add(acc, f.mul(A[i * D + k], B[k * D + j]));
                        ok = acc == S[i * D + j];
                    }
                if (!ok)
                    bad.push_back("x_" + rep.roots.name(rep.roots.root(r)) + ": s=" + std::to_string(s) + ", t=" + std::to_string(t));
            }
    }
    return bad;
}

}  // namespace nilorb::chev
