#include <optional>
#include <ostream>
#include <string>

#include "nilorb/f2.hpp"

namespace nilorb::f2 {

namespace {

bool nilpotent(const Mat& t) {
    Mat p = t;
    for (int k = 1; k < t.dim && !p.is_zero(); ++k) p = p * t;
    return p.is_zero();
}

struct JordanChi {
    Partition lambda;
    std::map<int, int> chi;  // on distinct parts
};

// Quadratic function q(T^l x) vanishes on span(basis)?
bool vanishes(const std::vector<Vec>& basis, const Mat& tl, const QuadForm& q, const Mat& qpolar) {
    std::vector<Vec> img;
    img.reserve(basis.size());
    for (Vec b : basis) img.push_back(tl.apply(b));
    for (std::size_t i = 0; i < img.size(); ++i) {
        if (q.eval(img[i])) return false;
        for (std::size_t j = i + 1; j < img.size(); ++j)
            if (qpolar.form(img[i], img[j])) return false;
    }
    return true;
}

// Jordan type of a nilpotent T and chi(k) = min{l : T^k v = 0 => q(T^l v) = 0}.
JordanChi jordan_chi(const Mat& t, const QuadForm& q) {
    const int d = t.dim;
    std::vector<Mat> pw{Mat::identity(d)};
    for (int k = 1; k <= d; ++k) pw.push_back(pw.back() * t);
    if (!pw.back().is_zero()) throw Error(ErrorKind::NotNilpotent, "T is not nilpotent");
    std::vector<int> rank;
    for (const auto& p : pw) rank.push_back(p.rank());
    std::vector<int> mult(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 1; k <= d; ++k) {
        const int at_least_k = rank[static_cast<std::size_t>(k - 1)] - rank[static_cast<std::size_t>(k)];
        const int at_least_k1 = k < d ? rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)] : 0;
        mult[static_cast<std::size_t>(k)] = at_least_k - at_least_k1;
    }
    JordanChi out;
    out.lambda = from_multiplicities(mult);
    const Mat qpolar = q.polar();
    const Subspace all = Subspace::whole(d);
    for (int part : out.lambda.distinct()) {
        const Mat& pk = pw[static_cast<std::size_t>(part)];
        const Subspace ker = kernel_on(d, all.basis(), [&](Vec x) { return pk.apply(x); });
        int l = 0;
        while (!vanishes(ker.basis(), pw[static_cast<std::size_t>(l)], q, qpolar)) ++l;
        out.chi[part] = l;
    }
    return out;
}

OrbitSymbol checked(OrbitSymbol s, const char* who) {
    if (!validate(s)) throw Error(ErrorKind::InternalConsistency, std::string(who) + " produced invalid " + s.str());
    return s;
}

// Builds the odd-orthogonal structure; on failure returns the reason.
std::optional<std::string> build_odd(const F2Space& sp, int seed, OddStructure& st) {
    const int d = sp.dim;
    const Mat& beta = sp.ambient;
    const Mat& xi = sp.xi;
    const QuadForm& q = sp.quad;
    const auto all = Subspace::whole(d).basis();
    const Subspace rad = kernel_on(d, all, [&](Vec x) { return beta.row_combo(x); });
    if (rad.dim() != 1 || !q.eval(rad.basis()[0]))
        throw Error(ErrorKind::Domain, "odd orthogonal space needs a 1-dim radical with Q nonzero");
    const Vec r = rad.basis()[0];
    const int n = (d - 1) / 2;

    // beta(x, .) = functional, normalized to Q(x) = 0.
    auto lift = [&](Vec functional, Vec& x) -> bool {
        if (parity(functional & r)) return false;
        if (!solve_on(all, [&](Vec y) { return beta.row_combo(y); }, functional, x)) return false;
        if (q.eval(x)) x ^= r;
        return true;
    };

    std::vector<Vec> chain{r};
    while (true) {
        const Vec fn = xi.row_combo(chain.back());
        if (!fn) break;
        if (static_cast<int>(chain.size()) > n) return "chain v_i does not terminate";
        Vec x = 0;
        if (!lift(fn, x)) return "beta_xi(v_i, .) is not of the form beta(x, .)";
        chain.push_back(x);
    }
    st.m = static_cast<int>(chain.size()) - 1;
    st.v.assign(chain.rbegin(), chain.rend());
    st.u.clear();
    st.w.clear();

    if (st.m == 0) {
        const int p = seed == 0 ? __builtin_ctzll(r) : 63 - __builtin_clzll(r);
        for (int i = 0; i < d; ++i)
            if (i != p) st.w.push_back(bit(i));
        return std::nullopt;
    }

    auto against_v = [&](Vec x) {
        Vec out = 0;
        for (int j = 0; j < st.m; ++j)
            if (beta.form(x, st.v[static_cast<std::size_t>(j)])) out |= bit(j);
        return out;
    };
    Vec u0 = 0;
    if (!solve_on(all, against_v, Vec{1}, u0)) return "no u_0 with beta(u_0, v_j) = delta_j0";
    if (seed != 0) {
        const Subspace k = kernel_on(d, all, against_v);
        for (Vec b : k.basis())
            if ((__builtin_popcountll(b) + seed) % 2 == 0) u0 ^= b;
    }
    if (q.eval(u0)) u0 ^= r;
    st.u.push_back(u0);
    for (int i = 1; i < st.m; ++i) {
        Vec x = 0;
        if (!lift(xi.row_combo(st.u.back()), x)) return "u_i chain breaks";
        st.u.push_back(x);
    }

    std::vector<Vec> functionals;
    for (Vec x : st.v) functionals.push_back(beta.row_combo(x));
    for (Vec x : st.u) functionals.push_back(beta.row_combo(x));
    functionals.push_back(xi.row_combo(st.u.back()));
    const Subspace w = kernel_on(d, all, [&](Vec x) {
        Vec out = 0;
        for (std::size_t i = 0; i < functionals.size(); ++i)
            if (parity(functionals[i] & x)) out |= bit(static_cast<int>(i));
        return out;
    });
    st.w = w.basis();
    Subspace total = w;
    for (Vec x : st.v) total.add(x);
    for (Vec x : st.u) total.add(x);
    if (total.dim() != d || w.dim() != d - 2 * st.m - 1) return "span{u_i, v_i} and W do not split V";
    return std::nullopt;
}

std::optional<OrbitSymbol> try_so_odd(const F2Space& sp, int seed) {
    OddStructure st;
    if (build_odd(sp, seed, st)) return std::nullopt;
    F2Space w = restrict_to(sp, st.w);
    w.type = LieType::D;
    const Mat t = inverse(w.ambient) * w.xi;
    if (!nilpotent(t)) return std::nullopt;
    const JordanChi jc = jordan_chi(t, w.quad);
    auto chi = chi_from_function(jc.lambda, [&](int p) { return std::max(p - st.m, jc.chi.at(p)); });
    return checked(make_b(st.m, jc.lambda, chi), "invariants_so_odd");
}

// Pairs (i, j), i < j, in lexicographic order.
std::vector<std::pair<int, int>> pairs_of(int d) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) out.emplace_back(i, j);
    return out;
}

Mat alternating_from_bits(int d, const std::vector<std::pair<int, int>>& pairs, std::uint64_t bits) {
    Mat m(d);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if ((bits >> k) & 1U) {
            m.toggle(pairs[k].first, pairs[k].second);
            m.toggle(pairs[k].second, pairs[k].first);
        }
    return m;
}

}  // namespace

F2Space standard_space(LieType type, int n) {
    F2Space sp;
    sp.type = type;
    const int off = type == LieType::B ? 1 : 0;
    sp.dim = 2 * n + off;
    sp.ambient = Mat(sp.dim);
    sp.xi = Mat(sp.dim);
    Mat hyp(sp.dim);
    for (int i = 0; i < n; ++i) {
        hyp.set(off + i, off + n + i, true);
        hyp.set(off + n + i, off + i, true);
    }
    if (type == LieType::C) {
        sp.ambient = hyp;
        sp.quad = QuadForm(sp.dim);
    } else {
        sp.ambient = hyp;
        sp.quad = QuadForm::from_values(type == LieType::B ? Vec{1} : Vec{0}, hyp);
    }
    return sp;
}

OrbitSymbol invariants_sp(const F2Space& v) {
    if (v.type != LieType::C) throw Error(ErrorKind::UnsupportedType, "invariants_sp: needs a symplectic space");
    const Mat t = inverse(v.ambient) * v.quad.polar();
    const JordanChi jc = jordan_chi(t, v.quad);
    return checked(make_c(jc.lambda, jc.chi), "invariants_sp");
}

OrbitSymbol invariants_so_even(const F2Space& v) {
    if (v.type != LieType::D) throw Error(ErrorKind::UnsupportedType, "invariants_so_even: needs an even orthogonal space");
    const Mat t = inverse(v.ambient) * v.xi;
    const JordanChi jc = jordan_chi(t, v.quad);
    OrbitSymbol s = make_d(jc.lambda, jc.chi);
    OrbitSymbol probe = s;
    probe.label = DLabel::I;
    if (!validate(s) && !validate(probe))
        throw Error(ErrorKind::InternalConsistency, "invariants_so_even produced invalid " + s.str());
    return s;
}

OddStructure odd_structure(const F2Space& v, int pivot_seed) {
    if (v.type != LieType::B) throw Error(ErrorKind::UnsupportedType, "odd_structure: needs an odd orthogonal space");
    OddStructure st;
    if (auto why = build_odd(v, pivot_seed, st)) throw Error(ErrorKind::NotNilpotent, "odd structure absent: " + *why);
    return st;
}

OrbitSymbol invariants_so_odd(const F2Space& v, int pivot_seed) {
    if (v.type != LieType::B) throw Error(ErrorKind::UnsupportedType, "invariants_so_odd: needs an odd orthogonal space");
    odd_structure(v, pivot_seed);  // surfaces the specific failure
    auto s = try_so_odd(v, pivot_seed);
    if (!s) throw Error(ErrorKind::NotNilpotent, "T on W is not nilpotent");
    return *s;
}

OrbitSymbol invariants(const F2Space& v, int pivot_seed) {
    switch (v.type) {
        case LieType::C: return invariants_sp(v);
        case LieType::B: return invariants_so_odd(v, pivot_seed);
        case LieType::D: return invariants_so_even(v);
    }
    return {};
}

std::map<OrbitSymbol, long> classify_all(LieType type, int n, std::ostream* dump) {
    F2Space sp = standard_space(type, n);
    const int d = sp.dim;
    const auto pairs = pairs_of(d);
    const Mat amb_inv = type == LieType::B ? Mat(d) : inverse(sp.ambient);
    const int nbits = static_cast<int>(pairs.size()) + (type == LieType::C ? d : 0);
    if (nbits > 40) throw Error(ErrorKind::Domain, "classify_all: too many forms");
    std::map<OrbitSymbol, long> tally;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << nbits); ++idx) {
        std::optional<OrbitSymbol> s;
        if (type == LieType::C) {
            const Mat polar = alternating_from_bits(d, pairs, idx >> d);
            if (!nilpotent(amb_inv * polar)) continue;
            sp.quad = QuadForm::from_values(idx & (bit(d) - 1), polar);
            sp.xi = polar;
            s = invariants_sp(sp);
        } else {
            sp.xi = alternating_from_bits(d, pairs, idx);
            if (type == LieType::D) {
                if (!nilpotent(amb_inv * sp.xi)) continue;
                s = invariants_so_even(sp);
            } else {
                s = try_so_odd(sp, 0);
                if (!s) continue;
            }
        }
        ++tally[*s];
        if (dump) *dump << idx << ',' << s->str() << '\n';
    }
    return tally;
}

namespace {

// Adds one indecomposable block of dimension 2s at the given offset:
// basis T^i v at offset + i, T^i w at offset + s + i.
void add_block(F2Space& sp, Vec& qdiag, int offset, int s, int l) {
    for (int i = 0; i < s; ++i) {
        const int vi = offset + i;
        const int wj = offset + s + (s - 1 - i);
        sp.ambient.set(vi, wj, true);
        sp.ambient.set(wj, vi, true);
        if (i + 1 <= s - 1) {
            const int wk = offset + s + (s - 2 - i);
            sp.xi.set(vi, wk, true);
            sp.xi.set(wk, vi, true);
        }
    }
    if (l >= 1) qdiag |= bit(offset + l - 1);
}

}  // namespace

F2Space representative_from_symbol(const OrbitSymbol& s) {
    F2Space sp;
    sp.type = s.type;
    const int skel = s.type == LieType::B ? 2 * s.m + 1 : 0;
    sp.dim = skel + s.lambda.size();
    if (sp.dim > 64) throw Error(ErrorKind::Domain, "representative_from_symbol: dimension exceeds 64");
    sp.ambient = Mat(sp.dim);
    sp.xi = Mat(sp.dim);
    Vec qdiag = 0;

    if (s.type == LieType::B) {
        // v_i at i, u_i at m + 1 + i
        const int m = s.m;
        for (int i = 0; i < m; ++i) {
            sp.ambient.set(i, m + 1 + i, true);
            sp.ambient.set(m + 1 + i, i, true);
        }
        for (int i = 1; i <= m; ++i) {
            sp.xi.set(i, m + i, true);
            sp.xi.set(m + i, i, true);
        }
        qdiag |= bit(m);
    }
    int offset = skel;
    for (std::size_t a = 2; a <= s.lambda.length(); a += 2) {
        const int part = s.lambda.at(a);
        add_block(sp, qdiag, offset, part, s.chi_at_part(part));
        offset += 2 * part;
    }
    sp.quad = QuadForm::from_values(qdiag, s.type == LieType::C ? sp.xi : sp.ambient);

    OrbitSymbol got = invariants(sp);
    OrbitSymbol want = s;
    if (s.type == LieType::D) want.label = DLabel::None;
    if (got != want)
        throw Error(ErrorKind::Construction,
                    "representative_from_symbol: built " + got.str() + " for " + want.str());
    return sp;
}

}  // namespace nilorb::f2
