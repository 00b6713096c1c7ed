#include "nilorb/pieces.hpp"

#include <algorithm>
#include <map>

#include "nilorb/errors.hpp"

namespace nilorb {

int upsilon_dim(const UpsilonSeq& f) {
    int d = 0;
    for (std::size_t a = 0; a < f.size(); ++a) d += a == 0 ? f[a] : 2 * f[a];
    return d;
}

namespace {

void trim(UpsilonSeq& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Smallest k with chi(k) = f, as an offset j = e - k.
int find_j(const OrbitSymbol& s, int e, int f) {
    for (int k = 0; k <= e; ++k)
        if (chi_extend(s, k) == f) return e - k;
    throw Error(ErrorKind::InternalConsistency, "no j with chi(e-j) = f for " + s.str());
}

OrbitSymbol rebuild(const OrbitSymbol& s, int m_new, std::vector<int> mult, const auto& chi_new) {
    for (int x : mult)
        if (x < 0) throw Error(ErrorKind::InternalConsistency, "recursion made a negative multiplicity from " + s.str());
    Partition lam = from_multiplicities(mult);
    auto chi = chi_from_function(lam, chi_new);
    OrbitSymbol out = s.type == LieType::B ? make_b(m_new, lam, chi) : make_c(lam, chi);
    if (!validate(out))
        throw Error(ErrorKind::InternalConsistency, "recursion derived an invalid symbol " + out.str() + " from " + s.str());
    return out;
}

void move_pair(std::vector<int>& mult, int from, int to) {
    mult[static_cast<std::size_t>(from)] -= 2;
    if (to > 0) mult[static_cast<std::size_t>(to)] += 2;
}

void fold_top(std::vector<int>& mult, int e) {
    const int top = mult[static_cast<std::size_t>(e)];
    mult[static_cast<std::size_t>(e)] = 0;
    if (e - 2 > 0) mult[static_cast<std::size_t>(e - 2)] += top;
}

}  // namespace

UpsilonSeq upsilon_from_unipotent(const UnipotentClass& u) {
    const int top = u.parts.largest();
    UpsilonSeq f(static_cast<std::size_t>(top), 0);
    const auto mult = multiplicities(u.parts);
    for (int a = 0; a < top; ++a)
        for (int k = a + 1; k <= top; k += 2) f[static_cast<std::size_t>(a)] += mult[static_cast<std::size_t>(k)];
    trim(f);
    return f;
}

RecursionStep recursion_step_C(const OrbitSymbol& s) {
    if (s.type != LieType::C) throw Error(ErrorKind::UnsupportedType, "recursion_step_C: type C only");
    if (is_zero_symbol(s)) throw Error(ErrorKind::BaseCase, "recursion_step_C: zero orbit");
    const int e = s.lambda.largest();
    const int f = chi_extend(s, e);
    const auto chi = [&](int k) { return chi_extend(s, k); };
    std::vector<int> mult = multiplicities(s.lambda);
    const int j = find_j(s, e, f);

    RecursionStep r;
    r.N = std::max(e - 1, 2 * f - 1);
    if (e < 2 * f) {
        r.case_label = '3';
        r.fN = 1;
        move_pair(mult, e - j, e - j - 1);
        r.derived = rebuild(s, 0, mult, [&](int p) { return p >= e - j ? f - 1 : chi(p); });
    } else if (e == 2 * f + 1 || (e == 2 * f && chi(e - 1) == f - 1)) {
        r.case_label = '1';
        r.fN = mult[static_cast<std::size_t>(e)];
        const int at_e2 = chi(e - 2) <= f - 1 ? f - 1 : f;
        fold_top(mult, e);
        r.derived = rebuild(s, 0, mult, [&](int p) { return p == e - 2 ? at_e2 : chi(p); });
    } else if (e == 2 * f && chi(e - 1) == f) {
        r.case_label = '2';
        r.fN = mult[static_cast<std::size_t>(e)] + 1;
        fold_top(mult, e);
        move_pair(mult, e - j, e - j - 1);
        r.derived = rebuild(s, 0, mult, [&](int p) { return p >= e - j ? f - 1 : chi(p); });
    } else {
        throw Error(ErrorKind::InternalConsistency, "recursion_step_C: no case for " + s.str());
    }
    NILORB_ASSERT(r.derived.n == s.n - r.fN, "recursion_step_C dimension bookkeeping");
    return r;
}

RecursionStep recursion_step_B(const OrbitSymbol& s) {
    if (s.type != LieType::B) throw Error(ErrorKind::UnsupportedType, "recursion_step_B: type B only");
    if (is_zero_symbol(s)) throw Error(ErrorKind::BaseCase, "recursion_step_B: zero orbit");
    const int m = s.m;
    const int e = s.lambda.largest();
    const int f = chi_extend(s, e);
    const auto chi = [&](int k) { return chi_extend(s, k); };
    const bool rho = e >= 1 && chi(e - 1) == f;
    std::vector<int> mult = multiplicities(s.lambda);
    const int me = mult[static_cast<std::size_t>(e)];

    RecursionStep r;
    r.N = std::max(2 * m, m + f - 1);
    if (m >= f) {
        r.case_label = '2';
        r.fN = 1;
        r.derived = rebuild(s, m - 1, mult, [&](int p) { return std::max(p - m + 1, chi(p)); });
    } else if (m == 0 || (e - f == m && m < f - 1 && !rho)) {
        r.case_label = '1';
        r.fN = me;
        fold_top(mult, e);
        r.derived = rebuild(s, m, mult, chi);
    } else if (e - f < m && m < f) {
        r.case_label = '3';
        r.fN = 2;
        const int j = find_j(s, e, f);
        move_pair(mult, e - j, e - j - 1);
        const int at_e = m >= e - f + 2 ? f - 1 : f;
        r.derived = rebuild(s, m - 1, mult, [&](int p) {
            if (p == e) return at_e;
            return p >= e - j ? f - 1 : chi(p);
        });
    } else if (m == e - f && m > 0 && m < f && rho) {
        r.case_label = '4';
        r.fN = me + 2;
        const int j = find_j(s, e, f);
        fold_top(mult, e);
        move_pair(mult, e - j, e - j - 1);
        r.derived = rebuild(s, m - 1, mult, [&](int p) {
            if (p == e - 1) return f;
            return p >= e - j ? f - 1 : chi(p);
        });
    } else if (m == e - f && m > 0 && m == f - 1 && !rho) {
        r.case_label = '5';
        r.fN = me + 1;
        fold_top(mult, e);
        r.derived = rebuild(s, m - 1, mult, [&](int p) {
            if (p == e - 1) return f;
            if (p == e - 2) return f - 1;
            return chi(p);
        });
    } else {
        throw Error(ErrorKind::InternalConsistency, "recursion_step_B: no case for " + s.str());
    }
    NILORB_ASSERT(r.derived.n == s.n - r.fN, "recursion_step_B dimension bookkeeping");
    return r;
}

UpsilonSeq upsilon(const OrbitSymbol& s) {
    if (s.type == LieType::D) throw Error(ErrorKind::UnsupportedType, "upsilon: types B and C only");
    const int dim = s.type == LieType::B ? 2 * s.n + 1 : 2 * s.n;
    if (is_zero_symbol(s)) {
        UpsilonSeq f{dim};
        trim(f);
        return f;
    }
    const RecursionStep r = s.type == LieType::C ? recursion_step_C(s) : recursion_step_B(s);
    UpsilonSeq f = upsilon(r.derived);
    NILORB_ASSERT(static_cast<int>(f.size()) <= r.N, "inner filtration reaches the outer layer for " + s.str());
    f.resize(static_cast<std::size_t>(r.N) + 1, 0);
    f[static_cast<std::size_t>(r.N)] = r.fN;
    NILORB_ASSERT(upsilon_dim(f) == dim, "upsilon dimension mismatch for " + s.str());
    return f;
}

PiecePartition canonical(PiecePartition p) {
    for (auto& block : p) std::sort(block.begin(), block.end());
    std::sort(p.begin(), p.end());
    return p;
}

namespace {

template <class Key, class F>
PiecePartition group_by(const std::vector<OrbitSymbol>& orbits, F&& key) {
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < orbits.size(); ++i) groups[key(orbits[i])].push_back(i);
    PiecePartition out;
    for (auto& [k, v] : groups) out.push_back(std::move(v));
    return canonical(std::move(out));
}

}  // namespace

PiecePartition psi_fibers(LieType type, int n) {
    return group_by<Partition>(enumerate(type, n), [](const OrbitSymbol& s) { return psi_star(s).parts; });
}

PiecePartition upsilon_classes(LieType type, int n) {
    return group_by<UpsilonSeq>(enumerate(type, n), [](const OrbitSymbol& s) { return upsilon(s); });
}

PiecePartition ms_pieces(LieType type, int n) {
    const auto orbits = enumerate(type, n);
    const std::size_t k = orbits.size();
    const Family x1 = hull_family(type);
    std::vector<std::vector<char>> leq(k, std::vector<char>(k));
    std::vector<char> special(k);
    for (std::size_t a = 0; a < k; ++a) {
        special[a] = family_member(gamma_star(orbits[a]), x1);
        for (std::size_t b = 0; b < k; ++b) leq[a][b] = closure_leq(orbits[a], orbits[b]);
    }
    PiecePartition out;
    for (std::size_t c = 0; c < k; ++c) {
        if (!special[c]) continue;
        std::vector<std::size_t> block;
        for (std::size_t x = 0; x < k; ++x) {
            if (!leq[x][c]) continue;
            bool below_smaller = false;
            for (std::size_t y = 0; y < k && !below_smaller; ++y)
                if (y != c && special[y] && leq[y][c] && leq[x][y]) below_smaller = true;
            if (!below_smaller) block.push_back(x);
        }
        out.push_back(std::move(block));
    }
    return canonical(std::move(out));
}

PieceReport piece_report(LieType type, int n, int ms_limit) {
    PieceReport rep;
    rep.type = type;
    rep.n = n;
    rep.orbits = enumerate(type, n);
    rep.by_psi = psi_fibers(type, n);
    rep.by_upsilon = upsilon_classes(type, n);
    rep.ms_computed = n <= ms_limit;
    if (rep.ms_computed) rep.by_ms = ms_pieces(type, n);

    auto describe = [&](const PiecePartition& p) {
        std::string s = "{";
        for (const auto& b : p) {
            s += "[";
            for (std::size_t i = 0; i < b.size(); ++i) s += (i ? " " : "") + rep.orbits[b[i]].str();
            s += "]";
        }
        return s + "}";
    };
    if (rep.by_psi != rep.by_upsilon) {
        rep.agree = false;
        rep.witnesses.push_back("psi fibers " + describe(rep.by_psi) + " vs upsilon classes " + describe(rep.by_upsilon));
    }
    if (rep.ms_computed && rep.by_ms != rep.by_psi) {
        rep.agree = false;
        rep.witnesses.push_back("ms pieces " + describe(rep.by_ms) + " vs psi fibers " + describe(rep.by_psi));
    }
    return rep;
}

}  // namespace nilorb
