#include "nilorb/verify.hpp"

#include <algorithm>
#include <set>

#include "nilorb/errors.hpp"
#include "nilorb/f2.hpp"
#include "nilorb/pieces.hpp"
#include "nilorb/springer.hpp"

namespace nilorb::verify {

namespace {

void expect(Failures& out, bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
}

int positive_roots(LieType t, int n) { return t == LieType::D ? n * (n - 1) : n * n; }

Family x1_family(LieType t) { return hull_family(t); }

}  // namespace

Failures partitions(int n_max) {
    Failures out;
    for (int n = 0; n <= n_max; ++n) {
        const auto bp = bipartitions_of(n);
        for (const auto& a : bp) {
            expect(out, bipartition_leq(a, a), "leq not reflexive at " + a.str());
            if (family_member(a, Family::XC1)) expect(out, family_member(a, Family::XC2), "XC1 not inside XC2 at " + a.str());
            if (family_member(a, Family::XB1)) expect(out, family_member(a, Family::XB2), "XB1 not inside XB2 at " + a.str());
            for (const auto& b : bp) {
                if (!bipartition_leq(a, b)) continue;
                if (bipartition_leq(b, a)) expect(out, a == b, "leq not antisymmetric at " + a.str() + ", " + b.str());
                for (const auto& c : bp)
                    if (bipartition_leq(b, c)) expect(out, bipartition_leq(a, c), "leq not transitive at " + a.str());
            }
        }
        if (n > 6) continue;
        for (int k = 1; k <= 4; ++k) {
            std::set<Bipartition> images;
            for (const auto& a : bp) {
                const Bipartition ja = j_induct(a, k);
                expect(out, ja.total() == n + k, "j_induct total wrong at " + a.str());
                images.insert(ja);
                for (const auto& b : bp)
                    expect(out, bipartition_leq(a, b) == bipartition_leq(ja, j_induct(b, k)),
                           "j_" + std::to_string(k) + " not an order embedding at " + a.str() + ", " + b.str());
            }
            expect(out, images.size() == bp.size(), "j_" + std::to_string(k) + " not injective at n=" + std::to_string(n));
        }
    }
    return out;
}

Failures catalog(LieType type, int n) {
    Failures out;
    const auto orbits = enumerate(type, n);
    for (const auto& s : orbits) {
        expect(out, validate(s, type), "enumerated symbol fails validation: " + s.str());
        if (type != LieType::D) {
            const int d = centralizer_dim(s) - n;
            expect(out, d >= 0 && d % 2 == 0, "centralizer_dim - n odd or negative at " + s.str());
        }
    }
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (std::size_t j = i + 1; j < orbits.size(); ++j) expect(out, orbits[i] != orbits[j], "duplicate symbol " + orbits[i].str());

    const std::size_t k = orbits.size();
    std::vector<std::vector<char>> leq(k, std::vector<char>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) leq[i][j] = closure_leq(orbits[i], orbits[j]);
    for (std::size_t i = 0; i < k; ++i) {
        expect(out, leq[i][i], "closure not reflexive at " + orbits[i].str());
        for (std::size_t j = 0; j < k; ++j) {
            if (i != j && leq[i][j] && leq[j][i]) out.push_back("closure not antisymmetric: " + orbits[i].str() + ", " + orbits[j].str());
            if (!leq[i][j]) continue;
            for (std::size_t l = 0; l < k; ++l)
                if (leq[j][l] && !leq[i][l]) out.push_back("closure not transitive at " + orbits[i].str());
        }
    }
    const OrbitSymbol zero = zero_symbol(type, n);
    const auto zit = std::find(orbits.begin(), orbits.end(), zero);
    expect(out, zit != orbits.end(), "zero symbol missing from enumeration");
    if (zit != orbits.end()) {
        const auto z = static_cast<std::size_t>(zit - orbits.begin());
        for (std::size_t i = 0; i < k; ++i) {
            expect(out, leq[z][i], "zero orbit not below " + orbits[i].str());
            if (i != z) {
                bool below_all = true;
                for (std::size_t j = 0; j < k; ++j) below_all = below_all && leq[i][j];
                expect(out, !below_all, "second minimum " + orbits[i].str());
            }
        }
    }
    for (const auto& [lo, hi] : hasse(type, n)) {
        expect(out, leq[lo][hi] && lo != hi, "hasse edge not a relation");
        for (std::size_t m = 0; m < k; ++m)
            if (m != lo && m != hi && leq[lo][m] && leq[m][hi]) out.push_back("hasse edge not a cover: " + orbits[lo].str());
        if (type != LieType::D)
            expect(out, centralizer_dim(orbits[lo]) > centralizer_dim(orbits[hi]),
                   "centralizer_dim does not drop along " + orbits[lo].str() + " < " + orbits[hi].str());
    }
    if (type != LieType::D && n <= 4)
        for (int kk = 1; kk <= 3; ++kk) {
            std::vector<OrbitSymbol> ind;
            for (const auto& s : orbits) {
                ind.push_back(induce_orbit(s, kk));
                expect(out, gamma_star(ind.back()) == j_induct(gamma_star(s), kk), "induction square fails at " + s.str());
            }
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    expect(out, leq[i][j] == static_cast<char>(closure_leq(ind[i], ind[j])),
                           "induction not an order embedding at " + orbits[i].str() + ", " + orbits[j].str());
        }
    return out;
}

Failures springer(LieType type, int n) {
    Failures out;
    if (type == LieType::D) {
        std::set<Bipartition> img;
        const auto orbits = enumerate(type, n);
        for (const auto& s : orbits) img.insert(normalize_d(gamma_star(s)));
        // Degenerate pairs share an image, so only non-degenerate symbols must be separated.
        std::size_t labelled = 0;
        for (const auto& s : orbits) labelled += s.label == DLabel::II;
        expect(out, img.size() == orbits.size() - labelled, "gamma* not injective on D symbols up to the I/II split");
        return out;
    }
    const auto orbits = enumerate(type, n);
    std::set<Bipartition> img;
    for (const auto& s : orbits) {
        const Bipartition t = gamma_star(s);
        expect(out, family_member(t, image_family(type)), "gamma* leaves its image family at " + s.str());
        expect(out, gamma_star_inv(t, type, n) == s, "gamma* inverse fails at " + s.str());
        img.insert(t);
        const UnipotentClass u = psi_star(s);
        expect(out, valid_unipotent(u) && u.rank() == n, "psi* invalid at " + s.str());
        expect(out, unip_from_symbol(phi(t, type), type) == u, "compatibility square fails at " + s.str());
    }
    expect(out, img.size() == orbits.size(), "gamma* not injective");
    std::vector<Bipartition> x2, x1;
    for (const auto& b : bipartitions_of(n)) {
        if (family_member(b, image_family(type))) x2.push_back(b);
        if (family_member(b, x1_family(type))) x1.push_back(b);
    }
    expect(out, x2.size() == img.size(), "gamma* image is not all of X*2");
    for (const auto& t : x2) {
        const Bipartition p = phi(t, type);
        expect(out, family_member(p, x1_family(type)), "phi leaves X1 at " + t.str());
        expect(out, phi(p, type) == p, "phi not idempotent at " + t.str());
        expect(out, bipartition_leq(t, p), "phi not increasing at " + t.str());
        if (n <= 6)
            for (const auto& h : x1)
                if (bipartition_leq(t, h)) expect(out, bipartition_leq(p, h), "phi not the least hull at " + t.str());
    }
    std::set<UnipotentClass> us;
    for (const auto& t : x1) {
        us.insert(unip_from_symbol(t, type));
    }
    const auto all = enumerate_unipotent(type, n);
    expect(out, us.size() == x1.size() && us == std::set<UnipotentClass>(all.begin(), all.end()),
           "unip_from_symbol is not a bijection onto unipotent classes");
    return out;
}

Failures pieces(LieType type, int n, int ms_limit) {
    Failures out;
    if (type == LieType::D) return {"pieces are defined for types B and C only"};
    const int dimv = type == LieType::B ? 2 * n + 1 : 2 * n;
    for (const auto& s : enumerate(type, n)) {
        const UpsilonSeq f = upsilon(s);
        expect(out, f == upsilon_from_unipotent(psi_star(s)), "upsilon disagrees with the unipotent formula at " + s.str());
        expect(out, upsilon_dim(f) == dimv, "upsilon does not sum to dim V at " + s.str());
        if (!is_zero_symbol(s)) {
            const RecursionStep st = type == LieType::C ? recursion_step_C(s) : recursion_step_B(s);
            expect(out, st.N + 1 == psi_star(s).parts.largest(), "N + 1 differs from the top unipotent part at " + s.str());
        }
    }
    const PieceReport r = piece_report(type, n, ms_limit);
    expect(out, r.agree, "piece partitions disagree for " + std::string(1, type_char(type)) + std::to_string(n));
    for (const auto& w : r.witnesses) out.push_back(w);
    if (r.ms_computed) {
        // gamma*(piece) = Phi^{-1}(tilde tau) within the image of gamma*.
        for (const auto& block : r.by_ms) {
            const Bipartition top = phi(gamma_star(r.orbits[block.front()]), type);
            std::set<std::size_t> fiber, members(block.begin(), block.end());
            for (std::size_t i = 0; i < r.orbits.size(); ++i)
                if (phi(gamma_star(r.orbits[i]), type) == top) fiber.insert(i);
            expect(out, fiber == members, "MS piece is not a Phi fiber near " + r.orbits[block.front()].str());
        }
    }
    return out;
}

Failures oracle(LieType type, int n) {
    Failures out;
    const auto counts = f2::classify_all(type, n);
    std::set<OrbitSymbol> expect_keys;
    for (OrbitSymbol s : enumerate(type, n)) {
        s.label = DLabel::None;
        expect_keys.insert(s);
    }
    std::set<OrbitSymbol> got;
    long total = 0;
    for (const auto& [s, c] : counts) {
        got.insert(s);
        total += c;
    }
    expect(out, got == expect_keys, "oracle orbit set differs from the enumeration");
    expect(out, total == (1L << (2 * positive_roots(type, n))), "nilpotent count is " + std::to_string(total) + ", not q^{2N}");
    for (const auto& s0 : enumerate(type, n)) {
        if (type == LieType::D && s0.label == DLabel::II) continue;
        try {
            const f2::F2Space v = f2::representative_from_symbol(s0);
            OrbitSymbol back = f2::invariants(v);
            OrbitSymbol want = s0;
            if (type == LieType::D) want.label = back.label = DLabel::None;
            expect(out, back == want, "representative does not round-trip at " + s0.str());
            if (type == LieType::D) continue;
            const auto f = f2::canonical_filtration_full(v, 0);
            expect(out, f.dims == upsilon(s0), "filtration differs from upsilon at " + s0.str());
            if (type == LieType::B) {
                const auto g = f2::canonical_filtration_full(v, 1);
                expect(out, g.N == f.N && g.geq == f.geq, "B filtration depends on the pivot order at " + s0.str());
            }
        } catch (const Error& e) {
            out.push_back(s0.str() + ": " + e.what());
        }
    }
    return out;
}

Failures exceptional(chev::Group g, const ExceptionalOptions& opt) {
    using namespace chev;
    Failures out;
    ChevalleyRep rep;
    try {
        rep = build_lie(g);
    } catch (const Error& e) {
        return {std::string("construction: ") + e.what()};
    }
    for (int q : {2, 3}) {
        const FiniteField f(q);
        for (const auto& m : check_coadjoint_formula(rep, f).mismatches) out.push_back("formula q=" + std::to_string(q) + ": " + m);
        for (const auto& m : check_additivity(rep, f)) out.push_back("additivity q=" + std::to_string(q) + ": " + m);
    }
    const MassReport mr = mass_check(g);
    if (!mr.ok)
        for (const auto& p : mr.problems) out.push_back("mass: " + p);
    const auto rows = table(g);
    QPoly order;
    for (const auto& row : rows)
        if (row.terms.empty()) order = row.centralizer;
    const int q = g == Group::G2p3 ? 3 : 2;
    const FiniteField f(q);
    if (opt.bfs) {
        const CoadjointAction act(rep, f);
        for (const auto& row : rows) {
            const Rational expected = order.eval(q) / row.centralizer.eval(q);
            if (expected > Rational(static_cast<std::int64_t>(opt.cap))) continue;
            std::vector<int> v;
            try {
                v = materialize_rep(rep, row, f);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::ParameterUnavailable) continue;
                throw;
            }
            const BfsResult r = orbit_bfs(act, act.pack(v), opt.cap);
            // Table parameters presume generic q; at q = 3 distinct G2(a1) labels collapse.
            if (g == Group::G2p3 && row.orbit == "G2(a1)") continue;
            expect(out, !r.capped && Rational(static_cast<std::int64_t>(r.size)) == expected,
                   row.label + ": orbit size " + std::to_string(r.size) + ", expected " + std::to_string(expected.numerator()));
        }
    }
    if (opt.census && g != Group::G2p3) out.push_back("census: only G2 is within budget");
    if (opt.census && g == Group::G2p3) {
        const Census c = nilpotent_sweep(rep, f);
        std::multiset<std::uint64_t> want, got(c.sizes.begin(), c.sizes.end());
        for (const auto& row : rows) want.insert(static_cast<std::uint64_t>((order.eval(q) / row.centralizer.eval(q)).numerator()));
        expect(out, got == want, "G2 census sizes differ from the table");
    }
    return out;
}

}  // namespace nilorb::verify
