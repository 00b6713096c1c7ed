#include <doctest.h>

#include "nilorb/chevalley.hpp"
#include "nilorb/errors.hpp"

using namespace nilorb;
using namespace nilorb::chev;

namespace {
const ChevalleyRep& g2() {
    static const ChevalleyRep r = build_lie(Group::G2p3);
    return r;
}
const ChevalleyRep& f4() {
    static const ChevalleyRep r = build_lie(Group::F4p2);
    return r;
}
}  // namespace

TEST_CASE("finite fields") {
    for (int q : {2, 3, 4, 8, 9}) {
        const FiniteField f(q);
        for (int a = 1; a < q; ++a) {
            int inv = 0;
            for (int b = 1; b < q; ++b)
                if (f.mul(a, b) == 1) ++inv;
            CHECK(inv == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.pow(a, q - 1) == 1);
        }
    }
    CHECK(FiniteField(4).p() == 2);
    CHECK(FiniteField(3).from_int(-1) == 2);
    CHECK_THROWS_AS(FiniteField(6), Error);
}

TEST_CASE("root systems") {
    const RootSystem g = RootSystem::make(Group::G2p3);
    CHECK(g.num_positive() == 6);
    CHECK(g.name(g.positive.back()) == "3a2b");
    const RootSystem f = RootSystem::make(Group::F4p2);
    CHECK(f.num_positive() == 24);
    CHECK(f.parse("p3q4r2s") == RootVec{1, 3, 4, 2});
    CHECK(f.positive.back() == f.parse("2p3q4r2s"));
    CHECK(f.index_of(f.parse("-q2r")) == f.index_of(f.parse("q2r")) + 24);
    CHECK(f.index_of({1, 0, 0, 1}) == -1);
    CHECK_THROWS_AS(f.parse("px"), Error);
    // Reflection closure: s_i(beta) is a root for every root beta.
    for (const RootSystem* rs : {&g, &f})
        for (int idx = 0; idx < 2 * rs->num_positive(); ++idx)
            for (int i = 0; i < rs->rank; ++i) {
                RootVec r = rs->root(idx);
                r[static_cast<std::size_t>(i)] -= rs->cartan(i, r);
                CHECK(rs->index_of(r) >= 0);
            }
}

TEST_CASE("structure constants") {
    CHECK(g2().dim == 14);
    CHECK(g2().structure_constant("a", "b") == 1);
    CHECK(g2().structure_constant("a", "ab") == 2);
    CHECK(g2().structure_constant("b", "a") == -1);
    CHECK(f4().dim == 52);
    CHECK(f4().structure_constant("r", "pqr") == -2);
    CHECK(f4().structure_constant("-r", "-pqr") == 2);
    for (Group gr : {Group::G2p3, Group::F4p2}) {
        const ChevalleyRep& rep = gr == Group::G2p3 ? g2() : f4();
        for (const auto& [a, b, v] : listed_constants(gr)) CHECK(rep.structure_constant(a, b) == v);
    }
}

TEST_CASE("cartan action on root vectors") {
    for (const ChevalleyRep* rep : {&g2(), &f4()}) {
        const RootSystem& rs = rep->roots;
        for (int i = 0; i < rs.rank; ++i) {
            RootVec e(static_cast<std::size_t>(rs.rank), 0);
            e[static_cast<std::size_t>(i)] = 1;
            const int a = rs.index_of(e);
            const auto& v = rep->bracket[static_cast<std::size_t>(rep->cartan_basis(i))][static_cast<std::size_t>(a)];
            for (int k = 0; k < rep->dim; ++k) CHECK(v[static_cast<std::size_t>(k)] == (k == a ? 2 : 0));
        }
    }
}

TEST_CASE("coadjoint generators") {
    const FiniteField f(3);
    const FqMat id = coadjoint_generator(g2(), 0, 0, f);
    for (int i = 0; i < g2().dim; ++i)
        for (int j = 0; j < g2().dim; ++j) CHECK(id[static_cast<std::size_t>(i * g2().dim + j)] == (i == j ? 1 : 0));
    // x_a(1) on e'_b picks up -N_{a,-a-b} at e'_{a+b}.
    const RootSystem& rs = g2().roots;
    const int a = rs.index_of(rs.parse("a")), b = rs.index_of(rs.parse("b")), ab = rs.index_of(rs.parse("ab"));
    const FqMat x = coadjoint_generator(g2(), a, 1, f);
    const int n = g2().N[static_cast<std::size_t>(a)][static_cast<std::size_t>(rs.index_of(rs.parse("-ab")))];
    CHECK(x[static_cast<std::size_t>(g2().dual_coord(ab) * g2().dim + g2().dual_coord(b))] == f.from_int(-n));
}

TEST_CASE("coadjoint formula and additivity") {
    for (int q : {2, 3, 4}) {
        const FiniteField f(q);
        for (const ChevalleyRep* rep : {&g2(), &f4()}) {
            const FormulaReport r = check_coadjoint_formula(*rep, f);
            CHECK(r.checked == static_cast<long>(rep->roots.num_positive()) * rep->roots.num_positive() * q);
            CHECK(r.mismatches.empty());
            if (q <= 3) CHECK(check_additivity(*rep, f).empty());
        }
    }
    // In characteristic 2, x(1) x(1) = 1.
    const FiniteField f2(2);
    const FqMat m = adjoint_generator(f4(), 0, 1, f2);
    const auto d = static_cast<std::size_t>(f4().dim);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            int acc = 0;
            for (std::size_t k = 0; k < d; ++k) acc ^= m[i * d + k] & m[k * d + j];
            CHECK(acc == (i == j ? 1 : 0));
        }
}

TEST_CASE("q-polynomials") {
    const QPoly p = QPoly::parse("2*q^21*(q^2-1)*(q^3+1)*(q^4-1)");
    CHECK(p.degree() == 30);
    CHECK(p.eval(1) == Rational(0));
    CHECK(QPoly::parse("q^2 - 1") == QPoly::q() * QPoly::q() - QPoly(1));
    QPoly rem;
    CHECK(QPoly::parse("q^3-q").divmod(QPoly::parse("q-1"), rem) == QPoly::parse("q^2+q"));
    CHECK(rem.is_zero());
    QPoly::parse("q^2+1").divmod(QPoly::parse("q+1"), rem);
    CHECK(rem == QPoly(2));
    CHECK(QPoly::parse("-(q-1)^2").str() == "-q^2 + 2*q - 1");
    CHECK_THROWS_AS(QPoly::parse("q^"), Error);
    CHECK_THROWS_AS(QPoly::parse("q)"), Error);
}

TEST_CASE("tables") {
    const auto g = table(Group::G2p3);
    CHECK(g.size() == 7);
    CHECK(g[1].label == "xi_2,1");
    CHECK(g[1].centralizer == QPoly::parse("6*q^4"));
    const auto f = table(Group::F4p2);
    CHECK(f.size() == 26);
    bool found = false;
    for (const auto& row : f)
        if (row.label == "xi_17") {
            found = true;
            CHECK(row.centralizer == QPoly::parse("q^24*(q^2-1)*(q^4-1)*(q^6-1)"));
        }
    CHECK(found);
    for (const auto& row : f)
        for (const auto& t : row.terms) CHECK(RootSystem::make(Group::F4p2).index_of(t.root) >= 0);
}

TEST_CASE("mass identities") {
    const MassReport g = mass_check(Group::G2p3);
    CHECK(g.ok);
    CHECK(g.sum == QPoly::monomial(1, 12));
    const MassReport f = mass_check(Group::F4p2);
    CHECK(f.ok);
    CHECK(f.sum == QPoly::monomial(1, 48));
    // A table holding only the zero orbit sums to 1.
    const auto rows = table(Group::G2p3);
    const MassReport z = mass_check({rows.back()}, rows.back().centralizer, 0);
    CHECK(z.sum == QPoly(1));
    CHECK(z.ok);
    RationalClassRow bad = rows.front();
    bad.centralizer = QPoly::parse("q^2+1");
    CHECK_FALSE(mass_check({bad}, rows.back().centralizer, 6).problems.empty());
}

TEST_CASE("field parameters") {
    CHECK(field_parameter("zeta", FiniteField(3)) == 2);
    CHECK(field_parameter("eta", FiniteField(2)) == 1);
    CHECK(field_parameter("varpi", FiniteField(2)) == 1);
    try {
        field_parameter("varpi", FiniteField(3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParameterUnavailable);
    }
    const auto rows = table(Group::G2p3);
    const FiniteField f(3);
    CHECK_THROWS_AS(materialize_rep(g2(), rows[2], f), Error);
    const auto v = materialize_rep(g2(), rows[3], f);
    CHECK(v == materialize_rep(g2(), rows[1], f));
}

TEST_CASE("packed map") {
    PackedMap m(4);
    for (std::uint64_t k = 0; k < 1000; ++k) CHECK(m.insert(k * 7919, static_cast<std::uint32_t>(k)));
    CHECK_FALSE(m.insert(7919));
    CHECK(m.size() == 1000);
    CHECK(m.get(7919 * 5) == 5);
    CHECK_FALSE(m.contains(3));
}

TEST_CASE("orbit BFS") {
    const FiniteField f3(3);
    const auto rows = table(Group::G2p3);
    CHECK(orbit_bfs(g2(), materialize_rep(g2(), rows[0], f3), f3, 1'000'000).size == 471744);
    CHECK(orbit_bfs(g2(), std::vector<int>(14, 0), f3, 10).size == 1);
    const BfsResult capped = orbit_bfs(g2(), materialize_rep(g2(), rows[0], f3), f3, 1000);
    CHECK(capped.capped);
    const FiniteField f2(2);
    for (const auto& row : table(Group::F4p2))
        if (row.label == "xi_17") CHECK(orbit_bfs(f4(), materialize_rep(f4(), row, f2), f2, 1'000'000).size == 69615);
}

TEST_CASE("G2 census over F_3") {
    const Census c = nilpotent_sweep_g2(3);
    const std::map<std::uint64_t, int> want{{471744, 1}, {8736, 1}, {17472, 1}, {26208, 1}, {6552, 1}, {728, 1}, {1, 1}};
    CHECK(c.histogram() == want);
    std::uint64_t total = 0;
    for (auto s : c.sizes) total += s;
    CHECK(total == 531441);
    CHECK_THROWS_AS(nilpotent_sweep_g2(2), Error);
}
