#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "nilorb/qpoly.hpp"

namespace nilorb::chev {

enum class Group { G2p3, F4p2 };

Group parse_group(const std::string& s);
std::string group_name(Group g);

// GF(q) for small q = p^k; elements are 0..q-1 with the prime field as 0..p-1.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int add(int a, int b) const { return add_[static_cast<std::size_t>(a * q_ + b)]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a * q_ + b)]; }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int pow(int a, int k) const;
    int from_int(std::int64_t n) const;

private:
    int q_, p_, k_;
    std::vector<int> add_, mul_, neg_;
};

using RootVec = std::vector<int>;  // coefficients over the simple roots

struct RootSystem {
    Group group = Group::G2p3;
    int rank = 0;
    std::vector<std::string> simple_names;  // single letters
    std::vector<std::vector<int>> gram;      // scaled inner products of simple roots
    std::vector<RootVec> positive;           // by height, then lexicographic

    int num_positive() const { return static_cast<int>(positive.size()); }
    // Root indices: [0, P) positive, [P, 2P) their negatives.
    RootVec root(int idx) const;
    int index_of(const RootVec& v) const;  // -1 if not a root
    int inner(const RootVec& a, const RootVec& b) const;
    // <beta, alpha_i^vee>
    int cartan(int simple, const RootVec& beta) const;

    // "p2q4r2s" style names; coefficient digits precede their letter.
    RootVec parse(const std::string& name) const;
    std::string name(const RootVec& v) const;

    static RootSystem make(Group g);
};

using IntMat = std::vector<std::int64_t>;  // row-major dim x dim

struct ChevalleyRep {
    RootSystem roots;
    int dim = 0;
    // N(a, b) on root indices, zero when a + b is not a root.
    std::vector<std::vector<int>> N;
    // bracket[i][j] = [b_i, b_j] in coordinates; basis: positive roots, negative roots, h_1..h_rank.
    std::vector<std::vector<std::vector<std::int64_t>>> bracket;
    // divided[r][i] = (ad e_r)^i / i! over Z, for every root index r.
    std::vector<std::vector<IntMat>> divided;

    int root_basis(int root_idx) const { return root_idx; }
    int cartan_basis(int i) const { return 2 * roots.num_positive() + i; }
    // Coordinate index carrying e'_gamma (the dual of e_{-gamma}).
    int dual_coord(int root_idx) const;
    int structure_constant(const std::string& a, const std::string& b) const;
};

// Builds and verifies (antisymmetry, Jacobi, listed constants); throws Construction.
ChevalleyRep build_lie(Group g);

// The listed constants (a, b, N_{a,b}) in root-name form.
std::vector<std::tuple<std::string, std::string, int>> listed_constants(Group g);

using FqMat = std::vector<int>;  // row-major dim x dim over the field

// Ad(x_root(t)) = sum_i t^i (ad e_root)^i / i!, reduced into the field.
FqMat adjoint_generator(const ChevalleyRep& rep, int root_idx, int t, const FiniteField& f);
// Coadjoint action of x_root(t): transpose of Ad(x_root(-t)).
FqMat coadjoint_generator(const ChevalleyRep& rep, int root_idx, int t, const FiniteField& f);

struct FormulaReport {
    long checked = 0;
    std::vector<std::string> mismatches;
};
// Compares coadjoint columns for e'_beta against the closed formula, all positive pairs, all t.
FormulaReport check_coadjoint_formula(const ChevalleyRep& rep, const FiniteField& f);

// Ad(x_r(s)) Ad(x_r(t)) == Ad(x_r(s + t)) for every root r and s, t in the field; returns failures.
std::vector<std::string> check_additivity(const ChevalleyRep& rep, const FiniteField& f);

struct Term {
    RootVec root;
    std::string coeff;  // "1", "-1", "eta", "-zeta", "-varpi", ...
};

struct RationalClassRow {
    std::string orbit;
    std::string label;
    std::vector<Term> terms;
    std::string centralizer_text;
    QPoly centralizer;
};

std::vector<RationalClassRow> table(Group g);
const std::string& tables_json();

struct MassReport {
    bool ok = false;
    QPoly sum;
    QPoly expected;
    std::vector<std::string> problems;
};
MassReport mass_check(const std::vector<RationalClassRow>& rows, const QPoly& group_order, int num_positive);
MassReport mass_check(Group g);

// eta, zeta, varpi by search; throws ParameterUnavailable.
int field_parameter(const std::string& symbol, const FiniteField& f);
std::vector<int> materialize_rep(const ChevalleyRep& rep, const RationalClassRow& row, const FiniteField& f);

// Open-addressing map from packed states to small values.
class PackedMap {
public:
    explicit PackedMap(std::uint64_t expected = 1024);
    // Returns false if already present.
    bool insert(std::uint64_t key, std::uint32_t value = 0);
    bool contains(std::uint64_t key) const;
    std::uint32_t get(std::uint64_t key) const;  // key must be present
    std::uint64_t size() const { return size_; }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> values_;
    std::uint64_t size_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t slot(std::uint64_t key) const;
    void grow();
};

// Generators x_{+-alpha_i}(c), c in F_q^x, acting on packed coadjoint states.
class CoadjointAction {
public:
    CoadjointAction(const ChevalleyRep& rep, const FiniteField& f);

    int dim() const { return dim_; }
    std::size_t num_generators() const { return gens_.size(); }
    std::uint64_t pack(const std::vector<int>& v) const;
    std::vector<int> unpack(std::uint64_t s) const;
    std::uint64_t apply(std::size_t gen, std::uint64_t s) const;

private:
    struct Entry {
        int row, col, val;
    };
    struct Gen {
        std::vector<Entry> off_diagonal;
        std::vector<std::uint64_t> bit_delta;  // q = 2 fast path: per column
        std::uint64_t active = 0;
    };
    const FiniteField* field_;
    int dim_;
    std::vector<Gen> gens_;
    std::vector<std::uint64_t> place_;  // q^k
};

struct BfsResult {
    std::uint64_t size = 0;
    bool capped = false;
};

// Orbit through start; inserts into visited (tagged with tag) when given.
BfsResult orbit_bfs(const CoadjointAction& act, std::uint64_t start, std::uint64_t cap, PackedMap* visited = nullptr,
                    std::uint32_t tag = 0);
BfsResult orbit_bfs(const ChevalleyRep& rep, const std::vector<int>& start, const FiniteField& f, std::uint64_t cap);

struct Census {
    std::vector<std::uint64_t> sizes;          // by discovery order
    std::vector<std::vector<int>> seeds;       // a point of each orbit in n*
    PackedMap membership{1};                   // state -> orbit id
    std::map<std::uint64_t, int> histogram() const;  // size -> multiplicity
};

// Sweeps every vector supported on positive-root duals.
Census nilpotent_sweep(const ChevalleyRep& rep, const FiniteField& f);
Census nilpotent_sweep_g2(int q = 3);

}  // namespace nilorb::chev
