#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "nilorb/orbits.hpp"
#include "nilorb/pieces.hpp"

namespace nilorb::f2 {

// A vector in F_2^d, d <= 64; bit i is coordinate i.
using Vec = std::uint64_t;

inline int parity(Vec x) { return __builtin_parityll(x); }
inline Vec bit(int i) { return Vec{1} << i; }

// Square matrix; rows[i] bit j is entry (i, j).
struct Mat {
    int dim = 0;
    std::vector<Vec> rows;

    Mat() = default;
    explicit Mat(int d) : dim(d), rows(static_cast<std::size_t>(d), 0) {}
    static Mat identity(int d);

    bool get(int i, int j) const { return (rows[static_cast<std::size_t>(i)] >> j) & 1U; }
    void set(int i, int j, bool v);
    void toggle(int i, int j) { rows[static_cast<std::size_t>(i)] ^= bit(j); }

    Vec apply(Vec x) const;  // M x
    // Bilinear value x^T M y.
    int form(Vec x, Vec y) const { return parity(row_combo(x) & y); }
    // x^T M as a row vector, i.e. the functional y -> x^T M y.
    Vec row_combo(Vec x) const;

    Mat operator*(const Mat& o) const;
    Mat transpose() const;
    bool is_zero() const;
    int rank() const;
    bool operator==(const Mat&) const = default;
};

Mat inverse(const Mat& m);  // throws Domain if singular
Mat power(const Mat& m, int k);

// Q(x) = sum diag_i x_i + sum_{i<j} upper[i]_j x_i x_j over F_2.
struct QuadForm {
    int dim = 0;
    Vec diag = 0;
    std::vector<Vec> upper;

    QuadForm() = default;
    explicit QuadForm(int d) : dim(d), upper(static_cast<std::size_t>(d), 0) {}

    int eval(Vec x) const;
    Mat polar() const;
    bool is_zero() const;
    // Unique form with the given values on basis vectors and the given polar.
    static QuadForm from_values(Vec diag_values, const Mat& polar);
};

// Subspace of F_2^d, kept in echelon form keyed by leading bit.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient) {}
    static Subspace span(int ambient, const std::vector<Vec>& vs);
    static Subspace whole(int ambient);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    Vec reduce(Vec x) const;
    bool contains(Vec x) const { return reduce(x) == 0; }
    bool contains(const Subspace& o) const;
    // Returns true if x was new.
    bool add(Vec x);

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool operator==(const Subspace& o) const { return dim() == o.dim() && contains(o); }

private:
    int ambient_ = 0;
    std::vector<Vec> basis_;  // fully reduced, distinct leading bits
};

// Kernel of a linear map phi restricted to span(basis); phi must be linear there.
template <class F>
Subspace kernel_on(int ambient, const std::vector<Vec>& basis, F&& phi);

// Some x in span(basis) with phi(x) = target, or false.
template <class F>
bool solve_on(const std::vector<Vec>& basis, F&& phi, Vec target, Vec& out);

// {x in S : B(s, x) = 0 for all s in S'}.
Subspace perp(const Mat& form, const Subspace& of, const Subspace& within);

// Zero set of a quadratic function q on S; asserts that q's polar vanishes on S.
template <class Q, class P>
Subspace zero_set(const Subspace& s, Q&& q, P&& polar);

// Vectors c_i extending a basis of r to one of s (r must lie in s).
std::vector<Vec> complement_in(const Subspace& s, const Subspace& r);

// A vector space over F_2 with the form data attached to a nilpotent xi.
// Type C: ambient is the symplectic form, quad is alpha_xi, xi is its polar.
// Types B/D: ambient is the polar of quad = Q, xi is the alternating form beta_xi.
struct F2Space {
    LieType type = LieType::C;
    int dim = 0;
    Mat ambient;
    QuadForm quad;
    Mat xi;
};

// Restrict forms to span(basis), in the coordinates of that basis.
F2Space restrict_to(const F2Space& v, const std::vector<Vec>& basis);

// Standard ambient forms on F_2^dim.
F2Space standard_space(LieType type, int n);

OrbitSymbol invariants_sp(const F2Space& v);
OrbitSymbol invariants_so_even(const F2Space& v);  // label left as None
OrbitSymbol invariants_so_odd(const F2Space& v, int pivot_seed = 0);
OrbitSymbol invariants(const F2Space& v, int pivot_seed = 0);

// The (m; v_i, u_i, W) data attached to xi on an odd orthogonal space.
struct OddStructure {
    int m = 0;
    std::vector<Vec> v;  // v[0..m]
    std::vector<Vec> u;  // u[0..m-1]
    std::vector<Vec> w;  // basis of W
};
OddStructure odd_structure(const F2Space& v, int pivot_seed = 0);

// Tally of invariants over every form of the relevant kind.
// For D, symbols carry no I/II label. Rows "form_index,symbol" go to dump.
std::map<OrbitSymbol, long> classify_all(LieType type, int n, std::ostream* dump = nullptr);

F2Space representative_from_symbol(const OrbitSymbol& s);

struct Filtration {
    int N = 0;
    std::vector<Subspace> geq;  // geq[a + N] = V_{>=a}, a in [-N, N+1]
    UpsilonSeq dims;            // f_a for a >= 0
    const Subspace& at(int a) const;
};

Filtration canonical_filtration_full(const F2Space& v, int pivot_seed = 0);
UpsilonSeq canonical_filtration(const F2Space& v, int pivot_seed = 0);

}  // namespace nilorb::f2

#include "nilorb/f2_impl.hpp"
