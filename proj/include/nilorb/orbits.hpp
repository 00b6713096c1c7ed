#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/partitions.hpp"

namespace nilorb {

enum class LieType { B, C, D };
enum class DLabel { None, I, II };

char type_char(LieType t);
LieType parse_type(const std::string& s);

/// Orbit label in characteristic 2: (lambda, chi) for C and D,
/// (m; (lambda, chi)) for B. chi is stored on distinct parts only.
struct OrbitSymbol {
    LieType type = LieType::C;
    int n = 0;
    int m = 0;  // B only
    Partition lambda;
    std::map<int, int> chi;
    DLabel label = DLabel::None;  // D only

    int chi_at_part(int part) const;
    /// chi(lambda_i), 1-based, with missing parts giving 0.
    int chi_at_index(std::size_t i) const { return chi_at_part(lambda.at(i)); }

    std::string str() const;
    auto operator<=>(const OrbitSymbol&) const = default;
};

OrbitSymbol make_c(Partition lambda, std::map<int, int> chi);
OrbitSymbol make_b(int m, Partition lambda, std::map<int, int> chi);
OrbitSymbol make_d(Partition lambda, std::map<int, int> chi, DLabel label = DLabel::None);

bool validate(const OrbitSymbol& s);
bool validate(const OrbitSymbol& s, LieType type);

std::vector<OrbitSymbol> enumerate(LieType type, int n);

int centralizer_dim(const OrbitSymbol& s);
int springer_fiber_dim(const OrbitSymbol& s);

/// chi on all of N via the indecomposable-summand law.
int chi_extend(const OrbitSymbol& s, int k);

OrbitSymbol zero_symbol(LieType type, int n);
bool is_zero_symbol(const OrbitSymbol& s);

bool closure_leq(const OrbitSymbol& a, const OrbitSymbol& b);

/// Covering pairs (lower index, upper index) into enumerate(type, n).
std::vector<std::pair<std::size_t, std::size_t>> hasse(LieType type, int n);

OrbitSymbol induce_orbit(const OrbitSymbol& s, int k);

/// Rebuild the chi map on the distinct parts of lambda from a total function.
template <class F>
std::map<int, int> chi_from_function(const Partition& lambda, F&& f) {
    std::map<int, int> chi;
    for (int p : lambda.distinct()) chi[p] = f(p);
    return chi;
}

}  // namespace nilorb
