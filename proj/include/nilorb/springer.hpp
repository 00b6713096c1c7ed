#pragma once

#include <vector>

#include "nilorb/orbits.hpp"
#include "nilorb/partitions.hpp"

namespace nilorb {

/// Unipotent class of the complex group: a partition of 2n+1 (B) or 2n (C).
struct UnipotentClass {
    LieType type = LieType::C;
    Partition parts;

    int rank() const { return type == LieType::B ? (parts.size() - 1) / 2 : parts.size() / 2; }
    auto operator<=>(const UnipotentClass&) const = default;
};

bool valid_unipotent(const UnipotentClass& u);

Bipartition gamma_star(const OrbitSymbol& s);
OrbitSymbol gamma_star_inv(const Bipartition& tau, LieType type, int n);

/// Image family of gamma_star for B and C.
Family image_family(LieType type);
/// Complex Springer image family X^1 for B and C.
Family hull_family(LieType type);

Bipartition phi(const Bipartition& tau, LieType type);
UnipotentClass psi_star(const OrbitSymbol& s);
UnipotentClass unip_from_symbol(const Bipartition& tau, LieType type);
std::vector<UnipotentClass> enumerate_unipotent(LieType type, int n);

}  // namespace nilorb
