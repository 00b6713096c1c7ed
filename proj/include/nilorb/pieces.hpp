#pragma once

#include <string>
#include <vector>

#include "nilorb/orbits.hpp"
#include "nilorb/springer.hpp"

namespace nilorb {

/// (f_0, f_1, ..., f_N) with trailing zeros removed; f_{-a} = f_a is implied.
using UpsilonSeq = std::vector<int>;

int upsilon_dim(const UpsilonSeq& f);

UpsilonSeq upsilon_from_unipotent(const UnipotentClass& u);

struct RecursionStep {
    int N = 0;
    int fN = 0;
    char case_label = '?';  // which branch of the case table fired ('1'..'5')
    OrbitSymbol derived;
};

RecursionStep recursion_step_C(const OrbitSymbol& s);
RecursionStep recursion_step_B(const OrbitSymbol& s);

UpsilonSeq upsilon(const OrbitSymbol& s);

/// Pieces as lists of indices into enumerate(type, n).
using PiecePartition = std::vector<std::vector<std::size_t>>;

PiecePartition ms_pieces(LieType type, int n);
PiecePartition psi_fibers(LieType type, int n);
PiecePartition upsilon_classes(LieType type, int n);

struct PieceReport {
    LieType type = LieType::C;
    int n = 0;
    std::vector<OrbitSymbol> orbits;
    PiecePartition by_psi;
    PiecePartition by_ms;
    PiecePartition by_upsilon;
    bool ms_computed = true;
    bool agree = true;
    std::vector<std::string> witnesses;  // human-readable disagreements
};

/// ms_limit bounds the rank for the quadratic-cost MS-piece computation.
PieceReport piece_report(LieType type, int n, int ms_limit = 8);

/// Canonicalize: sort members, then sort blocks by first member.
PiecePartition canonical(PiecePartition p);

}  // namespace nilorb
