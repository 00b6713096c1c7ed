#pragma once

#include <string>
#include <vector>

#include "nilorb/chevalley.hpp"
#include "nilorb/orbits.hpp"

namespace nilorb::verify {

// Each suite returns human-readable failures; empty means every check held.
using Failures = std::vector<std::string>;

Failures partitions(int n_max);
Failures catalog(LieType type, int n);
Failures springer(LieType type, int n);
Failures pieces(LieType type, int n, int ms_limit = 6);
Failures oracle(LieType type, int n);

struct ExceptionalOptions {
    bool bfs = false;           // spot BFS of small table orbits
    bool census = false;        // full n* sweep (G2 only)
    std::uint64_t cap = 10'000'000;
};
Failures exceptional(chev::Group g, const ExceptionalOptions& opt);

}  // namespace nilorb::verify
