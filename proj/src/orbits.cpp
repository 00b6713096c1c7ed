#include "nilorb/orbits.hpp"

#include <algorithm>

#include "nilorb/errors.hpp"
#include "nilorb/springer.hpp"

namespace nilorb {

char type_char(LieType t) {
    switch (t) {
        case LieType::B: return 'B';
        case LieType::C: return 'C';
        case LieType::D: return 'D';
    }
    return '?';
}

LieType parse_type(const std::string& s) {
    if (s == "B" || s == "b") return LieType::B;
    if (s == "C" || s == "c") return LieType::C;
    if (s == "D" || s == "d") return LieType::D;
    throw Error(ErrorKind::Parse, "unknown type '" + s + "'");
}

int OrbitSymbol::chi_at_part(int part) const {
    if (part == 0) return 0;
    auto it = chi.find(part);
    if (it == chi.end()) throw Error(ErrorKind::InternalConsistency, "chi queried at a non-part");
    return it->second;
}

std::string OrbitSymbol::str() const {
    std::string s;
    s += type_char(type);
    s += std::to_string(n) + ":";
    if (type == LieType::B) s += std::to_string(m) + ";";
    s += lambda.str() + "{";
    bool first = true;
    for (auto it = chi.rbegin(); it != chi.rend(); ++it) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(it->first) + ":" + std::to_string(it->second);
    }
    s += "}";
    if (label == DLabel::I) s += "I";
    if (label == DLabel::II) s += "II";
    return s;
}

OrbitSymbol make_c(Partition lambda, std::map<int, int> chi) {
    OrbitSymbol s;
    s.type = LieType::C;
    s.n = lambda.size() / 2;
    s.lambda = std::move(lambda);
    s.chi = std::move(chi);
    return s;
}

OrbitSymbol make_b(int m, Partition lambda, std::map<int, int> chi) {
    OrbitSymbol s;
    s.type = LieType::B;
    s.m = m;
    s.n = m + lambda.size() / 2;
    s.lambda = std::move(lambda);
    s.chi = std::move(chi);
    return s;
}

OrbitSymbol make_d(Partition lambda, std::map<int, int> chi, DLabel label) {
    OrbitSymbol s;
    s.type = LieType::D;
    s.n = lambda.size() / 2;
    s.lambda = std::move(lambda);
    s.chi = std::move(chi);
    s.label = label;
    return s;
}

namespace {

bool d_degenerate(const OrbitSymbol& s) {
    if (s.lambda.empty()) return false;
    for (const auto& [part, c] : s.chi)
        if (2 * c != part) return false;
    return true;
}

}  // namespace

bool validate(const OrbitSymbol& s) {
    const auto& lam = s.lambda;
    const int dim_lambda = s.type == LieType::B ? 2 * (s.n - s.m) : 2 * s.n;
    if (s.n < 0 || lam.size() != dim_lambda) return false;
    if (s.type == LieType::B) {
        if (s.m < 0 || s.m > s.n) return false;
    } else if (s.m != 0) {
        return false;
    }
    // chi lives exactly on the distinct parts
    const auto parts = lam.distinct();
    if (s.chi.size() != parts.size()) return false;
    for (int p : parts) {
        if (!s.chi.count(p)) return false;
        if (multiplicity(lam, p) % 2 != 0) return false;
        const int c = s.chi.at(p);
        if (c > p) return false;
        if (s.type == LieType::C ? (2 * c < p - 1) : (2 * c < p)) return false;
        if (s.type == LieType::B && s.m < p - c) return false;
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const int a = parts[i - 1], b = parts[i];
        if (s.chi.at(a) < s.chi.at(b)) return false;
        if (a - s.chi.at(a) < b - s.chi.at(b)) return false;
    }
    if (s.type == LieType::D) {
        if ((s.label != DLabel::None) != d_degenerate(s)) return false;
    } else if (s.label != DLabel::None) {
        return false;
    }
    return true;
}

bool validate(const OrbitSymbol& s, LieType type) { return s.type == type && validate(s); }

namespace {

// Every partition of 2k with even multiplicities, reverse-lex.
std::vector<Partition> doubled_partitions(int k) {
    std::vector<Partition> out;
    for (const auto& p : partitions_of(k)) {
        std::vector<int> parts;
        for (int x : p.parts()) {
            parts.push_back(x);
            parts.push_back(x);
        }
        out.emplace_back(parts);
    }
    return out;
}

void chi_choices(const OrbitSymbol& base, const std::vector<int>& parts, std::size_t idx,
                 OrbitSymbol& cur, std::vector<OrbitSymbol>& out) {
    if (idx == parts.size()) {
        OrbitSymbol leaf = cur;
        if (leaf.type == LieType::D && d_degenerate(leaf)) leaf.label = DLabel::I;
        if (validate(leaf)) {
            leaf.label = DLabel::None;
            out.push_back(std::move(leaf));
        }
        return;
    }
    const int p = parts[idx];
    const int lo = base.type == LieType::C ? (p - 1 + 1) / 2 : (p + 1) / 2;
    for (int c = lo; c <= p; ++c) {
        // prune: monotonicity with the previous part
        if (idx > 0) {
            const int q = parts[idx - 1];
            if (cur.chi.at(q) < c || q - cur.chi.at(q) < p - c) continue;
        }
        if (base.type == LieType::B && base.m < p - c) continue;
        cur.chi[p] = c;
        chi_choices(base, parts, idx + 1, cur, out);
        cur.chi.erase(p);
    }
}

}  // namespace

std::vector<OrbitSymbol> enumerate(LieType type, int n) {
    std::vector<OrbitSymbol> out;
    if (n < 0) return out;
    auto run = [&](int m) {
        for (const auto& lam : doubled_partitions(type == LieType::B ? n - m : n)) {
            OrbitSymbol base;
            base.type = type;
            base.n = n;
            base.m = m;
            base.lambda = lam;
            std::vector<OrbitSymbol> found;
            OrbitSymbol cur = base;
            chi_choices(base, lam.distinct(), 0, cur, found);
            for (auto& s : found) {
                if (type == LieType::D) {
                    s.label = DLabel::I;
                    if (validate(s)) {
                        out.push_back(s);
                        s.label = DLabel::II;
                        out.push_back(s);
                        continue;
                    }
                    s.label = DLabel::None;
                }
                out.push_back(std::move(s));
            }
        }
    };
    if (type == LieType::B)
        for (int m = n; m >= 0; --m) run(m);
    else
        run(0);
    return out;
}

int centralizer_dim(const OrbitSymbol& s) {
    const auto& lam = s.lambda;
    int d = 0;
    switch (s.type) {
        case LieType::C:
            for (std::size_t i = 1; i <= lam.length(); ++i)
                d += static_cast<int>(i) * lam.at(i) - s.chi_at_index(i);
            return d;
        case LieType::B:
            d = s.m;
            for (std::size_t i = 1; i <= lam.length(); ++i)
                d += static_cast<int>(i + 1) * lam.at(i) - s.chi_at_index(i);
            return d;
        case LieType::D: break;
    }
    throw Error(ErrorKind::UnsupportedType, "centralizer_dim: no formula for type D");
}

int springer_fiber_dim(const OrbitSymbol& s) {
    const int diff = centralizer_dim(s) - s.n;
    if (diff < 0 || diff % 2 != 0)
        throw Error(ErrorKind::InternalConsistency, "springer_fiber_dim: odd or negative for " + s.str());
    return diff / 2;
}

int chi_extend(const OrbitSymbol& s, int k) {
    int best = 0;
    for (const auto& [part, l] : s.chi) best = std::max(best, std::min(k - part + l, l));
    if (s.type == LieType::B) best = std::max(best, k - s.m);
    return best;
}

OrbitSymbol zero_symbol(LieType type, int n) {
    Partition ones(std::vector<int>(static_cast<std::size_t>(2 * n), 1));
    std::map<int, int> chi;
    if (n > 0) chi[1] = type == LieType::C ? 0 : 1;
    switch (type) {
        case LieType::B: return make_b(0, ones, chi);
        case LieType::C: return make_c(ones, chi);
        case LieType::D: return make_d(ones, chi);
    }
    return {};
}

bool is_zero_symbol(const OrbitSymbol& s) {
    if (s.type == LieType::B && s.m != 0) return false;
    if (s.lambda.largest() > 1) return false;
    if (s.type == LieType::C && !s.lambda.empty() && s.chi.at(1) != 0) return false;
    return true;
}

bool closure_leq(const OrbitSymbol& a, const OrbitSymbol& b) {
    if (a.type != b.type) throw Error(ErrorKind::RankMismatch, "closure_leq: types differ");
    if (a.n != b.n) throw Error(ErrorKind::RankMismatch, "closure_leq: ranks differ");
    if (a == b) return true;
    if (a.type == LieType::D) {
        if (a.lambda == b.lambda && a.chi == b.chi) return false;  // I/II twins
        return bipartition_leq(normalize_d(gamma_star(a)), normalize_d(gamma_star(b)));
    }
    return bipartition_leq(gamma_star(a), gamma_star(b));
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(LieType type, int n) {
    const auto syms = enumerate(type, n);
    const std::size_t k = syms.size();
    std::vector<std::vector<char>> lt(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            lt[i][j] = (i != j && closure_leq(syms[i], syms[j])) ? 1 : 0;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (!lt[i][j]) continue;
            bool covered = true;
            for (std::size_t c = 0; c < k && covered; ++c)
                if (lt[i][c] && lt[c][j]) covered = false;
            if (covered) out.emplace_back(i, j);
        }
    return out;
}

OrbitSymbol induce_orbit(const OrbitSymbol& s, int k) {
    if (s.type == LieType::D) throw Error(ErrorKind::UnsupportedType, "induce_orbit: types B and C only");
    const Bipartition tau = j_induct(gamma_star(s), k);
    try {
        return gamma_star_inv(tau, s.type, s.n + k);
    } catch (const Error& e) {
        throw Error(ErrorKind::InternalConsistency, std::string("induce_orbit: ") + e.what());
    }
}

}  // namespace nilorb
