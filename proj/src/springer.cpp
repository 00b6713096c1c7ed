#include "nilorb/springer.hpp"

#include <algorithm>
#include <limits>

#include "nilorb/errors.hpp"

namespace nilorb {

bool valid_unipotent(const UnipotentClass& u) {
    if (u.type == LieType::D) return false;
    const int total = u.parts.size();
    if (u.type == LieType::B ? (total % 2 != 1) : (total % 2 != 0)) return false;
    for (int p : u.parts.distinct()) {
        const bool constrained = u.type == LieType::C ? (p % 2 == 1) : (p % 2 == 0);
        if (constrained && multiplicity(u.parts, p) % 2 != 0) return false;
    }
    return true;
}

Family image_family(LieType type) {
    if (type == LieType::B) return Family::XB2;
    if (type == LieType::C) return Family::XC2;
    throw Error(ErrorKind::UnsupportedType, "no closed-form image family for type D");
}

Family hull_family(LieType type) {
    if (type == LieType::B) return Family::XB1;
    if (type == LieType::C) return Family::XC1;
    throw Error(ErrorKind::UnsupportedType, "no hull family for type D");
}

Bipartition gamma_star(const OrbitSymbol& s) {
    std::vector<int> mu, nu;
    const std::size_t pairs = s.lambda.length() / 2;
    if (s.type == LieType::B) mu.push_back(s.m);
    for (std::size_t i = 1; i <= pairs; ++i) {
        const int part = s.lambda.at(2 * i - 1);
        const int c = s.chi_at_part(part);
        if (s.type == LieType::B) {
            mu.push_back(part - c);
            nu.push_back(c);
        } else {
            mu.push_back(c);
            nu.push_back(part - c);
        }
    }
    return {Partition(mu), Partition(nu)};
}

OrbitSymbol gamma_star_inv(const Bipartition& tau, LieType type, int n) {
    if (tau.total() != n) throw Error(ErrorKind::NotInImage, "gamma_star_inv: total differs from rank");
    const bool b = type == LieType::B;
    const int m = b ? tau.mu.at(1) : 0;
    const std::size_t len =
        b ? std::max(tau.mu.length() > 0 ? tau.mu.length() - 1 : 0, tau.nu.length())
          : std::max(tau.mu.length(), tau.nu.length());
    std::vector<int> parts;
    std::map<int, int> chi;
    for (std::size_t i = 1; i <= len; ++i) {
        const int c = b ? tau.nu.at(i) : tau.mu.at(i);
        const int part = b ? tau.mu.at(i + 1) + tau.nu.at(i) : tau.mu.at(i) + tau.nu.at(i);
        if (part <= 0 || (!parts.empty() && part > parts.back()))
            throw Error(ErrorKind::NotInImage, "gamma_star_inv: " + tau.str() + " is not an image");
        auto [it, fresh] = chi.emplace(part, c);
        if (!fresh && it->second != c)
            throw Error(ErrorKind::NotInImage, "gamma_star_inv: inconsistent chi for " + tau.str());
        parts.push_back(part);
        parts.push_back(part);
    }
    OrbitSymbol s;
    switch (type) {
        case LieType::B: s = make_b(m, Partition(parts), chi); break;
        case LieType::C: s = make_c(Partition(parts), chi); break;
        case LieType::D: {
            s = make_d(Partition(parts), chi);
            if (!validate(s)) s.label = DLabel::I;  // degenerate pair: label I by convention
            break;
        }
    }
    if (!validate(s, type))
        throw Error(ErrorKind::NotInImage, "gamma_star_inv: " + tau.str() + " is not an image");
    return s;
}

Bipartition phi(const Bipartition& tau, LieType type) {
    if (!family_member(tau, image_family(type)))
        throw Error(ErrorKind::Domain, "phi: " + tau.str() + " lies outside the image family");
    const std::size_t len = std::max(tau.mu.length(), tau.nu.length());
    std::vector<int> mu(len + 1, 0), nu(len + 1, 0);
    for (std::size_t i = 1; i <= len + 1; ++i) {
        mu[i - 1] = tau.mu.at(i);
        nu[i - 1] = tau.nu.at(i);
    }
    if (type == LieType::B) {
        for (std::size_t i = 1; i <= len; ++i) {
            const int a = tau.mu.at(i), c = tau.nu.at(i);
            if (c > a + 2) {
                mu[i - 1] = (a + c - 1) / 2;
                nu[i - 1] = (a + c + 2) / 2;
            }
        }
    } else {
        for (std::size_t i = 1; i <= len; ++i) {
            const int a = tau.mu.at(i + 1), c = tau.nu.at(i);
            if (c < a - 1) {
                mu[i] = (a + c + 1) / 2;
                nu[i - 1] = (a + c) / 2;
            }
        }
    }
    try {
        return {Partition(mu), Partition(nu)};
    } catch (const Error&) {
        throw Error(ErrorKind::InternalConsistency, "phi produced a non-partition from " + tau.str());
    }
}

namespace {

UnipotentClass finish(LieType type, std::vector<int> lt, int expected_total, const std::string& ctx) {
    for (std::size_t i = 1; i < lt.size(); ++i)
        if (lt[i] > lt[i - 1])
            throw Error(ErrorKind::InternalConsistency, ctx + ": entries not weakly decreasing");
    UnipotentClass u{type, Partition(std::move(lt))};
    if (u.parts.size() != expected_total) throw Error(ErrorKind::InternalConsistency, ctx + ": wrong size");
    if (!valid_unipotent(u)) throw Error(ErrorKind::InternalConsistency, ctx + ": parity constraint violated");
    return u;
}

}  // namespace

UnipotentClass psi_star(const OrbitSymbol& s) {
    if (s.type == LieType::D) throw Error(ErrorKind::UnsupportedType, "psi_star: types B and C only");
    const auto lam = [&](std::size_t i) { return s.lambda.at(i); };
    const auto ch = [&](std::size_t i) { return s.chi_at_index(i); };
    const std::size_t len = s.lambda.length();
    std::vector<int> lt;

    if (s.type == LieType::C) {
        for (std::size_t i = 1; i <= len; ++i) {
            int v = lam(i);
            if (i == 1) {
                if (2 * ch(1) > lam(1)) v = 2 * ch(1);
            } else {
                const std::size_t e = (i % 2 == 0) ? i : i - 1;  // the even index 2j of this pair
                const int d = ch(e) - lam(e) + ch(e + 1);
                const int merged = lam(e) - ch(e) + ch(e + 1);
                if (i % 2 == 0) {
                    if (2 * ch(i) > lam(i) && ch(i) > ch(i + 1)) v = d >= 1 ? merged : 2 * (lam(i) - ch(i));
                } else {
                    if (2 * ch(i) > lam(i) && lam(i) - ch(i) < lam(e) - ch(e)) v = d >= 1 ? merged : 2 * ch(i);
                }
            }
            lt.push_back(v);
        }
        return finish(LieType::C, lt, 2 * s.n, "psi_star(" + s.str() + ")");
    }

    const int m = s.m;
    const int c1 = ch(1);
    lt.push_back(c1 >= m + 2 ? m + c1 : 2 * m + 1);
    if (c1 >= m + 2)
        lt.push_back(m + c1);
    else if ((lam(1) + 1) / 2 < c1 && c1 < m + 2)
        lt.push_back(2 * c1 - 1);
    else
        lt.push_back(lam(1));
    for (std::size_t i = 1; 2 * i <= len; ++i) {
        const std::size_t a = 2 * i, b = 2 * i + 1;
        const int d = ch(a) - lam(a) + ch(b);
        const int merged = lam(a) - ch(a) + ch(b);
        int odd = lam(a), even = lam(b);
        if (2 * ch(a) > lam(a) && ch(a) > ch(b)) odd = d >= 2 ? merged : 2 * (lam(a) - ch(a)) + 1;
        if (2 * ch(b) > lam(b) && lam(b) - ch(b) < lam(a) - ch(a)) even = d >= 2 ? merged : 2 * ch(b) - 1;
        lt.push_back(odd);
        lt.push_back(even);
    }
    return finish(LieType::B, lt, 2 * s.n + 1, "psi_star(" + s.str() + ")");
}

UnipotentClass unip_from_symbol(const Bipartition& tau, LieType type) {
    if (!family_member(tau, hull_family(type)))
        throw Error(ErrorKind::Domain, "unip_from_symbol: " + tau.str() + " lies outside X1");
    constexpr int inf = std::numeric_limits<int>::max() / 4;
    const std::size_t len = std::max(tau.mu.length(), tau.nu.length()) + 2;
    const auto mu = [&](std::size_t i) { return tau.mu.at(i); };
    const auto nu = [&](std::size_t i) { return i == 0 ? inf : tau.nu.at(i); };
    std::vector<int> lt;
    const std::string ctx = "unip_from_symbol(" + tau.str() + ")";
    auto none = [&]() -> int { throw Error(ErrorKind::InternalConsistency, ctx + ": no case applies"); };
    for (std::size_t i = 1; i <= len; ++i) {
        const int a = mu(i), c = nu(i), prev = nu(i - 1), next = mu(i + 1);
        int odd, even;
        if (type == LieType::B) {
            odd = a <= c - 2 ? a + c : (c - 2 < a && a < prev) ? 2 * a + 1 : a == prev ? 2 * a : none();
            even = c >= a + 2 ? a + c : (next < c && c < a + 2) ? 2 * c - 1 : c == next ? 2 * c : none();
        } else {
            odd = a >= prev + 1 ? a + prev : (c <= a && a <= prev) ? 2 * a : a == c - 1 ? 2 * a + 1 : none();
            even = c <= next - 1 ? next + c : (next <= c && c <= a) ? 2 * c : c == a + 1 ? 2 * c - 1 : none();
        }
        lt.push_back(odd);
        lt.push_back(even);
    }
    return finish(type, lt, type == LieType::B ? 2 * tau.total() + 1 : 2 * tau.total(), ctx);
}

std::vector<UnipotentClass> enumerate_unipotent(LieType type, int n) {
    std::vector<UnipotentClass> out;
    if (type == LieType::D) throw Error(ErrorKind::UnsupportedType, "enumerate_unipotent: types B and C only");
    for (auto& p : partitions_of(type == LieType::B ? 2 * n + 1 : 2 * n)) {
        UnipotentClass u{type, std::move(p)};
        if (valid_unipotent(u)) out.push_back(std::move(u));
    }
    return out;
}

}  // namespace nilorb
