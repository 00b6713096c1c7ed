#pragma once

// Template bodies for f2.hpp.

#include <array>

#include "nilorb/errors.hpp"

namespace nilorb::f2 {

namespace detail {

// Incremental elimination of (image, preimage) pairs keyed by the image's low bit.
struct PairEliminator {
    std::array<Vec, 64> img{};
    std::array<Vec, 64> pre{};
    Vec used = 0;

    // Reduces (y, x) in place; returns true if y became zero.
    bool reduce(Vec& y, Vec& x) const {
        while (y) {
            const int b = __builtin_ctzll(y);
            if (!((used >> b) & 1U)) return false;
            y ^= img[static_cast<std::size_t>(b)];
            x ^= pre[static_cast<std::size_t>(b)];
        }
        return true;
    }
    void insert(Vec y, Vec x) {
        const int b = __builtin_ctzll(y);
        img[static_cast<std::size_t>(b)] = y;
        pre[static_cast<std::size_t>(b)] = x;
        used |= bit(b);
    }
};

}  // namespace detail

template <class F>
Subspace kernel_on(int ambient, const std::vector<Vec>& basis, F&& phi) {
    detail::PairEliminator el;
    Subspace ker(ambient);
    for (Vec b : basis) {
        Vec y = phi(b), x = b;
        if (el.reduce(y, x))
            ker.add(x);
        else
            el.insert(y, x);
    }
    return ker;
}

template <class F>
bool solve_on(const std::vector<Vec>& basis, F&& phi, Vec target, Vec& out) {
    detail::PairEliminator el;
    for (Vec b : basis) {
        Vec y = phi(b), x = b;
        if (!el.reduce(y, x)) el.insert(y, x);
    }
    Vec x = 0;
    if (!el.reduce(target, x)) return false;
    out = x;
    return true;
}

template <class Q, class P>
Subspace zero_set(const Subspace& s, Q&& q, P&& polar) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            NILORB_ASSERT(polar(b[i], b[j]) == 0, "quadratic zero set is not a subspace");
    return kernel_on(s.ambient(), b, [&](Vec x) { return static_cast<Vec>(q(x)); });
}

}  // namespace nilorb::f2
