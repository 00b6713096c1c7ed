#include <algorithm>
#include <bit>

#include "nilorb/chevalley.hpp"
#include "nilorb/errors.hpp"

namespace nilorb::chev {

PackedMap::PackedMap(std::uint64_t expected) {
    const std::uint64_t cap = std::bit_ceil(std::max<std::uint64_t>(16, expected + expected / 2 + 1));
    keys_.assign(cap, kEmpty);
    values_.assign(cap, 0);
    mask_ = cap - 1;
}

std::uint64_t PackedMap::slot(std::uint64_t key) const {
    // splitmix64 finalizer
    std::uint64_t h = key + 0x9e3779b97f4a7c15ULL;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
    h ^= h >> 31;
    std::uint64_t i = h & mask_;
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
    return i;
}

void PackedMap::grow() {
    std::vector<std::uint64_t> keys(keys_.size() * 2, kEmpty);
    std::vector<std::uint32_t> values(keys.size(), 0);
    keys.swap(keys_);
    values.swap(values_);
    mask_ = keys_.size() - 1;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (keys[i] != kEmpty) {
            const std::uint64_t s = slot(keys[i]);
            keys_[s] = keys[i];
            values_[s] = values[i];
        }
}

bool PackedMap::insert(std::uint64_t key, std::uint32_t value) {
    NILORB_ASSERT(key != kEmpty, "PackedMap: reserved key");
    std::uint64_t s = slot(key);
    if (keys_[s] == key) return false;
    if ((size_ + 1) * 3 > keys_.size() * 2) {
        grow();
        s = slot(key);
    }
    keys_[s] = key;
    values_[s] = value;
    ++size_;
    return true;
}

bool PackedMap::contains(std::uint64_t key) const { return keys_[slot(key)] == key; }

std::uint32_t PackedMap::get(std::uint64_t key) const {
    const std::uint64_t s = slot(key);
    NILORB_ASSERT(keys_[s] == key, "PackedMap: missing key");
    return values_[s];
}

CoadjointAction::CoadjointAction(const ChevalleyRep& rep, const FiniteField& f) : field_(&f), dim_(rep.dim) {
    long double states = 1;
    for (int k = 0; k < dim_; ++k) {
        place_.push_back(k == 0 ? 1 : place_.back() * static_cast<std::uint64_t>(f.q()));
        states *= f.q();
    }
    if (states >= 18446744073709551615.0L) throw Error(ErrorKind::Domain, "state space does not fit in 64 bits");
    const auto D = static_cast<std::size_t>(dim_);
    const RootSystem& rs = rep.roots;
    for (int i = 0; i < rs.rank; ++i) {
        RootVec e(static_cast<std::size_t>(rs.rank), 0);
        e[static_cast<std::size_t>(i)] = 1;
        const int pos = rs.index_of(e);
        for (int root : {pos, rep.dual_coord(pos)})
            for (int c = 1; c < f.q(); ++c) {
                const FqMat m = coadjoint_generator(rep, root, c, f);
                Gen g;
                g.bit_delta.assign(D, 0);
                for (std::size_t r = 0; r < D; ++r)
                    for (std::size_t col = 0; col < D; ++col) {
                        const int v = m[r * D + col];
                        if (r == col) {
                            NILORB_ASSERT(v == 1, "coadjoint generator is not unipotent on the diagonal");
                            continue;
                        }
                        if (v == 0) continue;
                        g.off_diagonal.push_back({static_cast<int>(r), static_cast<int>(col), v});
                        g.bit_delta[col] |= std::uint64_t{1} << r;
                        g.active |= std::uint64_t{1} << col;
                    }
                gens_.push_back(std::move(g));
            }
    }
}

std::uint64_t CoadjointAction::pack(const std::vector<int>& v) const {
    std::uint64_t s = 0;
    for (int k = dim_ - 1; k >= 0; --k) s = s * static_cast<std::uint64_t>(field_->q()) + static_cast<std::uint64_t>(v[static_cast<std::size_t>(k)]);
    return s;
}

std::vector<int> CoadjointAction::unpack(std::uint64_t s) const {
    std::vector<int> v(static_cast<std::size_t>(dim_));
    const auto q = static_cast<std::uint64_t>(field_->q());
    for (auto& x : v) {
        x = static_cast<int>(s % q);
        s /= q;
    }
    return v;
}

std::uint64_t CoadjointAction::apply(std::size_t gen, std::uint64_t s) const {
    const Gen& g = gens_[gen];
    if (field_->q() == 2) {
        std::uint64_t out = s;
        for (std::uint64_t m = s & g.active; m != 0; m &= m - 1) out ^= g.bit_delta[static_cast<std::size_t>(std::countr_zero(m))];
        return out;
    }
    const auto q = static_cast<std::uint64_t>(field_->q());
    int x[64];
    std::uint64_t t = s;
    for (int k = 0; k < dim_; ++k, t /= q) x[k] = static_cast<int>(t % q);
    std::uint64_t out = s;
    for (const Entry& e : g.off_diagonal) {
        const int src = x[e.col];
        if (src == 0) continue;
        // out[row] += val * x[col], digit-wise.
        const int cur = static_cast<int>((out / place_[static_cast<std::size_t>(e.row)]) % q);
        const int nxt = field_->add(cur, field_->mul(e.val, src));
        out = out - static_cast<std::uint64_t>(cur) * place_[static_cast<std::size_t>(e.row)] +
              static_cast<std::uint64_t>(nxt) * place_[static_cast<std::size_t>(e.row)];
    }
    return out;
}

BfsResult orbit_bfs(const CoadjointAction& act, std::uint64_t start, std::uint64_t cap, PackedMap* visited, std::uint32_t tag) {
    PackedMap local(1 << 12);
    PackedMap& seen = visited != nullptr ? *visited : local;
    BfsResult res;
    if (!seen.insert(start, tag)) return res;
    res.size = 1;
    std::vector<std::uint64_t> frontier{start}, next;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint64_t s : frontier)
            for (std::size_t g = 0; g < act.num_generators(); ++g) {
                const std::uint64_t t = act.apply(g, s);
                if (!seen.insert(t, tag)) continue;
                next.push_back(t);
                if (++res.size > cap) {
                    res.capped = true;
                    return res;
                }
            }
        frontier.swap(next);
    }
    return res;
}

BfsResult orbit_bfs(const ChevalleyRep& rep, const std::vector<int>& start, const FiniteField& f, std::uint64_t cap) {
    const CoadjointAction act(rep, f);
    return orbit_bfs(act, act.pack(start), cap);
}

std::map<std::uint64_t, int> Census::histogram() const {
    std::map<std::uint64_t, int> h;
    for (std::uint64_t s : sizes) ++h[s];
    return h;
}

Census nilpotent_sweep(const ChevalleyRep& rep, const FiniteField& f) {
    const CoadjointAction act(rep, f);
    const int P = rep.roots.num_positive();
    std::uint64_t total = 1;
    for (int i = 0; i < P; ++i) total *= static_cast<std::uint64_t>(f.q());
    Census c;
    c.membership = PackedMap(total);
    for (std::uint64_t n = 0; n < total; ++n) {
        std::uint64_t m = n;
        std::vector<int> v(static_cast<std::size_t>(rep.dim), 0);
        for (int i = 0; i < P; ++i, m /= static_cast<std::uint64_t>(f.q()))
            v[static_cast<std::size_t>(rep.dual_coord(i))] = static_cast<int>(m % static_cast<std::uint64_t>(f.q()));
        const std::uint64_t s = act.pack(v);
        if (c.membership.contains(s)) continue;
        const auto id = static_cast<std::uint32_t>(c.sizes.size());
        const BfsResult r = orbit_bfs(act, s, ~std::uint64_t{0}, &c.membership, id);
        c.sizes.push_back(r.size);
        c.seeds.push_back(std::move(v));
    }
    return c;
}

Census nilpotent_sweep_g2(int q) {
    const FiniteField f(q);
    if (f.p() != 3) throw Error(ErrorKind::Domain, "the G2 sweep needs characteristic 3");
    return nilpotent_sweep(build_lie(Group::G2p3), f);
}

}  // namespace nilorb::chev
