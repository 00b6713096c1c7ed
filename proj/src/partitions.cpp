#include "nilorb/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "nilorb/errors.hpp"

namespace nilorb {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw Error(ErrorKind::Domain, "not a partition: parts must be positive and weakly decreasing");
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::distinct() const {
    std::vector<int> out;
    for (int p : parts_)
        if (out.empty() || out.back() != p) out.push_back(p);
    return out;
}

std::string Partition::str() const {
    std::string s = "(";
    if (parts_.empty()) s += "0";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::string Bipartition::str() const { return mu.str() + nu.str(); }

int multiplicity(const Partition& lambda, int j) {
    if (j < 1) throw Error(ErrorKind::Domain, "multiplicity: j must be >= 1");
    return static_cast<int>(std::count(lambda.parts().begin(), lambda.parts().end(), j));
}

bool bipartition_leq(const Bipartition& a, const Bipartition& b) {
    if (a.total() != b.total())
        throw Error(ErrorKind::IncomparableSize, "bipartition_leq: totals differ");
    const std::size_t len =
        std::max({a.mu.length(), a.nu.length(), b.mu.length(), b.nu.length()}) + 1;
    int sa = 0, sb = 0;  // sums over i <= j-1
    for (std::size_t j = 1; j <= len; ++j) {
        if (sa + a.mu.at(j) > sb + b.mu.at(j)) return false;
        sa += a.mu.at(j) + a.nu.at(j);
        sb += b.mu.at(j) + b.nu.at(j);
        if (sa > sb) return false;
    }
    return true;
}

Bipartition j_induct(const Bipartition& tau, int k) {
    if (k < 1) throw Error(ErrorKind::Domain, "j_induct: k must be >= 1");
    const std::size_t mu_n = static_cast<std::size_t>((k + 1) / 2);
    const std::size_t nu_n = static_cast<std::size_t>(k / 2);
    std::vector<int> mu(std::max(tau.mu.length(), mu_n), 0), nu(std::max(tau.nu.length(), nu_n), 0);
    for (std::size_t i = 1; i <= mu.size(); ++i) mu[i - 1] = tau.mu.at(i) + (i <= mu_n ? 1 : 0);
    for (std::size_t i = 1; i <= nu.size(); ++i) nu[i - 1] = tau.nu.at(i) + (i <= nu_n ? 1 : 0);
    return {Partition(mu), Partition(nu)};
}

bool family_member(const Bipartition& tau, Family family) {
    const std::size_t len = std::max(tau.mu.length(), tau.nu.length()) + 1;
    for (std::size_t i = 1; i <= len; ++i) {
        const int mi = tau.mu.at(i), mn = tau.mu.at(i + 1), ni = tau.nu.at(i);
        switch (family) {
            case Family::XC2:
                if (ni > mi + 1) return false;
                break;
            case Family::XB2:
                if (ni < mn) return false;
                break;
            case Family::XC1:
                if (ni < mn - 1 || ni > mi + 1) return false;
                break;
            case Family::XB1:
                if (ni < mn || ni > mi + 2) return false;
                break;
        }
    }
    return true;
}

Bipartition normalize_d(const Bipartition& tau) {
    const std::size_t len = std::max(tau.mu.length(), tau.nu.length());
    for (std::size_t i = 1; i <= len; ++i) {
        if (tau.mu.at(i) != tau.nu.at(i))
            return tau.nu.at(i) < tau.mu.at(i) ? tau : Bipartition{tau.nu, tau.mu};
    }
    return tau;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    for (int a = n; a >= 0; --a) {
        const auto mus = partitions_of(a);
        const auto nus = partitions_of(n - a);
        for (const auto& mu : mus)
            for (const auto& nu : nus) out.push_back({mu, nu});
    }
    return out;
}

Partition from_multiplicities(const std::vector<int>& mult) {
    std::vector<int> parts;
    for (std::size_t j = mult.size(); j-- > 1;) {
        if (mult[j] < 0) throw Error(ErrorKind::InternalConsistency, "negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(mult[j]), static_cast<int>(j));
    }
    return Partition(std::move(parts));
}

std::vector<int> multiplicities(const Partition& lambda) {
    std::vector<int> m(static_cast<std::size_t>(lambda.largest()) + 1, 0);
    for (int p : lambda.parts()) ++m[static_cast<std::size_t>(p)];
    return m;
}

}  // namespace nilorb
