#include "rrca/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rrca {

WreathGroup::WreathGroup(uint32_t m, uint32_t n) : m_(m), n_(n) {
    if (m < 1 || n < 1) fail(errc::internal_error, "wreath group needs m, n >= 1");
    order_ = 1;
    for (uint32_t i = 2; i <= n; ++i) order_ *= i;
    for (uint32_t i = 0; i < n; ++i) {
        order_ *= m;
        if (order_ > (1ull << 40)) fail(errc::budget_exceeded, "group order beyond desk scale");
    }
}

GroupElement WreathGroup::identity() const {
    GroupElement e;
    e.perm.resize(n_);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    e.colors.assign(n_, 0);
    return e;
}

GroupElement WreathGroup::mul(const GroupElement& a, const GroupElement& b) const {
    // (sigma, k)(tau, l): y_j -> eta^{l_j} y_{tau j} -> eta^{l_j + k_{tau j}} y_{sigma tau j}
    GroupElement out;
    out.perm.resize(n_);
    out.colors.resize(n_);
    for (uint32_t j = 0; j < n_; ++j) {
        out.perm[j] = a.perm[b.perm[j]];
        out.colors[j] = static_cast<uint16_t>((b.colors[j] + a.colors[b.perm[j]]) % m_);
    }
    return out;
}

GroupElement WreathGroup::inv(const GroupElement& a) const {
    GroupElement out;
    out.perm.resize(n_);
    out.colors.resize(n_);
    for (uint32_t j = 0; j < n_; ++j) out.perm[a.perm[j]] = static_cast<uint8_t>(j);
    for (uint32_t j = 0; j < n_; ++j) {
        uint32_t i = out.perm[j]; // a.perm[i] == j
        out.colors[j] = static_cast<uint16_t>((m_ - a.colors[i] % m_) % m_);
    }
    return out;
}

CycleData WreathGroup::cycle_data(const GroupElement& g) const {
    CycleData out;
    std::vector<bool> seen(n_, false);
    for (uint32_t start = 0; start < n_; ++start) {
        if (seen[start]) continue;
        uint32_t len = 0, colsum = 0, j = start;
        do {
            seen[j] = true;
            colsum += g.colors[j];
            j = g.perm[j];
            ++len;
        } while (j != start);
        out.cycles.emplace_back(len, colsum % m_);
    }
    return out;
}

Multipartition WreathGroup::class_label(const GroupElement& g) const {
    std::vector<std::vector<uint32_t>> comps(m_);
    for (auto [len, col] : cycle_data(g).cycles) comps[col].push_back(len);
    std::vector<Partition> parts;
    for (auto& v : comps) {
        std::sort(v.rbegin(), v.rend());
        parts.emplace_back(v);
    }
    return Multipartition(std::move(parts));
}

GroupElement WreathGroup::class_representative(const Multipartition& label) const {
    if (label.m() != m_ || label.size() != n_)
        fail(errc::internal_error, "class label has wrong shape");
    GroupElement g = identity();
    uint32_t pos = 0;
    for (uint32_t col = 0; col < m_; ++col) {
        for (uint32_t len : label.components()[col].parts()) {
            // cycle pos -> pos+1 -> ... -> pos+len-1 -> pos, colored once
            for (uint32_t i = 0; i + 1 < len; ++i) g.perm[pos + i] = static_cast<uint8_t>(pos + i + 1);
            g.perm[pos + len - 1] = static_cast<uint8_t>(pos);
            g.colors[pos] = static_cast<uint16_t>(col % m_);
            pos += len;
        }
    }
    return g;
}

uint64_t WreathGroup::class_size(const Multipartition& label) const {
    // centralizer order: prod over (color, length) of  a! * (l*m)^a
    uint64_t cent = 1;
    for (uint32_t col = 0; col < m_; ++col) {
        std::map<uint32_t, uint32_t> mult;
        for (uint32_t len : label.components()[col].parts()) ++mult[len];
        for (auto [len, a] : mult) {
            for (uint32_t i = 1; i <= a; ++i) cent *= i;
            for (uint32_t i = 0; i < a; ++i) cent *= static_cast<uint64_t>(len) * m_;
        }
    }
    return order_ / cent;
}

std::vector<GroupElement> WreathGroup::elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    std::vector<uint8_t> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t colors_count = 1;
    for (uint32_t i = 0; i < n_; ++i) colors_count *= m_;
    do {
        for (uint64_t c = 0; c < colors_count; ++c) {
            GroupElement g;
            g.perm = perm;
            g.colors.resize(n_);
            uint64_t cc = c;
            for (uint32_t i = 0; i < n_; ++i) {
                g.colors[i] = static_cast<uint16_t>(cc % m_);
                cc /= m_;
            }
            out.push_back(std::move(g));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace rrca
