#pragma once

// Elements and conjugacy classes of G(m,1,n) = S_n acting on (C_m)^n.
// An element (sigma, k) sends y_j to eta^{k_j} y_{sigma(j)}.

#include <cstdint>
#include <vector>

#include "rrca/combinatorics.hpp"
#include "rrca/errors.hpp"

namespace rrca {

struct GroupElement {
    std::vector<uint8_t> perm;   // sigma, 0-based images
    std::vector<uint16_t> colors; // k_1..k_n, values in Z/m

    bool operator==(const GroupElement& o) const { return perm == o.perm && colors == o.colors; }
};

struct CycleData {
    // one entry per cycle: (length, color sum mod m)
    std::vector<std::pair<uint32_t, uint32_t>> cycles;
};

class WreathGroup {
public:
    WreathGroup(uint32_t m, uint32_t n);

    uint32_t m() const { return m_; }
    uint32_t n() const { return n_; }
    uint64_t order() const { return order_; }

    GroupElement identity() const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const; // a after b
    GroupElement inv(const GroupElement& a) const;

    CycleData cycle_data(const GroupElement& g) const;

    // classes are labeled by m-multipartitions of n: a cycle of length l
    // whose color sum is j mod m contributes a part l to component j
    Multipartition class_label(const GroupElement& g) const;
    GroupElement class_representative(const Multipartition& label) const;
    uint64_t class_size(const Multipartition& label) const;

    // all elements, enumerated deterministically (budget-capped by callers)
    std::vector<GroupElement> elements() const;

private:
    uint32_t m_, n_;
    uint64_t order_;
};

} // namespace rrca
