#pragma once

// Partitions, m-multipartitions, box contents and residue multisets.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rrca/gf.hpp"

namespace rrca {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<uint32_t> parts);

    const std::vector<uint32_t>& parts() const { return parts_; }
    uint32_t size() const;
    bool empty() const { return parts_.empty(); }

    // Multiset of column - row over the boxes, rows/columns 1-based.
    std::vector<int32_t> contents() const;

    Partition transpose() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const; // "2,1" ; empty partition is ""

private:
    std::vector<uint32_t> parts_;
};

// Partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(uint32_t n);

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const { return comps_; }
    uint32_t m() const { return static_cast<uint32_t>(comps_.size()); }
    uint32_t size() const;

    bool operator==(const Multipartition& o) const { return comps_ == o.comps_; }
    bool operator!=(const Multipartition& o) const { return !(*this == o); }
    bool operator<(const Multipartition& o) const { return comps_ < o.comps_; }

    std::string str() const; // "[2,1|1|]" for ((2,1),(1),empty)
    static Multipartition parse(const std::string& text);

private:
    std::vector<Partition> comps_;
};

// All m-multipartitions of n; component sizes descend on the first
// component, partitions within a size in reverse-lexicographic order.
std::vector<Multipartition> enumerate_multipartitions(uint32_t m, uint32_t n);

class ResidueMultiset {
public:
    ResidueMultiset() = default;

    void add(const FieldElement& x, uint32_t mult = 1);
    const std::map<FieldElement, uint32_t>& entries() const { return entries_; }
    uint32_t total() const;

    // Sum of mult * x^r over the entries.
    FieldElement power_sum(const FieldCtxPtr& ctx, uint32_t r) const;

    bool operator==(const ResidueMultiset& o) const { return entries_ == o.entries_; }
    bool operator!=(const ResidueMultiset& o) const { return !(*this == o); }
    bool operator<(const ResidueMultiset& o) const { return entries_ < o.entries_; }

private:
    std::map<FieldElement, uint32_t> entries_;
};

// The multiset { AS(a_i) - cont(b) * AS(kappa) : b a box of the i-th
// component }, taken over all components.  a must have one entry per
// component and share a ctx with kappa.
ResidueMultiset shifted_residue(const Multipartition& mp, const std::vector<FieldElement>& a,
                                const FieldElement& kappa);

} // namespace rrca
