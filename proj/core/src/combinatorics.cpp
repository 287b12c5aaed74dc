#include "rrca/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rrca {

Partition::Partition(std::vector<uint32_t> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1]) fail(errc::internal_error, "partition parts must descend");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (uint32_t p : parts_)
        if (p == 0) fail(errc::internal_error, "zero part inside partition");
}

uint32_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::vector<int32_t> Partition::contents() const {
    std::vector<int32_t> out;
    out.reserve(size());
    for (size_t row = 0; row < parts_.size(); ++row)
        for (uint32_t col = 0; col < parts_[row]; ++col)
            out.push_back(static_cast<int32_t>(col + 1) - static_cast<int32_t>(row + 1));
    return out;
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition{};
    std::vector<uint32_t> out(parts_[0], 0);
    for (uint32_t col = 0; col < parts_[0]; ++col) {
        uint32_t cnt = 0;
        for (uint32_t part : parts_)
            if (part > col) ++cnt;
        out[col] = cnt;
    }
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

namespace {

void gen_partitions(uint32_t n, uint32_t maxpart, std::vector<uint32_t>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (uint32_t k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(uint32_t n) {
    std::vector<Partition> out;
    std::vector<uint32_t> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

Multipartition::Multipartition(std::vector<Partition> components) : comps_(std::move(components)) {}

uint32_t Multipartition::size() const {
    uint32_t s = 0;
    for (const auto& c : comps_) s += c.size();
    return s;
}

std::string Multipartition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << "|";
        os << comps_[i].str();
    }
    os << "]";
    return os.str();
}

Multipartition Multipartition::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        fail(errc::parse_error, "multipartition must look like \"[2,1|1|]\"");
    std::string body = text.substr(1, text.size() - 2);
    std::vector<Partition> comps;
    size_t start = 0;
    auto take = [&](const std::string& piece) {
        std::vector<uint32_t> parts;
        size_t i = 0;
        while (i < piece.size()) {
            if (!std::isdigit(static_cast<unsigned char>(piece[i])))
                fail(errc::parse_error, "bad partition piece '" + piece + "'");
            uint64_t v = 0;
            while (i < piece.size() && std::isdigit(static_cast<unsigned char>(piece[i]))) {
                v = v * 10 + (piece[i] - '0');
                if (v > 100000) fail(errc::parse_error, "part too large");
                ++i;
            }
            parts.push_back(static_cast<uint32_t>(v));
            if (i < piece.size()) {
                if (piece[i] != ',') fail(errc::parse_error, "expected ',' in partition");
                ++i;
                if (i == piece.size()) fail(errc::parse_error, "trailing comma in partition");
            }
        }
        std::vector<uint32_t> sorted = parts;
        if (!std::is_sorted(sorted.rbegin(), sorted.rend()))
            fail(errc::parse_error, "partition parts must be weakly decreasing");
        comps.emplace_back(parts);
    };
    while (true) {
        size_t bar = body.find('|', start);
        if (bar == std::string::npos) {
            take(body.substr(start));
            break;
        }
        take(body.substr(start, bar - start));
        start = bar + 1;
    }
    return Multipartition(std::move(comps));
}

namespace {

void gen_multipartitions(uint32_t comp, uint32_t m, uint32_t rest,
                         std::vector<Partition>& cur, std::vector<Multipartition>& out) {
    if (comp == m) {
        if (rest == 0) out.emplace_back(cur);
        return;
    }
    if (comp + 1 == m) {
        // last component absorbs whatever is left
        for (const auto& part : partitions_of(rest)) {
            cur.push_back(part);
            gen_multipartitions(comp + 1, m, 0, cur, out);
            cur.pop_back();
        }
        return;
    }
    for (uint32_t s = rest + 1; s-- > 0;) {
        for (const auto& part : partitions_of(s)) {
            cur.push_back(part);
            gen_multipartitions(comp + 1, m, rest - s, cur, out);
            cur.pop_back();
        }
    }
}

} // namespace

std::vector<Multipartition> enumerate_multipartitions(uint32_t m, uint32_t n) {
    if (m < 1) fail(errc::internal_error, "need at least one component");
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    gen_multipartitions(0, m, n, cur, out);
    return out;
}

void ResidueMultiset::add(const FieldElement& x, uint32_t mult) {
    if (mult == 0) return;
    entries_[x] += mult;
}

uint32_t ResidueMultiset::total() const {
    uint32_t t = 0;
    for (const auto& [k, v] : entries_) t += v;
    return t;
}

FieldElement ResidueMultiset::power_sum(const FieldCtxPtr& ctx, uint32_t r) const {
    FieldElement acc = ctx->zero();
    for (const auto& [x, mult] : entries_) acc += x.pow(r).scaled(static_cast<int64_t>(mult));
    return acc;
}

ResidueMultiset shifted_residue(const Multipartition& mp, const std::vector<FieldElement>& a,
                                const FieldElement& kappa) {
    if (a.size() != mp.m()) fail(errc::size_mismatch, "shift vector length must equal m");
    for (const auto& ai : a)
        if (!ai.ctx()->same_field(*kappa.ctx()))
            fail(errc::ctx_mismatch, "shift vector and kappa in different contexts");
    FieldElement as_kappa = artin_schreier(kappa);
    ResidueMultiset out;
    for (uint32_t i = 0; i < mp.m(); ++i) {
        FieldElement shift = artin_schreier(a[i]);
        for (int32_t c : mp.components()[i].contents())
            out.add(shift - as_kappa.scaled(c));
    }
    return out;
}

} // namespace rrca
