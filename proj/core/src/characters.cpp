#include "rrca/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace rrca {

uint64_t group_order_budget() {
    if (const char* env = std::getenv("RRCA_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 5000;
}

namespace {

// Murnaghan-Nakayama on beta-sets, memoized.
class MNTable {
public:
    int64_t chi(const std::vector<uint32_t>& lambda, const std::vector<uint32_t>& mu) {
        if (lambda.empty()) return mu.empty() ? 1 : 0;
        auto key = std::make_pair(lambda, mu);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int64_t out = 0;
        if (mu.empty()) {
            out = lambda.empty() ? 1 : 0;
        } else {
            uint32_t l = mu[0];
            std::vector<uint32_t> mu_rest(mu.begin() + 1, mu.end());
            // beta-set: lambda_i + (len-1-i), strictly decreasing
            const size_t len = lambda.size();
            std::vector<uint32_t> beta(len);
            for (size_t i = 0; i < len; ++i)
                beta[i] = lambda[i] + static_cast<uint32_t>(len - 1 - i);
            for (size_t i = 0; i < len; ++i) {
                if (beta[i] < l) continue;
                uint32_t target = beta[i] - l;
                bool occupied = false;
                size_t height = 0;
                for (size_t j = 0; j < len; ++j) {
                    if (j == i) continue;
                    if (beta[j] == target) occupied = true;
                    if (beta[j] < beta[i] && beta[j] > target) ++height;
                }
                if (occupied) continue;
                std::vector<uint32_t> nb = beta;
                nb[i] = target;
                std::sort(nb.rbegin(), nb.rend());
                std::vector<uint32_t> nl(len);
                for (size_t j = 0; j < len; ++j)
                    nl[j] = nb[j] - static_cast<uint32_t>(len - 1 - j);
                while (!nl.empty() && nl.back() == 0) nl.pop_back();
                int64_t sign = (height % 2 == 0) ? 1 : -1;
                out += sign * chi(nl, mu_rest);
            }
        }
        memo_.emplace(std::move(key), out);
        return out;
    }

private:
    std::map<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>, int64_t> memo_;
};

struct WCycle {
    uint32_t minpos, maxpos, len, colsum;
};

std::vector<WCycle> cycles_with_extent(const GroupElement& g, uint32_t n, uint32_t m) {
    std::vector<WCycle> out;
    std::vector<bool> seen(n, false);
    for (uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        uint32_t lo = s, hi = s, len = 0, col = 0, j = s;
        do {
            seen[j] = true;
            lo = std::min(lo, j);
            hi = std::max(hi, j);
            col += g.colors[j];
            j = g.perm[j];
            ++len;
        } while (j != s);
        out.push_back({lo, hi, len, col % m});
    }
    return out;
}

} // namespace

CharacterTable::CharacterTable(uint32_t m, uint32_t n) : m_(m), n_(n), group_(m, n) {}

std::shared_ptr<const CharacterTable> CharacterTable::build(uint32_t m, uint32_t n) {
    if (m < 1 || n < 1) fail(errc::internal_error, "character table needs m, n >= 1");
    auto t = std::shared_ptr<CharacterTable>(new CharacterTable(m, n));
    if (t->group_.order() > group_order_budget())
        fail(errc::budget_exceeded, "group order " + std::to_string(t->group_.order()) +
                                        " exceeds budget " + std::to_string(group_order_budget()));
    t->build_table();
    return t;
}

void CharacterTable::build_table() {
    uint32_t lcm = 1;
    for (uint32_t i = 2; i <= n_; ++i) lcm = std::lcm(lcm, i);
    field_ = CyclotomicField::create(m_ * lcm);

    labels_ = enumerate_multipartitions(m_, n_);
    class_labels_ = labels_;
    for (const auto& cl : class_labels_) {
        class_reps_.push_back(group_.class_representative(cl));
        class_sizes_.push_back(group_.class_size(cl));
    }
    uint64_t total = 0;
    for (uint64_t s : class_sizes_) total += s;
    if (total != group_.order()) fail(errc::internal_error, "class sizes do not sum to |W|");

    const auto all = group_.elements();
    std::vector<GroupElement> inverses;
    inverses.reserve(all.size());
    for (const auto& x : all) inverses.push_back(group_.inv(x));

    // cohort boundaries per label
    const size_t L = labels_.size();
    std::vector<std::vector<uint32_t>> block_of_pos(L, std::vector<uint32_t>(n_, 0));
    std::vector<std::vector<std::vector<uint32_t>>> label_parts(L);
    std::vector<uint64_t> subgroup_orders(L, 1);
    for (size_t li = 0; li < L; ++li) {
        uint32_t pos = 0;
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t sz = labels_[li].components()[i].size();
            for (uint32_t j = 0; j < sz; ++j) block_of_pos[li][pos + j] = i;
            pos += sz;
            label_parts[li].push_back(labels_[li].components()[i].parts());
            uint64_t fact = 1;
            for (uint32_t f = 2; f <= sz; ++f) fact *= f;
            subgroup_orders[li] *= fact;
        }
        for (uint32_t i = 0; i < n_; ++i) subgroup_orders[li] *= m_;
    }

    MNTable mn;
    const uint32_t M = field_->M();
    const uint32_t zeta_m_step = M / m_;

    values_.assign(L, std::vector<CyclotomicNumber>(class_labels_.size(), field_->zero()));

    for (size_t ci = 0; ci < class_reps_.size(); ++ci) {
        const GroupElement& g = class_reps_[ci];
        // accumulators per label: integer coefficient per zeta power
        std::vector<std::vector<BigInt>> acc(L, std::vector<BigInt>(M, 0));
        for (size_t xi = 0; xi < all.size(); ++xi) {
            GroupElement w = group_.mul(group_.mul(all[xi], g), inverses[xi]);
            auto wcycles = cycles_with_extent(w, n_, m_);
            for (size_t li = 0; li < L; ++li) {
                // every cycle must stay inside one cohort of the label
                const auto& blocks = block_of_pos[li];
                bool inside = true;
                std::vector<std::vector<uint32_t>> type(m_);
                uint64_t zexp = 0;
                for (const auto& cyc : wcycles) {
                    uint32_t b = blocks[cyc.minpos];
                    if (blocks[cyc.maxpos] != b) {
                        inside = false;
                        break;
                    }
                    type[b].push_back(cyc.len);
                    zexp += static_cast<uint64_t>(b) * cyc.colsum;
                }
                if (!inside) continue;
                int64_t v = 1;
                for (uint32_t b = 0; b < m_ && v != 0; ++b) {
                    std::sort(type[b].rbegin(), type[b].rend());
                    v *= mn.chi(label_parts[li][b], type[b]);
                }
                if (v == 0) continue;
                acc[li][zexp * zeta_m_step % M] += v;
            }
        }
        for (size_t li = 0; li < L; ++li) {
            CyclotomicNumber sum = field_->zero();
            for (uint32_t e = 0; e < M; ++e)
                if (acc[li][e] != 0) sum += field_->root(e).scaled(acc[li][e]);
            values_[li][ci] = sum.divided_by(BigInt(subgroup_orders[li]));
        }
    }

    // dimensions from the identity class
    Multipartition id_label = group_.class_label(group_.identity());
    size_t id_ci = 0;
    while (class_labels_[id_ci] != id_label) ++id_ci;
    BigInt sumsq = 0;
    for (size_t li = 0; li < L; ++li) {
        BigInt d = values_[li][id_ci].integer_value();
        if (d <= 0) fail(errc::internal_error, "non-positive character degree");
        dims_.push_back(static_cast<uint64_t>(d));
        sumsq += d * d;
    }
    if (sumsq != BigInt(group_.order()))
        fail(errc::internal_error, "sum of squared degrees does not match |W|");
}

size_t CharacterTable::label_index(const Multipartition& la) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == la) return i;
    fail(errc::internal_error, "label not in P(m,n): " + la.str());
}

std::vector<uint32_t> CharacterTable::degrees() const {
    std::vector<uint32_t> d(n_);
    for (uint32_t i = 0; i < n_; ++i) d[i] = (i + 1) * m_;
    return d;
}

LaurentPoly CharacterTable::coinvariant_series() const {
    LaurentPoly p = LaurentPoly::one();
    for (uint32_t d : degrees()) p *= LaurentPoly::bracket(d);
    return p;
}

void CharacterTable::build_fakes() const {
    if (!fakes_.empty()) return;
    const auto degs = degrees();
    uint32_t D = 0;
    for (uint32_t d : degs) D += d - 1; // top degree of the coinvariant ring
    const size_t L = labels_.size();

    // per class: truncated series prod(1 - t^{d_i}) / det(1 - t g|_{V^*}),
    // the eigenvalues of g on V^* being the inverses of those on V
    std::vector<std::vector<CyclotomicNumber>> series(
        class_reps_.size(), std::vector<CyclotomicNumber>(D + 1, field_->zero()));
    const uint32_t M = field_->M();
    const uint32_t zeta_m_step = M / m_;
    for (size_t ci = 0; ci < class_reps_.size(); ++ci) {
        auto& s = series[ci];
        s[0] = field_->one();
        for (uint32_t d : degs) {
            // multiply by (1 - t^d)
            for (uint32_t k = D + 1; k-- > 0;)
                if (k >= d && !s[k - d].is_zero()) s[k] = s[k] - s[k - d];
        }
        for (auto [len, col] : group_.cycle_data(class_reps_[ci]).cycles) {
            // divide by (1 - rho t^len) with rho = zeta_m^{-col}
            CyclotomicNumber rho = field_->root(-static_cast<int64_t>(col) * zeta_m_step);
            for (uint32_t k = len; k <= D; ++k) s[k] += rho * s[k - len];
        }
    }

    fakes_.assign(L, LaurentPoly{});
    for (size_t li = 0; li < L; ++li) {
        std::vector<CyclotomicNumber> f(D + 1, field_->zero());
        for (size_t ci = 0; ci < class_reps_.size(); ++ci) {
            CyclotomicNumber w = values_[li][ci].conj().scaled(BigInt(class_sizes_[ci]));
            if (w.is_zero()) continue;
            for (uint32_t k = 0; k <= D; ++k)
                if (!series[ci][k].is_zero()) f[k] += w * series[ci][k];
        }
        LaurentPoly out;
        for (uint32_t k = 0; k <= D; ++k) {
            auto c = f[k].divided_by(BigInt(group_.order()));
            if (!c.is_integer())
                fail(errc::internal_error, "fake polynomial coefficient is not an integer");
            BigInt v = c.integer_value();
            if (v < 0) fail(errc::internal_error, "fake polynomial coefficient is negative");
            if (v != 0) out += LaurentPoly::monomial(v, static_cast<int32_t>(k));
        }
        if (out.eval_one() != BigInt(dims_[li]))
            fail(errc::internal_error, "fake polynomial does not evaluate to the degree at 1");
        fakes_[li] = std::move(out);
    }
}

const LaurentPoly& CharacterTable::fake_polynomial(size_t label_idx) const {
    build_fakes();
    return fakes_[label_idx];
}

LaurentPoly CharacterTable::pcoinvariant_character(size_t label_idx, uint32_t p) const {
    LaurentPoly out = fake_polynomial(label_idx);
    for (uint32_t d : degrees()) out *= LaurentPoly::bracket(p, static_cast<int32_t>(d));
    return out;
}

size_t CharacterTable::dual_label(size_t label_idx) const {
    std::optional<size_t> found;
    for (size_t mu = 0; mu < labels_.size(); ++mu) {
        bool ok = true;
        for (size_t ci = 0; ci < class_labels_.size() && ok; ++ci)
            ok = values_[mu][ci] == values_[label_idx][ci].conj();
        if (ok) {
            if (found) fail(errc::internal_error, "dual label is not unique");
            found = mu;
        }
    }
    if (!found) fail(errc::internal_error, "no dual label found");
    return *found;
}

CyclotomicNumber CharacterTable::brauer_char_V0(const GroupElement& g, uint32_t p) const {
    const uint32_t M = field_->M();
    CyclotomicNumber out = field_->one();
    for (auto [len, col] : group_.cycle_data(g).cycles) {
        // eigenvalues on V: the len solutions of x^len = zeta_m^col
        uint32_t step = M / (m_ * len);
        for (uint32_t j = 0; j < len; ++j) {
            int64_t e = static_cast<int64_t>(step) * (col + static_cast<int64_t>(j) * m_);
            CyclotomicNumber factor = field_->zero();
            for (uint32_t i = 0; i < p; ++i) factor += field_->root(e * i);
            out *= factor;
        }
    }
    return out;
}

std::optional<LaurentPoly> CharacterTable::poincare_candidate(size_t label_idx, uint32_t p) const {
    size_t dual = dual_label(label_idx);
    const LaurentPoly& fdual = fake_polynomial(dual);
    int32_t b = fdual.valuation();
    LaurentPoly num = coinvariant_series().substitute(p) * I_poly(p, n_);
    num = num.scaled(BigInt(dims_[label_idx])).shifted(static_cast<int32_t>(p) * b);
    return num.divide_exact(fdual.substitute(p));
}

bool CharacterTable::divisibility_check(size_t label_idx, uint32_t p) const {
    size_t dual = dual_label(label_idx);
    (void)p; // divisibility in t^p is equivalent to divisibility in s
    return coinvariant_series().divide_exact(fake_polynomial(dual)).has_value();
}

LaurentPoly I_poly(uint32_t p, uint32_t n) {
    LaurentPoly out = LaurentPoly::one();
    LaurentPoly b = LaurentPoly::bracket(p);
    for (uint32_t i = 0; i < n; ++i) out *= b;
    return out;
}

} // namespace rrca
