#pragma once

// Brute-force construction of restricted rational Cherednik algebras at
// desk scale: the rank-one algebras of the cyclic groups C_m and the rank
// two algebra of S_2 acting on k^2.  Everything is built on an explicit
// PBW monomial basis x^a w y^c with table-backed field arithmetic, so the
// combinatorial block formulas can be checked against the algebras
// themselves: baby Verma modules, central characters, the block
// decomposition of the centre, and simple-head dimensions.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rrca/blocks.hpp"
#include "rrca/fq_table.hpp"
#include "rrca/laurent.hpp"
#include "rrca/linalg.hpp"

namespace rrca {

struct DOReport {
    bool z_commute = false;          // [z_i, z_j] = 0
    bool do_forms_agree = false;     // the two normal forms of each z_i coincide
    bool elementary_comm = false;    // [E_r, x_1] = sum x_1 z_{j_2} ... z_{j_r}
    bool power_comm = false;         // [P_r, x_1] = x_1 ((z_1+1)^r - z_1^r)
    bool power_sums_central = false; // sum (z_i^p - z_i)^r commutes with everything
    bool euler_relations = false;    // [h, x] = x, [h, y] = -y, [h, w] = 0
    bool euler_power_central = false;
    bool all() const {
        return z_commute && do_forms_agree && elementary_comm && power_comm &&
               power_sums_central && euler_relations && euler_power_central;
    }
};

struct OracleBlocks {
    size_t block_count = 0;
    std::vector<std::vector<uint32_t>> classes; // label indices per block
    // eigenvalue of each centre basis element on each baby Verma
    std::vector<std::vector<FqTable::Elt>> central_characters; // [label][zbasis]
    size_t centre_dim = 0;
    size_t nilradical_dim = 0;
};

struct RadicalReport {
    std::vector<uint32_t> head_dims;       // per label
    std::vector<uint32_t> endo_dims;       // dim End(L(label))
    size_t radical_dim = 0;
    bool wedderburn_ok = false;            // dim A = dim J + sum d^2/e
    bool radical_acts_as_module_rad = false; // J * Verma = rad Verma
    bool nilpotent_on_modules = false;
};

class VermaModule;

class OracleAlgebra : public std::enable_shared_from_this<OracleAlgebra> {
public:
    using Elt = FqTable::Elt;

    // sparse algebra element: basis monomial index -> coefficient
    struct Element {
        std::map<uint32_t, Elt> terms;
        bool is_zero() const { return terms.empty(); }
        bool operator==(const Element& o) const { return terms == o.terms; }
    };

    // Restricted algebra of C_m = G(m,1,1): relations g x = eta^{-1} x g,
    // g y = eta y g, [y,x] = 1 - sum c_l (1 - eta^{-l}) g^l, truncated by
    // x^{pm} = y^{pm} = 0.  c has m-1 entries.
    static std::shared_ptr<OracleAlgebra> build_rank1(const FqTablePtr& F, uint32_t m,
                                                      const std::vector<FieldElement>& c);

    // Restricted algebra of S_2 on k^2: [y_i, x_i] = 1 - kappa s,
    // [y_i, x_j] = kappa s, truncated by the p-th powers of the invariant
    // generators, which reduce the monomial basis by x_2^p = -x_1^p and
    // x_1^{2p} = 0 (same on the y side).
    static std::shared_ptr<OracleAlgebra> build_s2(const FqTablePtr& F, const FieldElement& kappa);

    const FqTablePtr& field() const { return F_; }
    uint32_t rank() const { return rank_; }         // number of x/y pairs
    uint32_t group_order() const { return gcard_; } // m or 2
    uint32_t dim() const { return dim_; }
    int32_t min_degree() const { return -static_cast<int32_t>(xtop_); }
    int32_t max_degree() const { return static_cast<int32_t>(xtop_); }
    uint32_t graded_dim(int32_t d) const;

    // generators and simple elements
    Element x_gen(uint32_t i) const;
    Element y_gen(uint32_t i) const;
    Element group_elt(uint32_t w) const;
    Element one() const { return group_elt(0); }
    Element scalar(Elt v) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element scale(const Element& a, Elt v) const;
    Element mul(const Element& a, const Element& b) const;
    Element commutator(const Element& a, const Element& b) const;
    Element power(const Element& a, uint64_t e) const;

    // Dunkl-Opdam element z_i in its two normal forms
    Element dunkl_opdam(uint32_t i) const;
    Element dunkl_opdam_alt(uint32_t i) const;
    // Euler element h with [h, x] = x
    Element euler_element() const;
    // sum_i (z_i^p - z_i)^r, central for 1 <= r <= rank
    Element power_sum_central(uint32_t r) const;

    bool commutes_with_generators(const Element& z) const;

    // executes the identity suite; throws IdentityViolated with a
    // description when `must_hold`, otherwise reports flags
    DOReport verify_identities(bool must_hold = false) const;

    // labels of the simple modules, in enumerate_multipartitions order:
    // C_m gets the m one-box labels, S_2 gets [2] (trivial) and [1,1]
    uint32_t label_count() const;
    Multipartition label_multipartition(uint32_t label) const;

    std::shared_ptr<const VermaModule> verma(uint32_t label) const;

    // unique eigenvalue of a verified-central element on a baby Verma
    Elt central_character(const VermaModule& mod, const Element& z) const;

    std::vector<Element> centre_basis() const;
    OracleBlocks block_decomposition(uint64_t seed = 0) const;
    RadicalReport simple_head_dims() const;

    // degree of a basis monomial (x-degree minus y-degree)
    int32_t mono_degree(uint32_t idx) const;

private:
    friend class VermaModule;
    OracleAlgebra() = default;
    void init_common();
    void self_check() const;

    // monomial geometry
    uint32_t pack_x(const std::array<uint32_t, 2>& a) const;
    std::array<uint32_t, 2> unpack_x(uint32_t code) const;
    uint32_t pack_mono(const std::array<uint32_t, 2>& xe, uint32_t w,
                       const std::array<uint32_t, 2>& ye) const;
    void unpack_mono(uint32_t idx, std::array<uint32_t, 2>& xe, uint32_t& w,
                     std::array<uint32_t, 2>& ye) const;

    // reduction by the restricted ideal; returns false when the monomial dies
    bool reduce_exponents(std::array<uint32_t, 2>& e, Elt& coeff) const;

    // group data
    uint32_t gmul(uint32_t a, uint32_t b) const;
    uint32_t ginv(uint32_t a) const;
    // w x^a w^{-1} = scalar x^{a'}; same shape for y
    void conj_x(uint32_t w, std::array<uint32_t, 2>& a, Elt& scalar) const;
    void conj_y(uint32_t w, std::array<uint32_t, 2>& a, Elt& scalar) const;

    void add_mono(Element& out, std::array<uint32_t, 2> xe, uint32_t w,
                  std::array<uint32_t, 2> ye, Elt coeff) const;

    // y_i x^a and y^c x^a in normal form (memoized)
    const Element& single_yx(uint32_t i, const std::array<uint32_t, 2>& a) const;
    const Element& reduce_yx(const std::array<uint32_t, 2>& c,
                             const std::array<uint32_t, 2>& a) const;

    Element mono_mul(uint32_t idx1, uint32_t idx2) const;

    la::Matrix<FqTable> left_mult_matrix(const Element& a) const;
    std::vector<Elt> to_vector(const Element& a) const;
    Element from_vector(const std::vector<Elt>& v) const;

    FqTablePtr F_;
    uint32_t rank_ = 1;
    uint32_t p_ = 3;
    uint32_t gcard_ = 1;
    std::array<uint32_t, 2> xmax_{1, 1}; // exclusive exponent bounds
    uint32_t xcard_ = 1, dim_ = 1, xtop_ = 0;
    Elt eta_ = 0;              // rank 1
    std::vector<Elt> cpar_;    // rank 1: c_1..c_{m-1}
    Elt kappa_ = 0;            // rank 2
    Elt half_ = 0;             // 1/2 mod p
    // [y_i, x_j] as group-algebra data: list of (group index, coeff)
    std::array<std::array<std::vector<std::pair<uint32_t, Elt>>, 2>, 2> comm_;

    mutable std::map<uint64_t, Element> yx_cache_;
    mutable std::map<uint64_t, Element> single_cache_;
};

using OracleAlgebraPtr = std::shared_ptr<OracleAlgebra>;

class VermaModule {
public:
    VermaModule(std::shared_ptr<const OracleAlgebra> alg, uint32_t label);

    uint32_t dim() const { return dim_; }
    uint32_t label() const { return label_; }
    int32_t degree_of(uint32_t basis_idx) const;

    // action matrix of an arbitrary algebra element
    la::Matrix<FqTable> action(const OracleAlgebra::Element& a) const;

    // radical = largest submodule inside the positive-degree part; returns
    // a basis (as column vectors) of this submodule
    std::vector<std::vector<FqTable::Elt>> radical_basis() const;

    const std::shared_ptr<const OracleAlgebra>& algebra() const { return alg_; }

private:
    friend class OracleAlgebra;
    void build_actions();
    const la::Matrix<FqTable>& mono_action(uint32_t mono_idx) const;

    std::shared_ptr<const OracleAlgebra> alg_;
    uint32_t label_;
    uint32_t dim_;
    std::vector<la::Matrix<FqTable>> gen_actions_; // x_i, then y_i, then group gen
    mutable std::vector<std::optional<la::Matrix<FqTable>>> mono_actions_;
};

// The lowest-weight eigenvalue shifts of the standard modules: component j
// carries -(c_1 eta^j + ... + c_{m-1} eta^{j(m-1)}).  Satisfies
// shift_j - shift_0 = m * a_j with a from derive_params, so residue
// comparisons agree with the derived parameters; the shifts themselves are
// what the algebras realize on lowest weights.
std::vector<FieldElement> verma_shifts(const ParameterSet& ps);

// (z+1)^{r+1} - z^{r+1} = sum_{i=1}^{r} z^{r-i} ((z+1)^i - z^i) + (r+1) z^r
// as an integer polynomial identity, checked for all 1 <= r <= rmax.
bool qr_polynomial_identity(uint32_t rmax);

} // namespace rrca
