// Command line front end: block partitions, smoothness reports, the G_4
// separation check, fake polynomials, the graded divisibility sweep, and
// the brute-force oracle runs, all with machine-readable output.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "rrca/characters.hpp"
#include "rrca/oracle.hpp"
#include "rrca/smoothness.hpp"

using json = nlohmann::ordered_json;
using namespace rrca;

namespace {

struct CtxFlags {
    uint32_t p = 3;
    int32_t r = -1; // -1: derive from the order of p mod m
    std::string modulus;
};

void add_ctx_flags(CLI::App* cmd, CtxFlags& f) {
    cmd->add_option("-p,--p", f.p, "characteristic (odd prime)")->required();
    cmd->add_option("-r,--r", f.r, "extension degree; default: smallest r with the needed roots");
    cmd->add_option("--modulus", f.modulus, "modulus polynomial in t, e.g. \"t^2+1\"");
}

FieldCtxPtr make_ctx(const CtxFlags& f, uint64_t root_order) {
    uint32_t r = f.r > 0 ? static_cast<uint32_t>(f.r) : min_extension_degree(f.p, root_order);
    if (!f.modulus.empty()) return ctx_create(f.p, r, f.modulus);
    return ctx_create(f.p, r);
}

json ctx_json(const FieldCtxPtr& ctx) {
    json j;
    j["schema_version"] = 1;
    j["p"] = ctx->p();
    j["r"] = ctx->r();
    j["modulus"] = poly_text(ctx->modulus());
    return j;
}

std::vector<FieldElement> parse_c_list(const FieldCtxPtr& ctx, const std::string& text,
                                       uint32_t m) {
    std::vector<FieldElement> out;
    if (m <= 1) {
        if (!text.empty()) fail(errc::parse_error, "m = 1 takes no c parameters");
        return out;
    }
    if (text.empty()) return std::vector<FieldElement>(m - 1, ctx->zero());
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string piece =
            comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
        out.push_back(ctx->parse(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != m - 1) fail(errc::parse_error, "need m-1 comma-separated c values");
    return out;
}

json residue_json(const ResidueMultiset& res) {
    json arr = json::array();
    for (const auto& [elt, mult] : res.entries()) {
        json e;
        e["elt"] = elt.str();
        e["mult"] = mult;
        arr.push_back(e);
    }
    return arr;
}

int run_blocks(const CtxFlags& cf, uint32_t m, uint32_t n, const std::string& kappa_text,
               const std::string& c_text) {
    auto ctx = make_ctx(cf, m);
    auto ps = ParameterSet::create(m, n, ctx->parse(kappa_text), parse_c_list(ctx, c_text, m));
    auto bp = block_partition(ps);
    json j = ctx_json(ctx);
    j["command"] = "blocks";
    j["m"] = m;
    j["n"] = n;
    j["kappa"] = ps.kappa.str();
    json cj = json::array();
    for (const auto& c : ps.c) cj.push_back(c.str());
    j["c"] = cj;
    json classes = json::array();
    for (size_t i = 0; i < bp.classes.size(); ++i) {
        json cl;
        json members = json::array();
        for (const auto& la : bp.classes[i]) members.push_back(la.str());
        cl["members"] = members;
        cl["residue"] = residue_json(bp.fingerprints[i]);
        classes.push_back(cl);
    }
    j["classes"] = classes;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_smooth(const CtxFlags& cf, uint32_t m, uint32_t n, const std::string& kappa_text,
               const std::string& c_text, bool with_parabolics) {
    auto ctx = make_ctx(cf, m);
    auto ps = ParameterSet::create(m, n, ctx->parse(kappa_text), parse_c_list(ctx, c_text, m));
    auto rep = singular_locus_report(ps);
    json j = ctx_json(ctx);
    j["command"] = "smooth";
    j["m"] = m;
    j["n"] = n;
    j["kappa"] = ps.kappa.str();
    json cj = json::array();
    for (const auto& c : ps.c) cj.push_back(c.str());
    j["c"] = cj;
    j["kappa_condition"] = rep.kappa_in_Fp;
    json viol = json::array();
    for (const auto& v : rep.violations) {
        json e;
        e["i"] = v.i;
        e["j"] = v.j;
        e["C"] = v.C;
        e["sign"] = v.sign > 0 ? "+" : "-";
        viol.push_back(e);
    }
    j["violations"] = viol;
    j["smooth"] = rep.smooth;
    if (with_parabolics) {
        auto v = smooth_iff_singleton_blocks(ps);
        j["parabolic_singletons"] = v.parabolic_singletons;
        j["equivalence_holds"] = v.hyperplane_smooth == v.parabolic_singletons;
    }
    std::cout << j.dump(2) << "\n";
    return rep.smooth ? 0 : 1;
}

int run_g4(const CtxFlags& cf, const std::string& c1_text, const std::string& c2_text) {
    auto ctx = make_ctx(cf, 3); // needs a primitive cube root
    auto verdict = g4_generic_check(ctx, ctx->parse(c1_text), ctx->parse(c2_text));
    json j = ctx_json(ctx);
    j["command"] = "g4";
    j["c1"] = c1_text;
    j["c2"] = c2_text;
    auto pairs = [&](const std::vector<G4Pair>& v) {
        json arr = json::array();
        for (const auto& pr : v) {
            json e;
            e["group"] = pr.group;
            e["mu"] = pr.mu;
            e["rho"] = pr.rho;
            e["value"] = pr.value.str();
            arr.push_back(e);
        }
        return arr;
    };
    j["separated_pairs"] = pairs(verdict.separated_pairs);
    j["unseparated_pairs"] = pairs(verdict.unseparated_pairs);
    j["verdict"] = verdict.singleton_blocks ? "singleton-blocks" : "inconclusive";
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_fake(uint32_t m, uint32_t n, const std::string& format, uint32_t p) {
    auto table = CharacterTable::build(m, n);
    if (format == "tsv") {
        for (size_t li = 0; li < table->labels().size(); ++li) {
            std::cout << table->labels()[li].str() << "\t" << table->dim(li) << "\t"
                      << table->fake_polynomial(li).str();
            if (p > 0) std::cout << "\t" << table->pcoinvariant_character(li, p).str();
            std::cout << "\n";
        }
        return 0;
    }
    json j;
    j["schema_version"] = 1;
    j["command"] = "fake";
    j["m"] = m;
    j["n"] = n;
    json rows = json::array();
    for (size_t li = 0; li < table->labels().size(); ++li) {
        json e;
        e["label"] = table->labels()[li].str();
        e["dim"] = table->dim(li);
        e["fake"] = table->fake_polynomial(li).str();
        if (p > 0) e["pcoinvariant"] = table->pcoinvariant_character(li, p).str();
        rows.push_back(e);
    }
    j["rows"] = rows;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_classify(uint32_t m_max, uint32_t n_max, uint32_t p) {
    json j;
    j["schema_version"] = 1;
    j["command"] = "classify";
    j["p"] = p;
    j["m_max"] = m_max;
    j["n_max"] = n_max;
    bool all_ok = true;
    json groups = json::array();
    for (uint32_t m = 1; m <= m_max; ++m) {
        for (uint32_t n = 1; n <= n_max; ++n) {
            uint64_t order = 1;
            for (uint32_t i = 2; i <= n; ++i) order *= i;
            for (uint32_t i = 0; i < n; ++i) order *= m;
            if (order % p == 0) continue;
            auto table = CharacterTable::build(m, n);
            BigInt pn = 1;
            for (uint32_t i = 0; i < n; ++i) pn *= p;
            json g;
            g["m"] = m;
            g["n"] = n;
            g["order"] = order;
            json bad = json::array();
            for (size_t li = 0; li < table->labels().size(); ++li) {
                bool div = table->divisibility_check(li, p);
                auto q = table->poincare_candidate(li, p);
                bool poly = q.has_value();
                bool value_ok = poly && q->eval_one() == BigInt(order) * pn;
                if (!div || !poly || !value_ok) {
                    all_ok = false;
                    json e;
                    e["label"] = table->labels()[li].str();
                    e["divisible"] = div;
                    e["poincare_polynomial"] = poly;
                    bad.push_back(e);
                }
            }
            g["all_divisible"] = bad.empty();
            if (!bad.empty()) g["violations"] = bad;
            groups.push_back(g);
        }
    }
    j["groups"] = groups;
    j["all_divisible"] = all_ok;
    std::cout << j.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

json do_report_json(const DOReport& r) {
    json j;
    j["z_commute"] = r.z_commute;
    j["do_forms_agree"] = r.do_forms_agree;
    j["elementary_comm"] = r.elementary_comm;
    j["power_comm"] = r.power_comm;
    j["power_sums_central"] = r.power_sums_central;
    j["euler_relations"] = r.euler_relations;
    j["euler_power_central"] = r.euler_power_central;
    return j;
}

int run_oracle(const OracleAlgebraPtr& alg, const FieldCtxPtr& ctx, json head, uint64_t seed) {
    json j = ctx_json(ctx);
    j.update(head);
    j["dim"] = alg->dim();
    j["identities"] = do_report_json(alg->verify_identities(true));
    auto blocks = alg->block_decomposition(seed);
    j["centre_dim"] = blocks.centre_dim;
    j["nilradical_dim"] = blocks.nilradical_dim;
    j["block_count"] = blocks.block_count;
    json classes = json::array();
    for (const auto& cls : blocks.classes) {
        json members = json::array();
        for (uint32_t la : cls) members.push_back(alg->label_multipartition(la).str());
        classes.push_back(members);
    }
    j["classes"] = classes;
    json chars = json::array();
    for (uint32_t la = 0; la < alg->label_count(); ++la) {
        json e;
        e["label"] = alg->label_multipartition(la).str();
        json vals = json::array();
        for (auto v : blocks.central_characters[la])
            vals.push_back(alg->field()->to_element(v).str());
        e["central_character"] = vals;
        chars.push_back(e);
    }
    j["central_characters"] = chars;
    auto rad = alg->simple_head_dims();
    json dims = json::array();
    for (uint32_t la = 0; la < alg->label_count(); ++la) {
        json e;
        e["label"] = alg->label_multipartition(la).str();
        e["dim"] = rad.head_dims[la];
        dims.push_back(e);
    }
    j["simple_dims"] = dims;
    j["radical_dim"] = rad.radical_dim;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int dispatch_error(const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
        case errc::parse_error:
            return 2;
        case errc::non_prime:
        case errc::reducible_modulus:
        case errc::order_not_dividing:
        case errc::bad_characteristic:
        case errc::ctx_mismatch:
        case errc::size_mismatch:
        case errc::budget_exceeded:
            return 3;
        default:
            return 1; // contract violations
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted rational Cherednik algebra toolkit"};
    app.require_subcommand(1);

    CtxFlags cf;
    uint32_t m = 1, n = 1;
    std::string kappa = "0", c_list, c1 = "0", c2 = "0";
    bool with_parabolics = false;
    uint64_t seed = 0;

    auto* blocks = app.add_subcommand("blocks", "block partition of the simple labels");
    add_ctx_flags(blocks, cf);
    blocks->add_option("-m,--m", m)->required();
    blocks->add_option("-n,--n", n)->required();
    blocks->add_option("--kappa", kappa, "kappa as a polynomial in t");
    blocks->add_option("--c", c_list, "comma separated c_1..c_{m-1}");

    auto* smooth = app.add_subcommand("smooth", "hyperplane smoothness report");
    add_ctx_flags(smooth, cf);
    smooth->add_option("-m,--m", m)->required();
    smooth->add_option("-n,--n", n)->required();
    smooth->add_option("--kappa", kappa);
    smooth->add_option("--c", c_list);
    smooth->add_flag("--parabolics", with_parabolics, "also run the parabolic block check");

    auto* g4 = app.add_subcommand("g4", "Euler-element separation for G_4");
    add_ctx_flags(g4, cf);
    g4->add_option("--c1", c1)->required();
    g4->add_option("--c2", c2)->required();

    uint32_t fake_p = 0;
    std::string format = "tsv";
    auto* fake = app.add_subcommand("fake", "fake polynomials of G(m,1,n)");
    fake->add_option("-m,--m", m)->required();
    fake->add_option("-n,--n", n)->required();
    fake->add_option("--p", fake_p, "also print the p-coinvariant character");
    fake->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

    uint32_t m_max = 3, n_max = 3, classify_p = 5;
    auto* classify = app.add_subcommand("classify", "graded divisibility sweep");
    classify->add_option("--m-max", m_max);
    classify->add_option("--n-max", n_max);
    classify->add_option("--p", classify_p)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force restricted algebra runs");
    oracle->require_subcommand(1);
    auto* rank1 = oracle->add_subcommand("rank1", "cyclic group C_m");
    add_ctx_flags(rank1, cf);
    rank1->add_option("-m,--m", m)->required();
    rank1->add_option("--c", c_list, "comma separated c_1..c_{m-1}");
    rank1->add_option("--c1", c1, "shorthand for a single c value (m = 2)");
    rank1->add_option("--seed", seed);
    auto* s2 = oracle->add_subcommand("s2", "symmetric group S_2 on k^2");
    add_ctx_flags(s2, cf);
    s2->add_option("--kappa", kappa);
    s2->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (blocks->parsed()) return run_blocks(cf, m, n, kappa, c_list);
        if (smooth->parsed()) return run_smooth(cf, m, n, kappa, c_list, with_parabolics);
        if (g4->parsed()) return run_g4(cf, c1, c2);
        if (fake->parsed()) return run_fake(m, n, format, fake_p);
        if (classify->parsed()) return run_classify(m_max, n_max, classify_p);
        if (rank1->parsed()) {
            auto ctx = make_ctx(cf, m);
            auto F = make_fq_table(ctx);
            std::string clist = c_list;
            if (clist.empty() && m == 2) clist = c1;
            auto c = parse_c_list(ctx, clist, m);
            auto alg = OracleAlgebra::build_rank1(F, m, c);
            json head;
            head["command"] = "oracle rank1";
            head["m"] = m;
            json cj = json::array();
            for (const auto& cv : c) cj.push_back(cv.str());
            head["c"] = cj;
            return run_oracle(alg, ctx, head, seed);
        }
        if (s2->parsed()) {
            auto ctx = make_ctx(cf, 1);
            auto F = make_fq_table(ctx);
            auto alg = OracleAlgebra::build_s2(F, ctx->parse(kappa));
            json head;
            head["command"] = "oracle s2";
            head["kappa"] = kappa;
            return run_oracle(alg, ctx, head, seed);
        }
    } catch (const Error& e) {
        return dispatch_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
