#include "gptk/suites.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gptk/homological.hpp"
#include "gptk/io.hpp"

namespace gptk {

namespace {

void each_nilpotent(FieldPrime f, std::size_t n, std::size_t order,
                    const std::function<void(const Matrix&)>& fn) {
    if (n == 0) {
        fn(Matrix(f, 0, 0));
        return;
    }
    uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) total *= f.p;
    for (uint64_t mask = 0; mask < total; ++mask) {
        Matrix m(f, n, n);
        uint64_t v = mask;
        for (std::size_t c = 0; c < n * n; ++c) {
            m.set(c / n, c % n, static_cast<uint32_t>(v % f.p));
            v /= f.p;
        }
        if (mat_pow(m, order).is_zero()) fn(m);
    }
}

Module module_from_nilpotent(const AlgebraPtr& a, const Matrix& n) {
    Module m{a, n.rows(), {}};
    for (std::size_t k = 0; k < a->dim; ++k) m.actions.push_back(mat_pow(n, k));
    return m;
}

std::vector<Module> small_modules_truncated(const AlgebraPtr& a,
                                            std::size_t maxdim) {
    std::vector<Module> out;
    for (std::size_t n = 0; n <= maxdim; ++n)
        each_nilpotent(a->field, n, a->dim, [&](const Matrix& nil) {
            out.push_back(module_from_nilpotent(a, nil));
        });
    return out;
}

std::vector<Matrix> all_linear_phis(const TriangularPtr& g, const Module& x,
                                    const Module& y, const TensorData& td) {
    const FieldPrime f = g->r->field;
    const std::size_t q = td.module.dim, dy = y.dim;
    std::vector<Matrix> out;
    uint64_t total = 1;
    for (std::size_t i = 0; i < dy * q; ++i) total *= f.p;
    for (uint64_t mask = 0; mask < total; ++mask) {
        Matrix phi(f, dy, q);
        uint64_t v = mask;
        for (std::size_t c = 0; c < dy * q; ++c) {
            phi.set(c / (q ? q : 1), q ? c % q : 0,
                    static_cast<uint32_t>(v % f.p));
            v /= f.p;
        }
        bool linear = true;
        for (std::size_t si = 0; si < g->s->dim && linear; ++si)
            linear = phi * td.module.actions[si] == y.actions[si] * phi;
        if (linear) out.push_back(phi);
    }
    (void)x;
    return out;
}

SuiteResult fail(const std::string& name, const std::string& why) {
    return SuiteResult{name, false, why};
}

std::string counted(std::size_t n) {
    return "cases=" + std::to_string(n);
}

} // namespace

TripleFamily small_t2_family() {
    TripleFamily fam;
    auto l2 = truncated_polynomial(2, 2);
    fam.gamma = t2_extension(l2);
    fam.xs = small_modules_truncated(fam.gamma->r, 2);
    fam.ys = small_modules_truncated(fam.gamma->s, 2);
    for (const auto& x : fam.xs) {
        TensorData td = tensor_MX(fam.gamma->m, x);
        for (const auto& y : fam.ys)
            for (const auto& phi : all_linear_phis(fam.gamma, x, y, td))
                fam.triples.push_back(make_triple(fam.gamma, x, y, phi));
    }
    return fam;
}

SuiteResult suite_projectivity() {
    TripleFamily fam = small_t2_family();
    std::size_t n = 0;
    for (const auto& t : fam.triples) {
        bool criterion = is_projective_triple(t).projective;
        bool oracle = is_projective(triple_to_module(t));
        if (criterion != oracle)
            return fail("projectivity",
                        "disagreement at dim X=" + std::to_string(t.x.dim) +
                            " dim Y=" + std::to_string(t.y.dim));
        ++n;
    }
    return SuiteResult{"projectivity", true, counted(n)};
}

SuiteResult suite_gp_criterion() {
    TripleFamily fam = small_t2_family();
    auto base = gp_base_list(fam.gamma->r, 4, GPStrategy::SelfInjective);
    auto c1 = check_condition1(fam.gamma->m, base);
    auto c2 = check_condition2(fam.gamma->m, base);
    if (!c1.structural || !c2.structural)
        return fail("gp_criterion", "expected structural condition passes");
    std::size_t n = 0, refuted = 0;
    for (const auto& t : fam.triples) {
        GPTripleVerdict v = is_gp_triple(t, c1, c2, 8);
        if (!v.applicable) return fail("gp_criterion", "criterion inapplicable");
        if (v.verdict.tag == GPTag::GPUpToBound)
            return fail("gp_criterion", "criterion failed to certify a component");
        GPVerdict o = gp_oracle(triple_to_module(t), 8);
        bool crit_not = v.verdict.tag == GPTag::NotGP;
        bool oracle_not = o.tag == GPTag::NotGP;
        if (crit_not != oracle_not)
            return fail("gp_criterion",
                        "criterion/oracle split at dim X=" +
                            std::to_string(t.x.dim) +
                            " dim Y=" + std::to_string(t.y.dim));
        if (crit_not) {
            ++refuted;
            bool genuine = !v.phi_mono ||
                           v.x_verdict.tag == GPTag::NotGP ||
                           v.coker_verdict.tag == GPTag::NotGP;
            if (!genuine)
                return fail("gp_criterion", "NotGP without a genuine witness");
        }
        ++n;
    }
    return SuiteResult{"gp_criterion", true,
                       counted(n) + " refuted=" + std::to_string(refuted)};
}

SuiteResult suite_census_counts() {
    auto f2 = truncated_polynomial(2, 1);
    auto g1 = t2_extension(f2);
    auto b1 = gp_base_list(f2, 4, GPStrategy::SelfInjective);
    auto census1 = enumerate_gp_gamma(g1, b1, b1, 4, check_condition1(g1->m, b1),
                                      check_condition2(g1->m, b1));
    if (cm_count(census1) != 2)
        return fail("census_counts", "T2(F_2) count " +
                                         std::to_string(cm_count(census1)) +
                                         " != 2");
    if (!is_cm_free(census1))
        return fail("census_counts", "T2(F_2) not detected CM-free");

    auto l2 = truncated_polynomial(2, 2);
    auto g2 = t2_extension(l2);
    auto b2 = gp_base_list(l2, 4, GPStrategy::SelfInjective);
    auto census2 = enumerate_gp_gamma(g2, b2, b2, 4, check_condition1(g2->m, b2),
                                      check_condition2(g2->m, b2));
    if (cm_count(census2) != 5)
        return fail("census_counts", "T2(dual numbers) count " +
                                         std::to_string(cm_count(census2)) +
                                         " != 5");
    auto raw = raw_census_t2_truncated(g2, 2, 4);
    if (raw.size() != 5)
        return fail("census_counts",
                    "raw sweep count " + std::to_string(raw.size()) + " != 5");
    for (const auto& r : raw) {
        bool found = false;
        for (const auto& e : census2.reps)
            if (e.flat.dim == r.dim && is_isomorphic(e.flat, r)) {
                found = true;
                break;
            }
        if (!found)
            return fail("census_counts", "raw class missing from the census");
    }
    return SuiteResult{"census_counts", true, "counts 2 and 5 confirmed"};
}

SuiteResult suite_self_injective_base() {
    std::size_t n = 0;
    for (std::size_t t : {std::size_t(2), std::size_t(3)}) {
        auto lt = truncated_polynomial(2, t);
        for (const auto& x : small_modules_truncated(lt, 3)) {
            GPVerdict v = gp_oracle(x, 8);
            if (v.tag != GPTag::ProvenGP)
                return fail("self_injective_base",
                            "non-ProvenGP verdict at t=" + std::to_string(t) +
                                " dim=" + std::to_string(x.dim));
            ++n;
        }
    }
    return SuiteResult{"self_injective_base", true, counted(n)};
}

SuiteResult suite_infinite_cm_growth() {
    auto l6 = truncated_polynomial(2, 6);
    auto g = t2_extension(l6);
    auto base = gp_base_list(l6, 8, GPStrategy::SelfInjective);
    auto c1 = check_condition1(g->m, base);
    auto c2 = check_condition2(g->m, base);
    CensusConfig cfg;
    cfg.cocycle_cap = 64;
    cfg.random_cocycles = 16;
    std::vector<std::size_t> counts;
    for (std::size_t bound : {std::size_t(4), std::size_t(6), std::size_t(8)})
        counts.push_back(
            cm_count(enumerate_gp_gamma(g, base, base, bound, c1, c2, cfg)));
    std::ostringstream d;
    d << "counts " << counts[0] << " " << counts[1] << " " << counts[2];
    if (!(counts[0] < counts[1] && counts[1] < counts[2]))
        return fail("infinite_cm_growth", "not strictly increasing: " + d.str());
    return SuiteResult{"infinite_cm_growth", true, d.str()};
}

SuiteResult suite_duality() {
    TripleFamily fam = small_t2_family();
    auto base = gp_base_list(fam.gamma->r, 4, GPStrategy::SelfInjective);
    auto c3 = check_condition3(fam.gamma->m, base);
    auto c4 = check_condition4(fam.gamma->m, base);
    if (!c3.pass || !c4.pass)
        return fail("duality", "coflatness conditions did not pass");
    std::size_t n = 0;
    for (const auto& t : fam.triples) {
        try {
            GITripleVerdict v = is_gi_triple(t, c3, c4, 8);
            if (!v.applicable) return fail("duality", "criterion inapplicable");
        } catch (const std::logic_error& e) {
            return fail("duality", std::string("route disagreement: ") +
                                       e.what());
        }
        ++n;
    }
    return SuiteResult{"duality", true, counted(n)};
}

SuiteResult suite_adjunction(uint64_t seed) {
    TripleFamily fam = small_t2_family();
    std::mt19937_64 rng(seed);
    std::size_t n = 0;
    for (std::size_t trial = 0; trial < 100; ++trial) {
        const Module& x = fam.xs[rng() % fam.xs.size()];
        const Module& y = fam.ys[rng() % fam.ys.size()];
        const TripleModule& t = fam.triples[rng() % fam.triples.size()];
        Module flat = triple_to_module(t);
        auto& g = fam.gamma;
        bool ok =
            hom_space(triple_to_module(e1_lambda(g, x)), flat).size() ==
                hom_space(x, t.x).size() &&
            hom_space(flat, triple_to_module(e1_rho(g, x))).size() ==
                hom_space(t.x, x).size() &&
            hom_space(triple_to_module(e2_lambda(g, y)), flat).size() ==
                hom_space(y, t.y).size() &&
            hom_space(flat, triple_to_module(e2_rho(g, y))).size() ==
                hom_space(t.y, y).size();
        if (!ok)
            return fail("adjunction",
                        "identity failed at trial " + std::to_string(trial));
        ++n;
    }
    return SuiteResult{"adjunction", true, counted(n)};
}

SuiteResult suite_two_route_ext(uint64_t seed) {
    auto l2 = truncated_polynomial(2, 2);
    auto pool = small_modules_truncated(l2, 2);
    std::size_t n = 0;
    for (const auto& x : pool)
        for (const auto& y : pool) {
            if (ext_dim(x, y, 1) != ext_dim(dual(y), dual(x), 1))
                return fail("two_route_ext", "exhaustive pair disagreed");
            ++n;
        }

    TripleFamily fam = small_t2_family();
    std::vector<Module> flats;
    for (const auto& t : fam.triples) flats.push_back(triple_to_module(t));
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < 50; ++trial) {
        const Module& x = flats[rng() % flats.size()];
        const Module& y = flats[rng() % flats.size()];
        if (ext_dim(x, y, 1) != ext_dim(dual(y), dual(x), 1))
            return fail("two_route_ext",
                        "sample " + std::to_string(trial) + " disagreed");
        ++n;
    }
    return SuiteResult{"two_route_ext", true, counted(n)};
}

namespace {

struct SplitWindows {
    ComplexWindow gamma_window, x_window, coker_window;
};

// Decompose a window of flattened triples over gamma into its R-component
// window and its cokernel window via the idempotent splitting of each term.
SplitWindows split_window(const TriangularPtr& g,
                          const std::vector<Module>& terms,
                          const std::vector<Matrix>& diffs) {
    const FieldPrime f = g->r->field;
    struct TermData {
        Module x;
        Matrix bx, px; // X-part basis and projection inside the term
        Module coker;
        Matrix cproj, clift; // Y -> coker projection and a section
        Matrix by, py;
    };
    std::vector<TermData> data;
    for (const auto& z : terms) {
        TripleModule t = module_to_triple(z, g);
        Matrix e1c(f, g->gamma->dim, 1), e2c(f, g->gamma->dim, 1);
        for (std::size_t i = 0; i < g->r->dim; ++i) e1c.set(i, 0, g->r->unit[i]);
        for (std::size_t i = 0; i < g->s->dim; ++i)
            e2c.set(g->s_offset + i, 0, g->s->unit[i]);
        Matrix bx = column_space_basis(z.action_of(e1c));
        Matrix by = column_space_basis(z.action_of(e2c));
        auto binv = inverse(hstack(bx, by));
        if (!binv) throw std::logic_error("split_window: bad idempotents");
        TermData td;
        td.x = t.x;
        td.bx = bx;
        td.px = binv->block(0, 0, bx.cols(), z.dim);
        td.by = by;
        td.py = binv->block(bx.cols(), 0, by.cols(), z.dim);
        ModuleHom ph{t.tensor.module, t.y, t.phi};
        SubquotientData ck = cokernel(ph);
        td.coker = ck.module;
        td.cproj = ck.map.matrix;
        auto sect = solve(td.cproj, Matrix::identity(f, td.coker.dim));
        if (!sect) throw std::logic_error("split_window: no cokernel section");
        td.clift = *sect;
        data.push_back(td);
    }

    SplitWindows out;
    std::vector<ModuleHom> gdiffs, xdiffs, cdiffs;
    std::vector<Module> xterms, cterms;
    for (const auto& td : data) {
        xterms.push_back(td.x);
        cterms.push_back(td.coker);
    }
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        // diffs[i] : terms[i+1] -> terms[i]
        gdiffs.push_back(ModuleHom{terms[i + 1], terms[i], diffs[i]});
        Matrix dx = data[i].px * diffs[i] * data[i + 1].bx;
        xdiffs.push_back(ModuleHom{data[i + 1].x, data[i].x, dx});
        Matrix dy = data[i].py * diffs[i] * data[i + 1].by;
        Matrix dc = data[i].cproj * dy * data[i + 1].clift;
        cdiffs.push_back(ModuleHom{data[i + 1].coker, data[i].coker, dc});
    }
    out.gamma_window = make_window(0, terms, gdiffs);
    out.x_window = make_window(0, xterms, xdiffs);
    out.coker_window = make_window(0, cterms, cdiffs);
    return out;
}

} // namespace

SuiteResult suite_window() {
    auto l2 = truncated_polynomial(2, 2);
    auto g = t2_extension(l2);
    Module r = regular_module(l2);
    Matrix lx = r.actions[1]; // multiplication by the nilpotent generator

    // termwise e1_lambda + e2_lambda of the 2-periodic complete resolution
    TripleModule e1 = e1_lambda(g, r);
    TripleModule e2 = e2_lambda(g, r);
    Module f1 = triple_to_module(e1), f2m = triple_to_module(e2);
    Module term = direct_sum({f1, f2m}).module;

    // the differential induced by multiplication-by-x on both summands
    TensorData td = tensor_MX(g->m, r);
    Matrix fy = td.projection * kronecker(Matrix::identity(l2->field, 2), lx) *
                transpose(td.representatives);
    Matrix d1(l2->field, 4, 4);
    d1.set_block(0, 0, lx);
    d1.set_block(2, 2, fy);
    Matrix d(l2->field, 6, 6);
    d.set_block(0, 0, d1);
    d.set_block(4, 4, lx);
    ModuleHom dh{term, term, d};
    if (!is_module_hom(dh)) return fail("window", "differential not a hom");
    if (!(d * d).is_zero()) return fail("window", "d*d != 0");

    std::vector<Module> terms(6, term);
    std::vector<Matrix> diffs(5, d);
    SplitWindows sw = split_window(g, terms, diffs);
    bool g_ok = is_totally_acyclic_window(sw.gamma_window);
    bool x_ok = is_totally_acyclic_window(sw.x_window);
    bool c_ok = is_totally_acyclic_window(sw.coker_window);
    if (!(g_ok && x_ok && c_ok))
        return fail("window", "expected all three windows totally acyclic");

    auto broken = diffs;
    broken[2] = Matrix(l2->field, 6, 6);
    SplitWindows bw = split_window(g, terms, broken);
    bool g_b = is_totally_acyclic_window(bw.gamma_window);
    bool x_b = is_totally_acyclic_window(bw.x_window);
    bool c_b = is_totally_acyclic_window(bw.coker_window);
    if (g_b || x_b || c_b)
        return fail("window", "zeroed differential did not break all three");
    return SuiteResult{"window", true,
                       "acyclic={1,1,1} after-break={0,0,0}"};
}

SuiteResult suite_perpendicular() {
    TripleFamily fam = small_t2_family();
    auto base = gp_base_list(fam.gamma->r, 4, GPStrategy::SelfInjective);
    auto c1 = check_condition1(fam.gamma->m, base);
    auto c2 = check_condition2(fam.gamma->m, base);
    auto census = enumerate_gp_gamma(fam.gamma, base, base, 4, c1, c2);
    std::vector<Module> gp_gamma;
    for (const auto& e : census.reps) gp_gamma.push_back(e.flat);

    std::size_t n = 0;
    for (const auto& t : fam.triples) {
        PerpReport rep = in_gproj_perp(t, gp_gamma, base, base);
        if (rep.direct != rep.componentwise)
            return fail("perpendicular",
                        "direct=" + std::to_string(rep.direct) +
                            " componentwise=" +
                            std::to_string(rep.componentwise) +
                            " at dim X=" + std::to_string(t.x.dim) +
                            " dim Y=" + std::to_string(t.y.dim));
        ++n;
    }
    return SuiteResult{"perpendicular", true, counted(n)};
}

std::vector<std::string> suite_names() {
    return {"projectivity",     "gp_criterion",        "census_counts",
            "self_injective_base", "infinite_cm_growth", "duality",
            "adjunction",  "two_route_ext",    "window",
            "perpendicular"};
}

SuiteResult run_suite(const std::string& name, uint64_t seed) {
    if (name == "projectivity") return suite_projectivity();
    if (name == "gp_criterion") return suite_gp_criterion();
    if (name == "census_counts") return suite_census_counts();
    if (name == "self_injective_base") return suite_self_injective_base();
    if (name == "infinite_cm_growth") return suite_infinite_cm_growth();
    if (name == "duality") return suite_duality();
    if (name == "adjunction") return suite_adjunction(seed);
    if (name == "two_route_ext") return suite_two_route_ext(seed);
    if (name == "window") return suite_window();
    if (name == "perpendicular") return suite_perpendicular();
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace gptk
