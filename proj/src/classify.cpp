#include "gptk/classify.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "gptk/homological.hpp"

namespace gptk {

namespace {

Module jordan_module(const AlgebraPtr& lt, std::size_t s) {
    const FieldPrime f = lt->field;
    Matrix n(f, s, s);
    for (std::size_t i = 0; i + 1 < s; ++i) n.set(i + 1, i, 1);
    Module m{lt, s, {}};
    for (std::size_t k = 0; k < lt->dim; ++k) m.actions.push_back(mat_pow(n, k));
    return m;
}

bool is_truncated_polynomial_shape(const AlgebraPtr& a) {
    auto model = truncated_polynomial(a->field.p, a->dim);
    return a->left_mult == model->left_mult && a->unit == model->unit;
}

// all direct sums from `parts` fitting the budget, empty sum included;
// callback receives the multiset of part indices
void sweep_sums(const std::vector<Module>& parts, std::size_t budget,
                std::size_t from, std::vector<std::size_t>& stack,
                const std::function<void(const std::vector<std::size_t>&)>& fn) {
    fn(stack);
    for (std::size_t i = from; i < parts.size(); ++i) {
        if (parts[i].dim > budget || parts[i].dim == 0) continue;
        stack.push_back(i);
        sweep_sums(parts, budget - parts[i].dim, i, stack, fn);
        stack.pop_back();
    }
}

Module assemble_sum(const AlgebraPtr& a, const std::vector<Module>& parts,
                    const std::vector<std::size_t>& indices) {
    if (indices.empty()) return zero_module(a);
    std::vector<Module> chosen;
    chosen.reserve(indices.size());
    for (auto i : indices) chosen.push_back(parts[i]);
    return direct_sum(chosen).module;
}

uint64_t ipow_capped(uint64_t base, std::size_t e, uint64_t cap) {
    uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        v *= base;
        if (v > cap) return cap + 1;
    }
    return v;
}

} // namespace

std::vector<Module> indecomposables_uniserial(uint32_t p, std::size_t t,
                                              std::size_t maxdim) {
    auto lt = truncated_polynomial(p, t);
    std::vector<Module> out;
    for (std::size_t s = 1; s <= std::min(t, maxdim); ++s)
        out.push_back(jordan_module(lt, s));
    return out;
}

std::vector<Module> gp_base_list(const AlgebraPtr& a, std::size_t maxdim,
                                 GPStrategy strategy,
                                 const std::vector<Module>& supplied) {
    std::vector<Module> candidates;
    switch (strategy) {
        case GPStrategy::UserSupplied:
            candidates = supplied;
            break;
        case GPStrategy::SelfInjective: {
            if (!is_self_injective(a))
                throw std::invalid_argument(
                    "gp_base_list: algebra is not self-injective");
            if (!supplied.empty())
                candidates = supplied;
            else if (is_truncated_polynomial_shape(a))
                candidates = indecomposables_uniserial(a->field.p, a->dim, maxdim);
            else
                throw std::invalid_argument(
                    "gp_base_list: self-injective strategy needs an "
                    "indecomposable list for this algebra");
            break;
        }
        case GPStrategy::FiniteGlobalDimension: {
            if (!finite_global_dimension(a, 8).has_value())
                throw std::invalid_argument(
                    "gp_base_list: finite global dimension not detected");
            for (const auto& ip : indecomposable_projectives(a))
                candidates.push_back(ip.projective);
            break;
        }
    }
    std::vector<Module> out;
    for (const auto& x : candidates) {
        if (x.dim == 0 || x.dim > maxdim) continue;
        if (gp_oracle(x).tag != GPTag::ProvenGP)
            throw std::invalid_argument(
                "gp_base_list: candidate not certified Gorenstein projective");
        auto dec = decompose(x);
        if (!dec.certified || dec.factors.size() != 1)
            throw std::invalid_argument("gp_base_list: candidate decomposable");
        bool dup = false;
        for (const auto& prev : out)
            if (is_isomorphic(prev, x)) { dup = true; break; }
        if (!dup) out.push_back(x);
    }
    return out;
}

GPCensus enumerate_gp_gamma(const TriangularPtr& g,
                            const std::vector<Module>& r_list,
                            const std::vector<Module>& s_list,
                            std::size_t bound, const ConditionReport& c1,
                            const ConditionReport& c2,
                            const CensusConfig& cfg) {
    if (!c1.pass || !c2.pass)
        throw std::invalid_argument(
            "enumerate_gp_gamma: flatness conditions not established");

    GPCensus census;
    census.gamma = g;
    census.bound = bound;
    census.strategy = "exhaustive";

    const uint32_t p = g->r->field.p;
    SearchConfig scfg;
    scfg.seed = cfg.seed;
    std::mt19937_64 rng(cfg.seed ^ 0x9E3779B97F4A7C15ull);

    auto consider = [&](const Module& flat_factor) {
        for (const auto& rep : census.reps)
            if (rep.flat.dim == flat_factor.dim &&
                is_isomorphic(rep.flat, flat_factor, scfg))
                return;
        TripleModule trip = module_to_triple(flat_factor, g);
        GPTripleVerdict v = is_gp_triple(trip, c1, c2, cfg.oracle_bound);
        if (v.verdict.tag == GPTag::ProvenGP)
            census.reps.push_back(GPCensusEntry{trip, flat_factor, v});
        else
            census.complete = false; // cannot certify this factor
    };

    auto handle_triple = [&](const TripleModule& t) {
        Module flat = triple_to_module(t);
        if (flat.dim > bound) return;
        Decomposition dec = decompose(flat, scfg);
        if (!dec.certified) census.complete = false;
        for (const auto& f : dec.factors) consider(f);
    };

    std::vector<std::size_t> xs;
    sweep_sums(r_list, bound, 0, xs, [&](const std::vector<std::size_t>& xi) {
        Module x = assemble_sum(g->r, r_list, xi);
        TensorData td = tensor_MX(g->m, x);
        const std::size_t q = td.module.dim;
        if (x.dim + q > bound) return;

        std::vector<std::size_t> cs;
        sweep_sums(
            s_list, bound - x.dim - q, 0, cs,
            [&](const std::vector<std::size_t>& ci) {
                Module c = assemble_sum(g->s, s_list, ci);
                Ext1Classes cls = ext1_classes(c, td.module);
                const std::size_t k = cls.reps.size();
                std::vector<Matrix> cocycles;
                if (k == 0) {
                    if (!cls.res.projectives.empty())
                        cocycles.push_back(Matrix(
                            g->r->field, td.module.dim,
                            cls.res.projectives.size() > 1
                                ? cls.res.projectives[1].dim
                                : 0));
                    else
                        cocycles.push_back(Matrix(g->r->field, td.module.dim, 0));
                } else if (ipow_capped(p, k, cfg.cocycle_cap) <=
                           cfg.cocycle_cap) {
                    uint64_t total = ipow_capped(p, k, cfg.cocycle_cap);
                    for (uint64_t mask = 0; mask < total; ++mask) {
                        Matrix co(g->r->field, cls.reps[0].rows(),
                                  cls.reps[0].cols());
                        uint64_t v = mask;
                        for (std::size_t i = 0; i < k; ++i) {
                            uint32_t coeff = static_cast<uint32_t>(v % p);
                            v /= p;
                            if (coeff) co = co + scale(coeff, cls.reps[i]);
                        }
                        cocycles.push_back(co);
                    }
                } else {
                    census.strategy = "generator-strategy";
                    census.complete = false;
                    cocycles.push_back(
                        Matrix(g->r->field, cls.reps[0].rows(),
                               cls.reps[0].cols()));
                    for (const auto& r : cls.reps) cocycles.push_back(r);
                    for (std::size_t t0 = 0; t0 < cfg.random_cocycles; ++t0) {
                        Matrix co(g->r->field, cls.reps[0].rows(),
                                  cls.reps[0].cols());
                        for (const auto& r : cls.reps) {
                            uint32_t coeff = static_cast<uint32_t>(rng() % p);
                            if (coeff) co = co + scale(coeff, r);
                        }
                        cocycles.push_back(co);
                    }
                }
                for (const auto& co : cocycles) {
                    ExtensionData ext = extension_from_cocycle(cls, td.module, co);
                    TripleModule t =
                        make_triple(g, x, ext.middle, ext.inclusion.matrix);
                    handle_triple(t);
                }
            });
    });
    return census;
}

std::size_t cm_count(const GPCensus& census) { return census.reps.size(); }

bool is_cm_free(const GPCensus& census) {
    for (const auto& e : census.reps)
        if (!is_projective(e.flat)) return false;
    return true;
}

std::vector<Module> raw_census_t2_truncated(const TriangularPtr& g,
                                            std::size_t t, std::size_t bound) {
    const FieldPrime f = g->r->field;
    const uint32_t p = f.p;
    std::vector<Module> reps;

    auto consider = [&](const Module& flat) {
        Decomposition dec = decompose(flat);
        if (!dec.certified)
            throw std::runtime_error("raw census: decomposition not certified");
        for (const auto& fac : dec.factors) {
            bool seen = false;
            for (const auto& r : reps)
                if (r.dim == fac.dim && is_isomorphic(r, fac)) {
                    seen = true;
                    break;
                }
            if (!seen) reps.push_back(fac);
        }
    };

    // enumerate all n x n matrices over F_p whose t-th power vanishes
    auto each_nilpotent = [&](std::size_t n,
                              const std::function<void(const Matrix&)>& fn) {
        if (n == 0) {
            fn(Matrix(f, 0, 0));
            return;
        }
        uint64_t total = ipow_capped(p, n * n, 1ull << 26);
        if (total > (1ull << 26))
            throw std::invalid_argument("raw census: dimension too large");
        for (uint64_t mask = 0; mask < total; ++mask) {
            Matrix m(f, n, n);
            uint64_t v = mask;
            for (std::size_t c = 0; c < n * n; ++c) {
                m.set(c / n, c % n, static_cast<uint32_t>(v % p));
                v /= p;
            }
            if (mat_pow(m, t).is_zero()) fn(m);
        }
    };

    auto module_from_nilpotent = [&](const AlgebraPtr& a, const Matrix& n) {
        Module m{a, n.rows(), {}};
        for (std::size_t k = 0; k < a->dim; ++k) m.actions.push_back(mat_pow(n, k));
        return m;
    };

    for (std::size_t dx = 0; dx <= bound; ++dx) {
        for (std::size_t dy = 0; dx + dy <= bound; ++dy) {
            each_nilpotent(dx, [&](const Matrix& nx) {
                Module x = module_from_nilpotent(g->r, nx);
                TensorData td = tensor_MX(g->m, x);
                const std::size_t q = td.module.dim;
                if (q > dy) return; // no injective phi exists
                each_nilpotent(dy, [&](const Matrix& ny) {
                    Module y = module_from_nilpotent(g->s, ny);
                    uint64_t total = ipow_capped(p, dy * q, 1ull << 26);
                    for (uint64_t mask = 0; mask < total; ++mask) {
                        Matrix phi(f, dy, q);
                        uint64_t v = mask;
                        for (std::size_t c = 0; c < dy * q; ++c) {
                            phi.set(c / q, c % q, static_cast<uint32_t>(v % p));
                            v /= p;
                        }
                        bool linear = true;
                        for (std::size_t si = 0; si < g->s->dim && linear; ++si)
                            linear = phi * td.module.actions[si] ==
                                     y.actions[si] * phi;
                        if (!linear) continue;
                        if (rank_of(phi) != q) continue;
                        TripleModule trip = make_triple(g, x, y, phi);
                        ModuleHom ph{td.module, y, phi};
                        auto ck = cokernel(ph);
                        if (gp_oracle(x).tag != GPTag::ProvenGP) continue;
                        if (gp_oracle(ck.module).tag != GPTag::ProvenGP) continue;
                        consider(triple_to_module(trip));
                    }
                });
            });
        }
    }
    return reps;
}

MatchReport verify_census_matching(const GPCensus& census,
                           const std::vector<Module>& s_list) {
    MatchReport rep;
    const auto& g = census.gamma;
    std::vector<std::pair<std::string, Module>> patterns;
    const auto& projs = indecomposable_projectives(g->r);
    for (std::size_t i = 0; i < projs.size(); ++i)
        patterns.emplace_back("e1_lambda(P" + std::to_string(i) + ")",
                              triple_to_module(e1_lambda(g, projs[i].projective)));
    for (std::size_t i = 0; i < s_list.size(); ++i)
        patterns.emplace_back("(0, C" + std::to_string(i) + ")",
                              triple_to_module(e2_lambda(g, s_list[i])));

    for (std::size_t i = 0; i < census.reps.size(); ++i) {
        const Module& flat = census.reps[i].flat;
        bool matched = false;
        for (const auto& [name, pat] : patterns)
            if (pat.dim == flat.dim && is_isomorphic(pat, flat)) {
                rep.matching.push_back("rep " + std::to_string(i) + " ~ " + name);
                matched = true;
                break;
            }
        if (!matched) {
            rep.ok = false;
            rep.matching.push_back("rep " + std::to_string(i) + " UNMATCHED");
        }
    }
    return rep;
}

} // namespace gptk
