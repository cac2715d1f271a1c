#include "gptk/homological.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gptk {

namespace {

/// Matrix whose columns are vec(basis[t]); coordinates of an element of the
/// span are solved against it.
Matrix basis_columns(const std::vector<Matrix>& basis, FieldPrime f,
                     std::size_t rows, std::size_t cols) {
    Matrix b(f, rows * cols, basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t)
        b.set_block(0, t, vec(basis[t]));
    return b;
}

Matrix coords_in_basis(const Matrix& basis_cols, const Matrix& elem) {
    auto c = solve(basis_cols, vec(elem));
    if (!c) throw std::logic_error("element not in hom-space span");
    return *c;
}

/// Solve an intertwiner f : x -> y with the extra affine condition
/// post * f = rhs. Returns nullopt when no such hom exists.
std::optional<Matrix> solve_hom_with_condition(const Module& x, const Module& y,
                                               const Matrix& post, const Matrix& rhs) {
    const FieldPrime f = x.algebra->field;
    const std::size_t nx = x.dim, ny = y.dim;
    if (nx == 0 || ny == 0) {
        if (rhs.is_zero()) return Matrix(f, ny, nx);
        return std::nullopt;
    }
    Matrix idx = Matrix::identity(f, nx);
    Matrix idy = Matrix::identity(f, ny);
    Matrix sys(f, 0, nx * ny);
    for (std::size_t i = 0; i < x.algebra->dim; ++i)
        sys = vstack(sys, kronecker(idx, y.actions[i]) -
                              kronecker(transpose(x.actions[i]), idy));
    Matrix cond = kronecker(idx, post); // vec(post * f) = (I (x) post) vec f
    Matrix a = vstack(sys, cond);
    Matrix b = vstack(Matrix(f, sys.rows(), 1), vec(rhs));
    auto sol = solve(a, b);
    if (!sol) return std::nullopt;
    return unvec(*sol, ny, nx);
}

struct AlgCache {
    bool have_projs = false;
    std::vector<IndecProjective> projs;
    std::optional<bool> self_inj;
    std::map<std::size_t, std::optional<std::size_t>> gldim;
};

AlgCache& cache_for(const AlgebraPtr& a) {
    static std::map<const Algebra*, AlgCache> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return registry[a.get()];
}

} // namespace

ComplexWindow make_window(long lo, std::vector<Module> terms,
                          std::vector<ModuleHom> diffs) {
    if (terms.empty() || diffs.size() + 1 != terms.size())
        throw std::invalid_argument("window: need one differential per adjacent pair");
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        // diffs[i] : terms[i+1] -> terms[i]
        if (diffs[i].matrix.rows() != terms[i].dim ||
            diffs[i].matrix.cols() != terms[i + 1].dim)
            throw std::invalid_argument("window: differential shape mismatch");
        if (!is_module_hom(diffs[i]))
            throw std::invalid_argument("window: differential is not a module hom");
    }
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
        if (!(diffs[i].matrix * diffs[i + 1].matrix).is_zero())
            throw std::invalid_argument("window: d o d != 0");
    ComplexWindow w;
    w.lo = lo;
    w.hi = lo + static_cast<long>(terms.size()) - 1;
    w.terms = std::move(terms);
    w.diffs = std::move(diffs);
    return w;
}

const std::vector<IndecProjective>& indecomposable_projectives(const AlgebraPtr& a) {
    AlgCache& c = cache_for(a);
    if (!c.have_projs) {
        Module reg = regular_module(a, Side::Left);
        Decomposition dec = decompose(reg);
        if (!dec.certified)
            throw std::runtime_error("regular module decomposition not certified");
        std::vector<IndecProjective> out;
        for (const auto& p : dec.factors) {
            SubquotientData t = top(p);
            bool seen = false;
            for (const auto& known : out)
                if (is_isomorphic(known.simple_top, t.module)) { seen = true; break; }
            if (!seen)
                out.push_back(IndecProjective{p, t.module, t.map.matrix});
        }
        c.projs = std::move(out);
        c.have_projs = true;
    }
    return c.projs;
}

std::vector<Module> simple_modules(const AlgebraPtr& a) {
    std::vector<Module> out;
    for (const auto& ip : indecomposable_projectives(a)) out.push_back(ip.simple_top);
    return out;
}

ModuleHom projective_cover(const Module& x) {
    const AlgebraPtr& a = x.algebra;
    const FieldPrime f = a->field;
    if (x.dim == 0) {
        Module z = zero_module(a);
        return ModuleHom{z, x, Matrix(f, 0, 0)};
    }
    SubquotientData t = top(x);
    Decomposition dec = decompose(t.module);
    const auto& projs = indecomposable_projectives(a);

    std::vector<Module> pieces;
    std::vector<Matrix> tops_to_factor; // iso top(P_j) -> factor_j
    std::vector<Matrix> top_projs;
    for (const auto& s : dec.factors) {
        bool found = false;
        for (const auto& ip : projs) {
            if (auto iso = is_isomorphic(ip.simple_top, s)) {
                pieces.push_back(ip.projective);
                tops_to_factor.push_back(iso->matrix);
                top_projs.push_back(ip.top_projection);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no projective cover for a top factor");
    }
    Module p = pieces.empty() ? zero_module(a) : direct_sum(pieces).module;

    // g : P -> top(x), blockwise through the decomposition witness
    Matrix g(f, t.module.dim, p.dim);
    std::size_t off_p = 0, off_t = 0;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        Matrix cob_block = dec.change_of_basis.block(0, off_t, t.module.dim,
                                                     dec.factors[j].dim);
        Matrix block = cob_block * tops_to_factor[j] * top_projs[j];
        g.set_block(0, off_p, block); // rows span all of top(x): set columns
        off_p += pieces[j].dim;
        off_t += dec.factors[j].dim;
    }
    auto lift = solve_hom_with_condition(p, x, t.map.matrix, g);
    if (!lift) throw std::logic_error("projective cover lift failed");
    return ModuleHom{p, x, *lift};
}

Module syzygy(const Module& x, std::size_t i) {
    Module cur = x;
    for (std::size_t k = 0; k < i; ++k)
        cur = kernel(projective_cover(cur)).module;
    return cur;
}

Resolution projective_resolution(const Module& x, std::size_t length) {
    Resolution res;
    ModuleHom cover = projective_cover(x);
    res.projectives.push_back(cover.source);
    res.augmentation = cover;
    SubquotientData k0 = kernel(cover);
    Module omega = k0.module;
    ModuleHom incl = k0.map;
    for (std::size_t i = 1; i <= length; ++i) {
        ModuleHom c = projective_cover(omega);
        res.projectives.push_back(c.source);
        res.diffs.push_back(ModuleHom{c.source, res.projectives[i - 1],
                                      incl.matrix * c.matrix});
        SubquotientData k = kernel(c);
        omega = k.module;
        incl = k.map;
    }
    return res;
}

namespace {

/// delta : Hom(P_{j-1}, y) -> Hom(P_j, y), precomposition with d_j, as a
/// matrix in the given hom bases.
Matrix hom_complex_map(const std::vector<Matrix>& from_basis,
                       const std::vector<Matrix>& to_basis,
                       const Matrix& d, const Module& y, const Module& pj) {
    FieldPrime f = y.algebra->field;
    Matrix m(f, to_basis.size(), from_basis.size());
    if (from_basis.empty()) return m;
    if (to_basis.empty()) {
        for (const auto& fb : from_basis)
            if (!(fb * d).is_zero())
                throw std::logic_error("hom complex map misses target span");
        return m;
    }
    Matrix cols = basis_columns(to_basis, f, y.dim, pj.dim);
    for (std::size_t t = 0; t < from_basis.size(); ++t)
        m.set_block(0, t, coords_in_basis(cols, from_basis[t] * d));
    return m;
}

} // namespace

std::size_t ext_dim(const Module& x, const Module& y, std::size_t i) {
    if (!same_algebra(x.algebra, y.algebra))
        throw std::invalid_argument("ext: algebra mismatch");
    if (i == 0) return hom_space(x, y).size();
    if (x.dim == 0 || y.dim == 0) return 0;
    Resolution res = projective_resolution(x, i + 1);
    std::vector<std::vector<Matrix>> h(i + 2);
    for (std::size_t j = 0; j <= i + 1; ++j) h[j] = hom_space(res.projectives[j], y);
    Matrix delta_i = hom_complex_map(h[i - 1], h[i], res.diffs[i - 1].matrix, y,
                                     res.projectives[i]);
    Matrix delta_i1 = hom_complex_map(h[i], h[i + 1], res.diffs[i].matrix, y,
                                      res.projectives[i + 1]);
    return h[i].size() - rank_of(delta_i) - rank_of(delta_i1);
}

Ext1Classes ext1_classes(const Module& x, const Module& y) {
    Ext1Classes out;
    out.res = projective_resolution(x, 2);
    const Module& p0 = out.res.projectives[0];
    const Module& p1 = out.res.projectives[1];
    const FieldPrime f = x.algebra->field;
    std::vector<Matrix> h1 = hom_space(p1, y);
    if (h1.empty()) return out;
    const Matrix& d1 = out.res.diffs[0].matrix;
    const Matrix& d2 = out.res.diffs[1].matrix;

    // cocycles: coefficient kernel of F -> F d2
    Matrix cc(f, y.dim * out.res.projectives[2].dim, h1.size());
    for (std::size_t t = 0; t < h1.size(); ++t)
        cc.set_block(0, t, vec(h1[t] * d2));
    Matrix cocycle_rows = kernel_basis(cc); // rows = coefficient vectors

    // coboundaries G d1 expressed in the same coefficients
    std::vector<Matrix> h0 = hom_space(p0, y);
    Matrix h1_cols = basis_columns(h1, f, y.dim, p1.dim);
    Matrix cob_rows(f, 0, h1.size());
    for (const auto& g : h0)
        cob_rows = vstack(cob_rows, transpose(coords_in_basis(h1_cols, g * d1)));

    // class representatives: extend a basis of the coboundary space inside
    // the cocycle space
    RrefResult base = rref(cob_rows);
    Matrix span = base.reduced.block(0, 0, base.rank, h1.size());
    std::size_t current = base.rank;
    for (std::size_t r = 0; r < cocycle_rows.rows(); ++r) {
        Matrix cand = vstack(span, cocycle_rows.row(r));
        if (rank_of(cand) > current) {
            span = cand;
            ++current;
            Matrix rep(f, y.dim, p1.dim);
            for (std::size_t t = 0; t < h1.size(); ++t)
                if (cocycle_rows.at(r, t))
                    rep = rep + scale(cocycle_rows.at(r, t), h1[t]);
            out.reps.push_back(rep);
        }
    }
    return out;
}

ExtensionData extension_from_cocycle(const Ext1Classes& cls, const Module& y,
                                     const Matrix& cocycle) {
    const Module& p0 = cls.res.projectives[0];
    const Module& p1 = cls.res.projectives[1];
    const Module& x = cls.res.augmentation.target;
    const FieldPrime f = y.algebra->field;
    const std::size_t ny = y.dim, n0 = p0.dim;
    const Matrix& d1 = cls.res.diffs[0].matrix;

    // relations (cocycle(u), -d1(u)) inside y (+) P_0
    Matrix rel(f, p1.dim, ny + n0);
    for (std::size_t u = 0; u < p1.dim; ++u) {
        for (std::size_t r = 0; r < ny; ++r) rel.set(u, r, cocycle.at(r, u));
        for (std::size_t r = 0; r < n0; ++r)
            rel.set(u, ny + r, (f.p - d1.at(r, u)) % f.p);
    }
    QuotientBasis qb = quotient_basis(rel, ny + n0);
    Matrix lift = transpose(qb.representatives);

    Module mid{y.algebra, qb.projection.rows(), {}};
    for (std::size_t i = 0; i < y.algebra->dim; ++i) {
        Matrix blockdiag(f, ny + n0, ny + n0);
        blockdiag.set_block(0, 0, y.actions[i]);
        blockdiag.set_block(ny, ny, p0.actions[i]);
        mid.actions.push_back(qb.projection * blockdiag * lift);
    }
    Matrix embed_y(f, ny + n0, ny);
    embed_y.set_block(0, 0, Matrix::identity(f, ny));
    Matrix incl = qb.projection * embed_y;
    Matrix proj = cls.res.augmentation.matrix * lift.block(ny, 0, n0, mid.dim);
    return ExtensionData{mid, ModuleHom{y, mid, incl}, ModuleHom{mid, x, proj}};
}

namespace {

struct TensorFunctor {
    const Module& m_right; // module over opposite(A)

    struct Applied {
        std::size_t dim;
        QuotientBasis qb;
        std::size_t pure_dim;
    };
    Applied apply(const Module& p) const {
        const FieldPrime f = p.algebra->field;
        const std::size_t nm = m_right.dim, np = p.dim;
        Matrix rel(f, 0, nm * np);
        Matrix idm = Matrix::identity(f, nm);
        Matrix idp = Matrix::identity(f, np);
        for (std::size_t e = 0; e < p.algebra->dim; ++e) {
            Matrix r = kronecker(m_right.actions[e], idp) -
                       kronecker(idm, p.actions[e]);
            rel = vstack(rel, transpose(r));
        }
        QuotientBasis qb = quotient_basis(rel, nm * np);
        return Applied{qb.projection.rows(), std::move(qb), nm * np};
    }
    Matrix map(const Applied& from, const Applied& to, const Matrix& g) const {
        Matrix idm = Matrix::identity(g.field(), m_right.dim);
        return to.qb.projection * kronecker(idm, g) * transpose(from.qb.representatives);
    }
};

} // namespace

std::size_t tor_dim(const Module& m_right, const Module& x, std::size_t i) {
    if (!same_algebra(m_right.algebra, opposite(x.algebra)))
        throw std::invalid_argument("tor: right module must live over the opposite algebra");
    TensorFunctor tf{m_right};
    if (i == 0) return tf.apply(x).dim;
    if (m_right.dim == 0 || x.dim == 0) return 0;
    Resolution res = projective_resolution(x, i + 1);
    auto t_prev = tf.apply(res.projectives[i - 1]);
    auto t_i = tf.apply(res.projectives[i]);
    auto t_next = tf.apply(res.projectives[i + 1]);
    Matrix di = tf.map(t_i, t_prev, res.diffs[i - 1].matrix);
    Matrix di1 = tf.map(t_next, t_i, res.diffs[i].matrix);
    return t_i.dim - rank_of(di) - rank_of(di1);
}

namespace {

/// Hom_A(P, A) as a left module over opposite(A), with its hom-matrix basis.
struct StarModule {
    Module module;
    std::vector<Matrix> basis;
};

StarModule star(const Module& p) {
    const AlgebraPtr a = p.algebra;
    AlgebraPtr aop = opposite(a);
    Module reg = regular_module(a, Side::Left);
    std::vector<Matrix> basis = hom_space(p, reg);
    Module m{aop, basis.size(), {}};
    if (basis.empty()) {
        m.actions.assign(aop->dim, Matrix(a->field, 0, 0));
        return {m, basis};
    }
    Matrix cols = basis_columns(basis, a->field, a->dim, p.dim);
    for (std::size_t k = 0; k < a->dim; ++k) {
        Matrix act(a->field, basis.size(), basis.size());
        Matrix rk = a->right_mult(k);
        for (std::size_t t = 0; t < basis.size(); ++t)
            act.set_block(0, t, coords_in_basis(cols, rk * basis[t]));
        m.actions.push_back(act);
    }
    return {m, basis};
}

} // namespace

Module transpose_module(const Module& x) {
    if (x.dim == 0) return zero_module(opposite(x.algebra));
    Resolution res = projective_resolution(x, 1);
    StarModule s0 = star(res.projectives[0]);
    StarModule s1 = star(res.projectives[1]);
    const FieldPrime f = x.algebra->field;
    Matrix map(f, s1.module.dim, s0.module.dim);
    if (!s0.basis.empty() && !s1.basis.empty()) {
        Matrix cols = basis_columns(s1.basis, f, x.algebra->dim, res.projectives[1].dim);
        for (std::size_t t = 0; t < s0.basis.size(); ++t)
            map.set_block(0, t, coords_in_basis(cols, s0.basis[t] * res.diffs[0].matrix));
    }
    return cokernel(ModuleHom{s0.module, s1.module, map}).module;
}

bool is_projective(const Module& x) {
    if (x.dim == 0) return true;
    ModuleHom cover = projective_cover(x);
    auto section = solve_hom_with_condition(x, cover.source, cover.matrix,
                                            Matrix::identity(x.algebra->field, x.dim));
    return section.has_value();
}

bool is_injective(const Module& x) { return is_projective(dual(x)); }

bool is_self_injective(const AlgebraPtr& a) {
    AlgCache& c = cache_for(a);
    if (!c.self_inj) c.self_inj = is_injective(regular_module(a, Side::Left));
    return *c.self_inj;
}

std::optional<std::size_t> finite_global_dimension(const AlgebraPtr& a,
                                                   std::size_t bound) {
    AlgCache& c = cache_for(a);
    auto it = c.gldim.find(bound);
    if (it != c.gldim.end()) return it->second;
    std::size_t gd = 0;
    std::optional<std::size_t> result = 0;
    for (const auto& s : simple_modules(a)) {
        // pd = k-1 where Omega^k is the first vanishing syzygy
        Module cur = s;
        std::optional<std::size_t> pd;
        for (std::size_t k = 1; k <= bound + 1; ++k) {
            cur = kernel(projective_cover(cur)).module;
            if (cur.dim == 0) { pd = k - 1; break; }
        }
        if (!pd || *pd > bound) { result = std::nullopt; break; }
        gd = std::max(gd, *pd);
    }
    if (result) result = gd;
    c.gldim[bound] = result;
    return result;
}

GPVerdict gp_oracle(const Module& x, std::size_t bound) {
    if (bound < 1) throw std::invalid_argument("gp_oracle: bound >= 1");
    const AlgebraPtr& a = x.algebra;
    if (x.dim == 0)
        return GPVerdict{GPTag::ProvenGP, GPReason::ExtVanishing, 0, 0, "", 0};
    Module reg = regular_module(a, Side::Left);
    for (std::size_t i = 1; i <= bound; ++i) {
        std::size_t d = ext_dim(x, reg, i);
        if (d) return GPVerdict{GPTag::NotGP, GPReason::ExtVanishing, 0, i, "module", d};
    }
    Module tr = transpose_module(x);
    if (tr.dim > 0) {
        Module reg_op = regular_module(tr.algebra, Side::Left);
        for (std::size_t i = 1; i <= bound; ++i) {
            std::size_t d = ext_dim(tr, reg_op, i);
            if (d) return GPVerdict{GPTag::NotGP, GPReason::ExtVanishing, 0, i, "transpose", d};
        }
    }
    if (is_projective(x))
        return GPVerdict{GPTag::ProvenGP, GPReason::ExtVanishing, 0, 0, "", 0};
    if (is_self_injective(a))
        return GPVerdict{GPTag::ProvenGP, GPReason::SelfInjective, 0, 0, "", 0};
    if (finite_global_dimension(a, bound))
        return GPVerdict{GPTag::ProvenGP, GPReason::FiniteGlobalDimension, 0, 0, "",
                         0};
    return GPVerdict{GPTag::GPUpToBound, GPReason::ExtVanishing, bound, 0, "", 0};
}

GPVerdict gi_oracle(const Module& x, std::size_t bound) {
    return gp_oracle(dual(x), bound);
}

bool is_totally_acyclic_window(const ComplexWindow& c) {
    for (const auto& t : c.terms)
        if (!is_projective(t))
            throw std::invalid_argument("window term is not projective");
    const std::size_t n = c.terms.size();
    if (n < 3) return true; // no interior index
    // exactness at interior positions
    for (std::size_t i = 1; i + 1 < n; ++i) {
        // d into C_i is diffs[i], d out of C_i is diffs[i-1]
        std::size_t rk_out = rank_of(c.diffs[i - 1].matrix);
        std::size_t rk_in = rank_of(c.diffs[i].matrix);
        if (rk_out + rk_in != c.terms[i].dim) return false;
    }
    // Hom(-, A) exactness
    Module reg = regular_module(c.terms.front().algebra, Side::Left);
    std::vector<std::vector<Matrix>> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = hom_space(c.terms[i], reg);
    std::vector<Matrix> delta; // delta[i] : Hom(C_i, A) -> Hom(C_{i+1}, A)
    for (std::size_t i = 0; i + 1 < n; ++i)
        delta.push_back(hom_complex_map(h[i], h[i + 1], c.diffs[i].matrix, reg,
                                        c.terms[i + 1]));
    for (std::size_t i = 1; i + 1 < n; ++i) {
        std::size_t rk_in = rank_of(delta[i - 1]);
        std::size_t rk_out = rank_of(delta[i]);
        if (rk_in + rk_out != h[i].size()) return false;
    }
    return true;
}

} // namespace gptk
