#include "gptk/module.hpp"

#include <random>
#include <stdexcept>

namespace gptk {

namespace {

void check_same_algebra(const Module& x, const Module& y) {
    if (!same_algebra(x.algebra, y.algebra))
        throw std::invalid_argument("modules over different algebras");
}

/// Enumerate all coefficient tuples in F_p^n when p^n <= cap; calls fn on
/// each nonzero tuple, stops early when fn returns true. Returns false when
/// the space was too large to sweep.
template <typename Fn>
bool sweep_coeffs(uint32_t p, std::size_t n, uint64_t cap, Fn&& fn) {
    double total = 1;
    for (std::size_t i = 0; i < n && total <= (double)cap; ++i) total *= p;
    if (total > (double)cap) return false;
    std::vector<uint32_t> digits(n, 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && ++digits[i] == p) digits[i++] = 0;
        if (i == n) break;
        if (fn(digits)) break;
    }
    return true;
}

Matrix combine(const std::vector<Matrix>& basis, const std::vector<uint32_t>& coeffs) {
    Matrix r(basis.front().field(), basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i]) r = r + scale(coeffs[i], basis[i]);
    return r;
}

} // namespace

Matrix Module::action_of(const Matrix& coords) const {
    Matrix r(algebra->field, dim, dim);
    for (std::size_t i = 0; i < algebra->dim; ++i)
        if (coords.at(i, 0)) r = r + scale(coords.at(i, 0), actions[i]);
    return r;
}

ValidationReport validate_module(const Module& x) {
    const Algebra& a = *x.algebra;
    if (x.actions.size() != a.dim) return {false, "one action matrix per basis element required"};
    for (const auto& m : x.actions)
        if (m.rows() != x.dim || m.cols() != x.dim || m.p() != a.field.p)
            return {false, "action matrix shape mismatch"};
    if (!(x.action_of(a.unit_vector()) == Matrix::identity(a.field, x.dim)))
        return {false, "unit does not act as identity"};
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Matrix lhs = x.actions[i] * x.actions[j];
            Matrix rhs(a.field, x.dim, x.dim);
            for (std::size_t k = 0; k < a.dim; ++k) {
                uint32_t c = a.left_mult[i].at(k, j);
                if (c) rhs = rhs + scale(c, x.actions[k]);
            }
            if (!(lhs == rhs))
                return {false, "actions violate structure constants at pair (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")"};
        }
    return {true, ""};
}

bool is_module_hom(const ModuleHom& f) {
    if (!same_algebra(f.source.algebra, f.target.algebra)) return false;
    if (f.matrix.rows() != f.target.dim || f.matrix.cols() != f.source.dim) return false;
    for (std::size_t i = 0; i < f.source.algebra->dim; ++i)
        if (!(f.target.actions[i] * f.matrix == f.matrix * f.source.actions[i]))
            return false;
    return true;
}

Module zero_module(const AlgebraPtr& a) {
    return Module{a, 0, std::vector<Matrix>(a->dim, Matrix(a->field, 0, 0))};
}

Module regular_module(const AlgebraPtr& a, Side side) {
    if (side == Side::Left) return Module{a, a->dim, a->left_mult};
    std::vector<Matrix> acts;
    acts.reserve(a->dim);
    for (std::size_t i = 0; i < a->dim; ++i) acts.push_back(a->right_mult(i));
    return Module{opposite(a), a->dim, std::move(acts)};
}

std::vector<Matrix> hom_space(const Module& x, const Module& y) {
    check_same_algebra(x, y);
    const FieldPrime f = x.algebra->field;
    const std::size_t nx = x.dim, ny = y.dim;
    if (nx == 0 || ny == 0) return {};
    // rho_y(e_i) F - F rho_x(e_i) = 0, col-major vec:
    // (I (x) rho_y(i) - rho_x(i)^T (x) I) vec F = 0
    Matrix sys(f, 0, nx * ny);
    Matrix idx = Matrix::identity(f, nx);
    Matrix idy = Matrix::identity(f, ny);
    for (std::size_t i = 0; i < x.algebra->dim; ++i) {
        Matrix block = kronecker(idx, y.actions[i]) -
                       kronecker(transpose(x.actions[i]), idy);
        sys = vstack(sys, block);
    }
    Matrix ker = kernel_basis(sys);
    std::vector<Matrix> basis;
    basis.reserve(ker.rows());
    for (std::size_t r = 0; r < ker.rows(); ++r)
        basis.push_back(unvec(ker.row(r), ny, nx));
    return basis;
}

DirectSum direct_sum(const std::vector<Module>& xs) {
    if (xs.empty()) throw std::invalid_argument("direct_sum of empty list: pass the algebra's zero module");
    AlgebraPtr a = xs.front().algebra;
    std::size_t total = 0;
    for (const auto& x : xs) {
        if (!same_algebra(a, x.algebra))
            throw std::invalid_argument("direct_sum: algebra mismatch");
        total += x.dim;
    }
    const FieldPrime f = a->field;
    Module sum{a, total, std::vector<Matrix>(a->dim, Matrix(f, total, total))};
    std::size_t off = 0;
    for (const auto& x : xs) {
        for (std::size_t i = 0; i < a->dim; ++i)
            sum.actions[i].set_block(off, off, x.actions[i]);
        off += x.dim;
    }
    DirectSum out{sum, {}, {}};
    off = 0;
    for (const auto& x : xs) {
        Matrix inj(f, total, x.dim), prj(f, x.dim, total);
        inj.set_block(off, 0, Matrix::identity(f, x.dim));
        prj.set_block(0, off, Matrix::identity(f, x.dim));
        out.injections.push_back(ModuleHom{x, sum, inj});
        out.projections.push_back(ModuleHom{sum, x, prj});
        off += x.dim;
    }
    return out;
}

Module induced_on_columns(const Module& ambient, const Matrix& incl) {
    const std::size_t k = incl.cols();
    Module sub{ambient.algebra, k, {}};
    sub.actions.reserve(ambient.actions.size());
    for (const auto& act : ambient.actions) {
        auto sol = solve(incl, act * incl);
        if (!sol) throw std::logic_error("induced_on_columns: columns do not span a submodule");
        sub.actions.push_back(*sol);
    }
    return sub;
}

SubquotientData kernel(const ModuleHom& f) {
    Matrix incl = transpose(kernel_basis(f.matrix));
    Module k = induced_on_columns(f.source, incl);
    return SubquotientData{k, ModuleHom{k, f.source, incl}};
}

SubquotientData cokernel(const ModuleHom& f) {
    // quotient of the target by the column space of f
    QuotientBasis qb = quotient_basis(transpose(f.matrix), f.target.dim);
    const std::size_t q = qb.projection.rows();
    Module c{f.target.algebra, q, {}};
    Matrix lift = transpose(qb.representatives);
    for (const auto& act : f.target.actions)
        c.actions.push_back(qb.projection * act * lift);
    return SubquotientData{c, ModuleHom{f.target, c, qb.projection}};
}

SubquotientData span_submodule(const Module& x, const Matrix& columns) {
    Matrix incl = column_space_basis(columns);
    Module s = induced_on_columns(x, incl);
    return SubquotientData{s, ModuleHom{s, x, incl}};
}

SubquotientData radical_of_module(const Module& x) {
    const Matrix& rad = x.algebra->radical;
    Matrix cols(x.algebra->field, x.dim, 0);
    for (std::size_t r = 0; r < rad.rows(); ++r)
        cols = hstack(cols, x.action_of(transpose(rad.row(r))));
    return span_submodule(x, cols);
}

SubquotientData top(const Module& x) {
    SubquotientData r = radical_of_module(x);
    return cokernel(r.map);
}

namespace {

std::optional<Matrix> invertible_in_span(const std::vector<Matrix>& basis,
                                         std::size_t n, const SearchConfig& cfg) {
    if (basis.empty()) return std::nullopt;
    const uint32_t p = basis.front().p();
    for (const auto& b : basis)
        if (rank_of(b) == n) return b;
    std::mt19937_64 rng(cfg.seed);
    for (std::size_t t = 0; t < cfg.random_trials; ++t) {
        std::vector<uint32_t> coeffs(basis.size());
        for (auto& c : coeffs) c = static_cast<uint32_t>(rng() % p);
        Matrix cand = combine(basis, coeffs);
        if (rank_of(cand) == n) return cand;
    }
    std::optional<Matrix> found;
    bool swept = sweep_coeffs(p, basis.size(), cfg.exhaustive_cap,
                              [&](const std::vector<uint32_t>& coeffs) {
                                  Matrix cand = combine(basis, coeffs);
                                  if (rank_of(cand) == n) { found = cand; return true; }
                                  return false;
                              });
    if (found) return found;
    if (swept) return std::nullopt;      // exhaustive: genuinely none
    return std::nullopt;                 // capped: caller falls back
}

} // namespace

std::optional<ModuleHom> is_isomorphic(const Module& x, const Module& y,
                                       const SearchConfig& cfg) {
    check_same_algebra(x, y);
    if (x.dim != y.dim) return std::nullopt;
    if (x.dim == 0) return ModuleHom{x, y, Matrix(x.algebra->field, 0, 0)};
    std::vector<Matrix> homs = hom_space(x, y);
    if (homs.empty()) return std::nullopt;
    if (auto m = invertible_in_span(homs, x.dim, cfg))
        return ModuleHom{x, y, *m};

    double total = 1;
    for (std::size_t i = 0; i < homs.size() && total <= (double)cfg.exhaustive_cap; ++i)
        total *= x.algebra->field.p;
    if (total <= (double)cfg.exhaustive_cap) return std::nullopt; // swept exhaustively

    // cap exceeded: compare decompositions factor by factor
    Decomposition dx = decompose(x, cfg), dy = decompose(y, cfg);
    if (dx.factors.size() != dy.factors.size()) return std::nullopt;
    std::vector<bool> used(dy.factors.size(), false);
    std::size_t off_x = 0;
    Matrix block(x.algebra->field, y.dim, x.dim);
    std::size_t y_offsets_total = 0;
    std::vector<std::size_t> y_off(dy.factors.size());
    for (std::size_t j = 0; j < dy.factors.size(); ++j) {
        y_off[j] = y_offsets_total;
        y_offsets_total += dy.factors[j].dim;
    }
    for (const auto& fac : dx.factors) {
        bool matched = false;
        for (std::size_t j = 0; j < dy.factors.size(); ++j) {
            if (used[j] || dy.factors[j].dim != fac.dim) continue;
            if (auto iso = is_isomorphic(fac, dy.factors[j], cfg)) {
                used[j] = true;
                block.set_block(y_off[j], off_x, iso->matrix);
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
        off_x += fac.dim;
    }
    // iso = coby * block * inverse(cobx)
    Matrix inv_cobx = *inverse(dx.change_of_basis);
    return ModuleHom{x, y, dy.change_of_basis * block * inv_cobx};
}

namespace {

struct FittingSplit {
    Matrix incl_a, incl_b; // column bases of the two summands
};

std::optional<FittingSplit> try_fitting(const Module& x, const Matrix& theta) {
    Matrix stable = mat_pow(theta, x.dim);
    std::size_t r = rank_of(stable);
    if (r == 0 || r == x.dim) return std::nullopt;
    Matrix incl_k = transpose(kernel_basis(stable));
    Matrix incl_i = column_space_basis(stable);
    if (rank_of(hstack(incl_k, incl_i)) != x.dim) return std::nullopt;
    return FittingSplit{incl_k, incl_i};
}

std::optional<FittingSplit> find_split(const Module& x, const SearchConfig& cfg,
                                       bool& certified) {
    std::vector<Matrix> endos = hom_space(x, x);
    const uint32_t p = x.algebra->field.p;
    for (const auto& e : endos)
        if (auto s = try_fitting(x, e)) return s;
    std::mt19937_64 rng(cfg.seed ^ (x.dim * 0x9e3779b97f4a7c15ull));
    for (std::size_t t = 0; t < cfg.random_trials; ++t) {
        std::vector<uint32_t> coeffs(endos.size());
        for (auto& c : coeffs) c = static_cast<uint32_t>(rng() % p);
        Matrix cand = combine(endos, coeffs);
        if (auto s = try_fitting(x, cand)) return s;
    }
    std::optional<FittingSplit> found;
    bool swept = sweep_coeffs(p, endos.size(), cfg.exhaustive_cap,
                              [&](const std::vector<uint32_t>& coeffs) {
                                  Matrix cand = combine(endos, coeffs);
                                  if (auto s = try_fitting(x, cand)) { found = s; return true; }
                                  return false;
                              });
    if (found) return found;
    certified = swept;
    return std::nullopt;
}

} // namespace

Decomposition decompose(const Module& x, const SearchConfig& cfg) {
    const FieldPrime f = x.algebra->field;
    if (x.dim == 0) return Decomposition{{}, Matrix(f, 0, 0), true};
    bool certified = true;
    auto split = find_split(x, cfg, certified);
    if (!split)
        return Decomposition{{x}, Matrix::identity(f, x.dim), certified};

    Module ma = induced_on_columns(x, split->incl_a);
    Module mb = induced_on_columns(x, split->incl_b);
    Decomposition da = decompose(ma, cfg);
    Decomposition db = decompose(mb, cfg);
    Decomposition out;
    out.factors = da.factors;
    out.factors.insert(out.factors.end(), db.factors.begin(), db.factors.end());
    out.change_of_basis = hstack(split->incl_a * da.change_of_basis,
                                 split->incl_b * db.change_of_basis);
    out.certified = da.certified && db.certified;
    return out;
}

Module dual(const Module& x) {
    Module d{opposite(x.algebra), x.dim, {}};
    d.actions.reserve(x.actions.size());
    for (const auto& act : x.actions) d.actions.push_back(transpose(act));
    return d;
}

ModuleHom dual_hom(const ModuleHom& f) {
    return ModuleHom{dual(f.target), dual(f.source), transpose(f.matrix)};
}

} // namespace gptk
