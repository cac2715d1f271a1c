#include "gptk/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace gptk {

namespace {

Matrix coords_vector(FieldPrime f, const std::vector<uint32_t>& v) {
    Matrix m(f, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
}

/// true iff v (a 1 x n row) lies in the rowspace described by `rr`.
bool in_rowspace(const RrefResult& rr, const Matrix& v) {
    Matrix w = v;
    const uint32_t p = v.p();
    for (std::size_t r = 0; r < rr.rank; ++r) {
        uint32_t f = w.at(0, rr.pivot_columns[r]);
        if (!f) continue;
        for (std::size_t c = 0; c < w.cols(); ++c) {
            uint64_t x = w.at(0, c) + (uint64_t)(p - f) * rr.reduced.at(r, c);
            w.set(0, c, static_cast<uint32_t>(x % p));
        }
    }
    return w.is_zero();
}

Matrix row_space_rows(const Matrix& rows) {
    RrefResult rr = rref(rows);
    return rr.reduced.block(0, 0, rr.rank, rows.cols());
}

} // namespace

Matrix Algebra::right_mult(std::size_t j) const {
    Matrix r(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k)
            r.set(k, i, left_mult[i].at(k, j));
    return r;
}

Matrix Algebra::left_mult_of(const Matrix& coords) const {
    Matrix r(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (coords.at(i, 0)) r = r + scale(coords.at(i, 0), left_mult[i]);
    return r;
}

Matrix Algebra::right_mult_of(const Matrix& coords) const {
    Matrix r(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        if (coords.at(j, 0)) r = r + scale(coords.at(j, 0), right_mult(j));
    return r;
}

Matrix Algebra::product(const Matrix& u, const Matrix& v) const {
    return left_mult_of(u) * v;
}

Matrix Algebra::unit_vector() const { return coords_vector(field, unit); }

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->field.p != b->field.p || a->dim != b->dim || a->unit != b->unit)
        return false;
    for (std::size_t i = 0; i < a->dim; ++i)
        if (!(a->left_mult[i] == b->left_mult[i])) return false;
    return row_space_rows(a->radical) == row_space_rows(b->radical);
}

AlgebraPtr make_algebra(FieldPrime f, std::vector<Matrix> left_mult,
                        std::vector<uint32_t> unit, Matrix radical) {
    auto a = std::make_shared<Algebra>(
        Algebra{f, left_mult.size(), std::move(left_mult), std::move(unit),
                std::move(radical)});
    return a;
}

ValidationReport validate_algebra(const Algebra& a) {
    const std::size_t d = a.dim;
    if (a.left_mult.size() != d || a.unit.size() != d)
        return {false, "dimension mismatch in structure data"};
    for (const auto& m : a.left_mult)
        if (m.rows() != d || m.cols() != d || m.p() != a.field.p)
            return {false, "left multiplication matrix has wrong shape"};

    // unit laws
    Matrix u = a.unit_vector();
    Matrix id = Matrix::identity(a.field, d);
    if (!(a.left_mult_of(u) == id))
        return {false, "unit law violated: unit * e_i != e_i"};
    if (!(a.right_mult_of(u) == id))
        return {false, "unit law violated: e_i * unit != e_i"};

    // associativity: L_i L_j = sum_k c_{ij}^k L_k
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Matrix lhs = a.left_mult[i] * a.left_mult[j];
            Matrix rhs(a.field, d, d);
            for (std::size_t k = 0; k < d; ++k) {
                uint32_t c = a.left_mult[i].at(k, j);
                if (c) rhs = rhs + scale(c, a.left_mult[k]);
            }
            if (!(lhs == rhs))
                return {false, "associativity fails at basis pair (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")"};
        }

    // radical rows span a two-sided ideal
    if (a.radical.rows() > 0 && a.radical.cols() != d)
        return {false, "radical basis has wrong width"};
    RrefResult radr = rref(a.radical.rows() ? a.radical : Matrix(a.field, 0, d));
    for (std::size_t r = 0; r < a.radical.rows(); ++r) {
        Matrix v = transpose(a.radical.row(r));
        for (std::size_t i = 0; i < d; ++i) {
            if (!in_rowspace(radr, transpose(a.left_mult[i] * v)))
                return {false, "radical is not a left ideal (basis element " +
                                   std::to_string(i) + ")"};
            if (!in_rowspace(radr, transpose(a.right_mult(i) * v)))
                return {false, "radical is not a right ideal (basis element " +
                                   std::to_string(i) + ")"};
        }
    }

    // nilpotency of the radical ideal
    Matrix power = row_space_rows(a.radical);
    std::size_t steps = 0;
    while (power.rows() > 0) {
        if (++steps > d) return {false, "radical ideal is not nilpotent"};
        Matrix next(a.field, 0, d);
        for (std::size_t r = 0; r < power.rows(); ++r)
            for (std::size_t s = 0; s < a.radical.rows(); ++s) {
                Matrix prod = a.product(transpose(power.row(r)),
                                        transpose(a.radical.row(s)));
                next = vstack(next, transpose(prod));
            }
        power = row_space_rows(next);
    }

    // maximality heuristic: the quotient admits no nilpotent ideal we can find
    QuotientAlgebra q = semisimple_quotient(a);
    if (auto bad = find_nilpotent_ideal(*q.algebra, 64, 0x9e3779b97f4a7c15ull))
        return {false, "radical is not maximal: quotient has a nilpotent ideal of dim " +
                           std::to_string(bad->rows())};
    return {true, ""};
}

std::optional<Matrix> find_nilpotent_ideal(const Algebra& a, std::size_t trials,
                                           uint64_t seed, uint64_t exhaustive_cap) {
    const std::size_t d = a.dim;
    if (d == 0) return std::nullopt;

    auto ideal_of = [&](const Matrix& elem) {
        // two-sided ideal closure of one element
        Matrix rows = transpose(elem);
        while (true) {
            Matrix next = rows;
            for (std::size_t r = 0; r < rows.rows(); ++r) {
                Matrix v = transpose(rows.row(r));
                for (std::size_t i = 0; i < d; ++i) {
                    next = vstack(next, transpose(a.left_mult[i] * v));
                    next = vstack(next, transpose(a.right_mult(i) * v));
                }
            }
            Matrix reduced = row_space_rows(next);
            if (reduced.rows() == rows.rows()) return reduced;
            rows = reduced;
        }
    };
    auto ideal_nilpotent = [&](const Matrix& rows) {
        Matrix power = rows;
        std::size_t steps = 0;
        while (power.rows() > 0) {
            if (++steps > d) return false;
            Matrix next(a.field, 0, d);
            for (std::size_t r = 0; r < power.rows(); ++r)
                for (std::size_t s = 0; s < rows.rows(); ++s)
                    next = vstack(next, transpose(a.product(transpose(power.row(r)),
                                                            transpose(rows.row(s)))));
            power = row_space_rows(next);
        }
        return true;
    };
    auto test = [&](const Matrix& elem) -> std::optional<Matrix> {
        if (elem.is_zero()) return std::nullopt;
        Matrix rows = ideal_of(elem);
        if (rows.rows() > 0 && ideal_nilpotent(rows)) return rows;
        return std::nullopt;
    };

    // exhaustive when the element count is small
    double total = 1;
    for (std::size_t i = 0; i < d && total <= (double)exhaustive_cap; ++i)
        total *= a.field.p;
    if (total <= (double)exhaustive_cap) {
        std::vector<uint32_t> digits(d, 0);
        while (true) {
            Matrix elem = coords_vector(a.field, digits);
            if (auto r = test(elem)) return r;
            std::size_t i = 0;
            while (i < d && ++digits[i] == a.field.p) digits[i++] = 0;
            if (i == d) break;
        }
        return std::nullopt;
    }

    for (std::size_t i = 0; i < d; ++i) {
        Matrix e(a.field, d, 1);
        e.set(i, 0, 1);
        if (auto r = test(e)) return r;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        Matrix e(a.field, d, 1);
        for (std::size_t i = 0; i < d; ++i)
            e.set(i, 0, static_cast<uint32_t>(rng() % a.field.p));
        if (auto r = test(e)) return r;
    }
    return std::nullopt;
}

AlgebraPtr truncated_polynomial(uint32_t p, std::size_t t) {
    if (t < 1) throw std::invalid_argument("truncated_polynomial: t >= 1 required");
    FieldPrime f(p);
    std::vector<Matrix> lm;
    lm.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        Matrix L(f, t, t);
        for (std::size_t j = 0; j + i < t; ++j) L.set(i + j, j, 1);
        lm.push_back(L);
    }
    std::vector<uint32_t> unit(t, 0);
    unit[0] = 1;
    Matrix rad(f, t - 1, t);
    for (std::size_t i = 1; i < t; ++i) rad.set(i - 1, i, 1);
    return make_algebra(f, std::move(lm), std::move(unit), std::move(rad));
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    std::vector<Matrix> lm;
    lm.reserve(a->dim);
    for (std::size_t i = 0; i < a->dim; ++i) lm.push_back(a->right_mult(i));
    return make_algebra(a->field, std::move(lm), a->unit, a->radical);
}

QuotientAlgebra semisimple_quotient(const Algebra& a) {
    QuotientBasis qb = quotient_basis(
        a.radical.rows() ? a.radical : Matrix(a.field, 0, a.dim), a.dim);
    const std::size_t q = qb.representatives.rows();
    std::vector<Matrix> lm;
    lm.reserve(q);
    for (std::size_t i = 0; i < q; ++i) {
        Matrix L(a.field, q, q);
        Matrix rep_i = transpose(qb.representatives.row(i));
        for (std::size_t j = 0; j < q; ++j) {
            Matrix prod = a.product(rep_i, transpose(qb.representatives.row(j)));
            L.set_block(0, j, qb.projection * prod);
        }
        lm.push_back(L);
    }
    Matrix unit_q = qb.projection * a.unit_vector();
    std::vector<uint32_t> unit(q);
    for (std::size_t i = 0; i < q; ++i) unit[i] = unit_q.at(i, 0);
    auto alg = make_algebra(a.field, std::move(lm), std::move(unit),
                            Matrix(a.field, 0, q));
    return QuotientAlgebra{alg, qb.projection, qb.representatives};
}

// ---------------------------------------------------------------------------
// bound quiver algebras
// ---------------------------------------------------------------------------

namespace {

struct Path {
    std::size_t source, target;
    std::vector<std::size_t> arrows; // travel order
    bool operator<(const Path& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows.empty()) return source < o.source;
        return arrows < o.arrows;
    }
    bool operator==(const Path& o) const {
        return source == o.source && target == o.target && arrows == o.arrows;
    }
};

} // namespace

AlgebraPtr quotient_path_algebra(const QuiverPresentation& q, uint32_t p) {
    FieldPrime f(p);
    const std::size_t N = q.truncation;
    if (N < 1) throw std::invalid_argument("truncation degree must be >= 1");
    for (const auto& [s, t] : q.arrows)
        if (s >= q.vertices || t >= q.vertices)
            throw std::invalid_argument("arrow endpoint out of range");

    // all paths of length <= N, ordered by (length, lex)
    std::vector<Path> paths;
    for (std::size_t v = 0; v < q.vertices; ++v) paths.push_back({v, v, {}});
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= N; ++len) {
        std::size_t level_end = paths.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::size_t a = 0; a < q.arrows.size(); ++a)
                if (q.arrows[a].first == paths[i].target) {
                    Path ext = paths[i];
                    ext.arrows.push_back(a);
                    ext.target = q.arrows[a].second;
                    paths.push_back(std::move(ext));
                }
        level_begin = level_end;
        if (paths.size() > 100000)
            throw std::runtime_error("path explosion: arrow ideal not nilpotent at truncation degree");
        std::sort(paths.begin() + level_begin, paths.end());
    }
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = i;

    // admissibility: terms of length >= 2 with common endpoints
    struct Rel { std::size_t source, target; std::vector<std::pair<uint32_t, Path>> terms; };
    std::vector<Rel> rels;
    for (const auto& r : q.relations) {
        Rel rel{0, 0, {}};
        bool first = true;
        for (const auto& term : r) {
            if (term.arrows.size() < 2)
                throw std::invalid_argument("non-admissible relation: term of length < 2");
            Path pth;
            pth.arrows = term.arrows;
            for (std::size_t k = 0; k < term.arrows.size(); ++k) {
                if (term.arrows[k] >= q.arrows.size())
                    throw std::invalid_argument("relation arrow index out of range");
                if (k > 0 && q.arrows[term.arrows[k]].first != q.arrows[term.arrows[k - 1]].second)
                    throw std::invalid_argument("relation term is not a composable path");
            }
            pth.source = q.arrows[term.arrows.front()].first;
            pth.target = q.arrows[term.arrows.back()].second;
            uint32_t c = term.coeff % p;
            if (!c) continue;
            if (first) {
                rel.source = pth.source;
                rel.target = pth.target;
                first = false;
            } else if (rel.source != pth.source || rel.target != pth.target) {
                throw std::invalid_argument("relation terms have mismatched endpoints");
            }
            rel.terms.push_back({c, std::move(pth)});
        }
        if (!rel.terms.empty()) rels.push_back(std::move(rel));
    }

    // ideal rows in coordinates over all paths of length <= N, dropping
    // terms of length > N (those vanish in the truncated algebra)
    Matrix ideal(f, 0, paths.size());
    for (const auto& rel : rels) {
        std::size_t min_len = rel.terms.front().second.arrows.size();
        for (const auto& [c, pth] : rel.terms)
            min_len = std::min(min_len, pth.arrows.size());
        for (const auto& u : paths) {
            if (u.target != rel.source) continue;
            for (const auto& w : paths) {
                if (w.source != rel.target) continue;
                if (u.arrows.size() + min_len + w.arrows.size() > N) continue;
                Matrix row(f, 1, paths.size());
                for (const auto& [c, pth] : rel.terms) {
                    std::size_t len = u.arrows.size() + pth.arrows.size() + w.arrows.size();
                    if (len > N) continue;
                    Path prod;
                    prod.source = u.source;
                    prod.target = w.target;
                    prod.arrows = u.arrows;
                    prod.arrows.insert(prod.arrows.end(), pth.arrows.begin(), pth.arrows.end());
                    prod.arrows.insert(prod.arrows.end(), w.arrows.begin(), w.arrows.end());
                    std::size_t idx = index.at(prod);
                    row.set(0, idx, (row.at(0, idx) + c) % p);
                }
                if (!row.is_zero()) ideal = vstack(ideal, row);
            }
        }
    }
    RrefResult ideal_rr = rref(ideal);

    // every path of length N must already be in the ideal
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (paths[i].arrows.size() == N) {
            Matrix unit_row(f, 1, paths.size());
            unit_row.set(0, i, 1);
            if (!in_rowspace(ideal_rr, unit_row))
                throw std::runtime_error("arrow ideal not nilpotent at truncation degree");
        }

    // quotient basis over paths of length < N
    std::size_t nshort = 0;
    while (nshort < paths.size() && paths[nshort].arrows.size() < N) ++nshort;
    Matrix ideal_short(f, 0, nshort);
    {
        // ideal rows have support on length >= 2 paths only; restrict columns
        Matrix restricted(f, ideal.rows(), nshort);
        for (std::size_t r = 0; r < ideal.rows(); ++r)
            for (std::size_t c = 0; c < nshort; ++c)
                restricted.set(r, c, ideal.at(r, c));
        ideal_short = restricted;
    }
    RrefResult rr = rref(ideal_short);
    std::vector<bool> is_pivot(nshort, false);
    for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> basis_paths;
    for (std::size_t i = 0; i < nshort; ++i)
        if (!is_pivot[i]) basis_paths.push_back(i);
    const std::size_t d = basis_paths.size();
    std::vector<std::size_t> quot_index(nshort, SIZE_MAX);
    for (std::size_t k = 0; k < d; ++k) quot_index[basis_paths[k]] = k;

    auto reduce_path = [&](const Path& pth) {
        // coordinates of a path residue in the quotient basis
        Matrix coords(f, d, 1);
        if (pth.arrows.size() >= N) return coords;
        Matrix v(f, 1, nshort);
        v.set(0, index.at(pth), 1);
        for (std::size_t r = 0; r < rr.rank; ++r) {
            uint32_t fac = v.at(0, rr.pivot_columns[r]);
            if (!fac) continue;
            for (std::size_t c = 0; c < nshort; ++c) {
                uint64_t x = v.at(0, c) + (uint64_t)(p - fac) * rr.reduced.at(r, c);
                v.set(0, c, static_cast<uint32_t>(x % p));
            }
        }
        for (std::size_t c = 0; c < nshort; ++c)
            if (v.at(0, c)) coords.set(quot_index[c], 0, v.at(0, c));
        return coords;
    };

    std::vector<Matrix> lm(d, Matrix(f, d, d));
    for (std::size_t i = 0; i < d; ++i) {
        const Path& a = paths[basis_paths[i]];
        for (std::size_t j = 0; j < d; ++j) {
            const Path& b = paths[basis_paths[j]];
            // a * b = "travel b first, then a"
            if (b.target != a.source) continue;
            Path prod;
            prod.source = b.source;
            prod.target = a.target;
            prod.arrows = b.arrows;
            prod.arrows.insert(prod.arrows.end(), a.arrows.begin(), a.arrows.end());
            lm[i].set_block(0, j, reduce_path(prod));
        }
    }
    std::vector<uint32_t> unit(d, 0);
    std::size_t nrad = 0;
    for (std::size_t k = 0; k < d; ++k) {
        if (paths[basis_paths[k]].arrows.empty()) unit[k] = 1;
        else ++nrad;
    }
    Matrix rad(f, nrad, d);
    std::size_t rrow = 0;
    for (std::size_t k = 0; k < d; ++k)
        if (!paths[basis_paths[k]].arrows.empty()) rad.set(rrow++, k, 1);
    return make_algebra(f, std::move(lm), std::move(unit), std::move(rad));
}

} // namespace gptk
