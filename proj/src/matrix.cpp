#include "gptk/matrix.hpp"

#include <stdexcept>

namespace gptk {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_same_field(const Matrix& x, const Matrix& y) {
    if (x.p() != y.p()) throw std::invalid_argument("matrix field mismatch");
}

} // namespace

FieldPrime::FieldPrime(uint32_t prime) : p(prime) {
    if (prime < 2 || prime >= (1u << 16) || !is_prime_u32(prime))
        throw std::invalid_argument("FieldPrime: p must be a prime in [2, 2^16)");
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("fp_inv of zero");
    // extended Euclid
    int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

Matrix::Matrix(uint32_t p, std::size_t rows, std::size_t cols, std::vector<uint32_t> entries)
    : p_(FieldPrime(p).p), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count mismatch");
    for (auto& v : a_) v %= p_;
}

Matrix Matrix::identity(FieldPrime f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::zero(FieldPrime f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
}

Matrix Matrix::row(std::size_t r) const { return block(r, 0, 1, cols_); }
Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
    Matrix b(FieldPrime(p_), nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b.set(r, c, at(r0 + r, c0 + c));
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("Matrix::set_block");
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            set(r0 + r, c0 + c, b.at(r, c));
}

bool Matrix::is_zero() const {
    for (uint32_t v : a_)
        if (v) return false;
    return true;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same_field(x, y);
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix shape mismatch in +");
    Matrix r(x.field(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r.set(i, j, (x.at(i, j) + y.at(i, j)) % x.p());
    return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same_field(x, y);
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("matrix shape mismatch in -");
    Matrix r(x.field(), x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r.set(i, j, (x.at(i, j) + x.p() - y.at(i, j)) % x.p());
    return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
    check_same_field(x, y);
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix shape mismatch in *");
    const uint64_t p = x.p();
    Matrix r(x.field(), x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            uint64_t xv = x.at(i, k);
            if (!xv) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                uint64_t acc = r.at(i, j) + xv * y.at(k, j);
                r.set(i, j, static_cast<uint32_t>(acc % p));
            }
        }
    return r;
}

Matrix scale(uint32_t c, const Matrix& x) {
    Matrix r(x.field(), x.rows(), x.cols());
    uint64_t cc = c % x.p();
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r.set(i, j, static_cast<uint32_t>((cc * x.at(i, j)) % x.p()));
    return r;
}

Matrix transpose(const Matrix& x) {
    Matrix r(x.field(), x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            r.set(j, i, x.at(i, j));
    return r;
}

Matrix hstack(const Matrix& x, const Matrix& y) {
    check_same_field(x, y);
    if (x.rows() != y.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix r(x.field(), x.rows(), x.cols() + y.cols());
    r.set_block(0, 0, x);
    r.set_block(0, x.cols(), y);
    return r;
}

Matrix vstack(const Matrix& x, const Matrix& y) {
    check_same_field(x, y);
    if (x.cols() != y.cols()) throw std::invalid_argument("vstack col mismatch");
    Matrix r(x.field(), x.rows() + y.rows(), x.cols());
    r.set_block(0, 0, x);
    r.set_block(x.rows(), 0, y);
    return r;
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const uint32_t p = a.p();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = a.rows();
        for (std::size_t i = r; i < a.rows(); ++i)
            if (a.at(i, c)) { piv = i; break; }
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                uint32_t t = a.at(r, j);
                a.set(r, j, a.at(piv, j));
                a.set(piv, j, t);
            }
        uint32_t inv = fp_inv(a.at(r, c), p);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a.set(r, j, static_cast<uint32_t>((uint64_t)a.at(r, j) * inv % p));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            uint32_t f = a.at(i, c);
            if (!f) continue;
            for (std::size_t j = 0; j < a.cols(); ++j) {
                uint64_t v = a.at(i, j) + (uint64_t)(p - f) * a.at(r, j);
                a.set(i, j, static_cast<uint32_t>(v % p));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), std::move(pivots), r};
}

std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;

    Matrix basis(m.field(), n - rr.rank, n);
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.set(row, c, 1);
        // pivot variable values: -reduced[r][c]
        for (std::size_t r = 0; r < rr.rank; ++r) {
            uint32_t v = rr.reduced.at(r, c);
            if (v) basis.set(row, rr.pivot_columns[r], (m.p() - v) % m.p());
        }
        ++row;
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& targets) {
    if (m.rows() != targets.rows()) throw std::invalid_argument("solve: rows mismatch");
    check_same_field(m, targets);
    RrefResult rr = rref(hstack(m, targets));
    // inconsistent iff a pivot lands in the target block
    for (std::size_t c : rr.pivot_columns)
        if (c >= m.cols()) return std::nullopt;
    Matrix c(m.field(), m.cols(), targets.cols());
    for (std::size_t r = 0; r < rr.rank; ++r) {
        std::size_t pc = rr.pivot_columns[r];
        for (std::size_t j = 0; j < targets.cols(); ++j)
            c.set(pc, j, rr.reduced.at(r, m.cols() + j));
    }
    return c;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    auto s = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!s) return std::nullopt;
    if (rank_of(m) != m.rows()) return std::nullopt;
    return s;
}

QuotientBasis quotient_basis(const Matrix& subspace_rows, std::size_t ambient_dim) {
    if (subspace_rows.cols() != ambient_dim && subspace_rows.rows() != 0)
        throw std::invalid_argument("quotient_basis: ambient dim mismatch");
    Matrix sub = subspace_rows.rows() == 0
                     ? Matrix(subspace_rows.field(), 0, ambient_dim)
                     : subspace_rows;
    RrefResult rr = rref(sub);
    const uint32_t p = sub.p();
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t c : rr.pivot_columns) is_pivot[c] = true;
    std::size_t q = ambient_dim - rr.rank;

    Matrix reps(sub.field(), q, ambient_dim);
    Matrix proj(sub.field(), q, ambient_dim);
    std::size_t idx = 0;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    for (std::size_t c : free_cols) {
        reps.set(idx, c, 1);
        ++idx;
    }
    // projection of e_j: free column -> unit vector; pivot column j with row r:
    // e_j = -sum_{c free} reduced[r][c] e_c  (mod subspace)
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        if (!is_pivot[j]) {
            for (std::size_t k = 0; k < q; ++k)
                if (free_cols[k] == j) proj.set(k, j, 1);
        } else {
            std::size_t r = 0;
            while (rr.pivot_columns[r] != j) ++r;
            for (std::size_t k = 0; k < q; ++k) {
                uint32_t v = rr.reduced.at(r, free_cols[k]);
                if (v) proj.set(k, j, (p - v) % p);
            }
        }
    }
    return QuotientBasis{std::move(reps), std::move(proj)};
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    check_same_field(a, b);
    const uint64_t p = a.p();
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            uint64_t av = a.at(i, j);
            if (!av) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l,
                          static_cast<uint32_t>(av * b.at(k, l) % p));
        }
    return r;
}

Matrix vec(const Matrix& m) {
    Matrix v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            v.set(c * m.rows() + r, 0, m.at(r, c));
    return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
    if (v.rows() * v.cols() != rows * cols) throw std::invalid_argument("unvec size mismatch");
    Matrix m(v.field(), rows, cols);
    std::size_t i = 0;
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) {
            m.set(r, c, v.data()[i]);
            ++i;
        }
    return m;
}

Matrix mat_pow(const Matrix& m, std::size_t e) {
    if (m.rows() != m.cols()) throw std::invalid_argument("mat_pow: not square");
    Matrix acc = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Matrix column_space_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    Matrix b(m.field(), m.rows(), rr.rank);
    for (std::size_t k = 0; k < rr.rank; ++k)
        b.set_block(0, k, m.col(rr.pivot_columns[k]));
    return b;
}

} // namespace gptk
