#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace gptk {

/// Prime field F_p, 2 <= p < 2^16. Construction checks primality.
struct FieldPrime {
    uint32_t p;
    explicit FieldPrime(uint32_t prime);
    friend bool operator==(FieldPrime a, FieldPrime b) { return a.p == b.p; }
};

uint32_t fp_inv(uint32_t a, uint32_t p);

/// Dense row-major matrix over F_p. Entries are always reduced mod p.
class Matrix {
  public:
    Matrix() : p_(2), rows_(0), cols_(0) {}
    Matrix(FieldPrime f, std::size_t rows, std::size_t cols)
        : p_(f.p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    Matrix(uint32_t p, std::size_t rows, std::size_t cols,
           std::vector<uint32_t> entries);

    static Matrix identity(FieldPrime f, std::size_t n);
    static Matrix zero(FieldPrime f, std::size_t rows, std::size_t cols);

    uint32_t p() const { return p_; }
    FieldPrime field() const { return FieldPrime(p_); }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, uint32_t v) { a_[r * cols_ + c] = v % p_; }

    const std::vector<uint32_t>& data() const { return a_; }

    Matrix row(std::size_t r) const;
    Matrix col(std::size_t c) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    bool is_zero() const;

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.p_ == y.p_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix scale(uint32_t c, const Matrix& x);

Matrix transpose(const Matrix& x);
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix vstack(const Matrix& x, const Matrix& y);

/// Reduced row-echelon form with deterministic pivoting (first nonzero in
/// column order), so every downstream basis choice is reproducible.
struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank;
};
RrefResult rref(const Matrix& m);

std::size_t rank_of(const Matrix& m);

/// Rows form a basis of the right null space { v : m v = 0 }.
Matrix kernel_basis(const Matrix& m);

/// Particular solution C of m C = targets (the rref one), or nullopt.
std::optional<Matrix> solve(const Matrix& m, const Matrix& targets);

std::optional<Matrix> inverse(const Matrix& m);

/// Basis data for F_p^ambient / rowspace(subspace_rows).
/// representatives: q x ambient rows lifting a basis of the quotient;
/// projection: q x ambient with projection * transpose(representatives) = I_q
/// and kernel of projection = rowspace(subspace_rows).
struct QuotientBasis {
    Matrix representatives;
    Matrix projection;
};
QuotientBasis quotient_basis(const Matrix& subspace_rows, std::size_t ambient_dim);

Matrix kronecker(const Matrix& a, const Matrix& b);

/// Column-major vectorization, so vec(A X B) = (B^T (x) A) vec(X).
Matrix vec(const Matrix& m);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

/// Power m^e (square matrix).
Matrix mat_pow(const Matrix& m, std::size_t e);

/// Basis of the column space as an n x r matrix (pivot columns of m).
Matrix column_space_basis(const Matrix& m);

} // namespace gptk
