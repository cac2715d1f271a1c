#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gptk/matrix.hpp"

namespace gptk {

/// Finite-dimensional associative unital F_p-algebra given by structure
/// constants. left_mult[i] is the matrix of left multiplication by e_i,
/// so c_{ij}^k = left_mult[i](k, j). The radical basis is supplied by the
/// constructor (arrow ideal for bound quivers, user data otherwise) and
/// validated rather than computed.
struct Algebra {
    FieldPrime field;
    std::size_t dim;
    std::vector<Matrix> left_mult;
    std::vector<uint32_t> unit;   // coordinates of 1
    Matrix radical;               // rows = radical basis vectors

    Matrix right_mult(std::size_t j) const; // matrix of v -> v * e_j
    Matrix left_mult_of(const Matrix& coords) const;  // coords: dim x 1
    Matrix right_mult_of(const Matrix& coords) const;
    Matrix product(const Matrix& u, const Matrix& v) const; // coord vectors
    Matrix unit_vector() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct ValidationReport {
    bool ok = true;
    std::string message;
};

/// Checks associativity on all basis triples, the unit laws, and that the
/// radical rows span a nilpotent two-sided ideal whose quotient admits no
/// nonzero nilpotent ideal found by a bounded element sweep.
ValidationReport validate_algebra(const Algebra& a);

/// Two-sided ideal generated by sweep elements of `a`, nilpotency-tested;
/// returns a basis of the first nonzero nilpotent ideal found, if any.
/// Exhaustive when p^dim <= exhaustive_cap, otherwise basis elements plus
/// seeded random elements.
std::optional<Matrix> find_nilpotent_ideal(const Algebra& a, std::size_t trials,
                                           uint64_t seed,
                                           uint64_t exhaustive_cap = 1u << 16);

AlgebraPtr truncated_polynomial(uint32_t p, std::size_t t);

struct RelationTerm {
    uint32_t coeff;
    std::vector<std::size_t> arrows; // travel order: arrows[0] first
};

struct QuiverPresentation {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arrows; // (source, target)
    std::vector<std::vector<RelationTerm>> relations;
    std::size_t truncation = 1; // paths of length >= truncation vanish
};

/// Bound quiver algebra kQ/I, basis = path residues ordered by
/// (length, lex on arrow indices). Throws on non-admissible relations or
/// when length-`truncation` paths do not already lie in the relation ideal.
AlgebraPtr quotient_path_algebra(const QuiverPresentation& q, uint32_t p);

AlgebraPtr opposite(const AlgebraPtr& a);

AlgebraPtr make_algebra(FieldPrime f, std::vector<Matrix> left_mult,
                        std::vector<uint32_t> unit, Matrix radical);

/// A/span(radical rows), with the induced structure constants.
struct QuotientAlgebra {
    AlgebraPtr algebra;
    Matrix projection;       // quotient coords from ambient coords
    Matrix representatives;  // rows lifting the quotient basis
};
QuotientAlgebra semisimple_quotient(const Algebra& a);

} // namespace gptk
