#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gptk/algebra.hpp"
#include "gptk/matrix.hpp"

namespace gptk {

/// Finite-dimensional left module: one action matrix per algebra basis
/// element, acting on column vectors. Values are immutable once built.
struct Module {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Matrix> actions;

    Matrix action_of(const Matrix& coords) const; // coords: algebra dim x 1
};

struct ModuleHom {
    Module source, target;
    Matrix matrix; // dim(target) x dim(source)
};

ValidationReport validate_module(const Module& x);
bool is_module_hom(const ModuleHom& f);

Module zero_module(const AlgebraPtr& a);

/// Left or right regular module; the right one is a module over opposite(a).
enum class Side { Left, Right };
Module regular_module(const AlgebraPtr& a, Side side = Side::Left);

/// Basis of Hom_A(x, y) as a list of intertwiner matrices.
std::vector<Matrix> hom_space(const Module& x, const Module& y);

struct DirectSum {
    Module module;
    std::vector<ModuleHom> injections;
    std::vector<ModuleHom> projections;
};
DirectSum direct_sum(const std::vector<Module>& xs);

struct SubquotientData {
    Module module;
    ModuleHom map; // inclusion (into ambient) or projection (from ambient)
};
SubquotientData kernel(const ModuleHom& f);
SubquotientData cokernel(const ModuleHom& f);

/// Submodule spanned by the given column vectors (must be action-invariant).
SubquotientData span_submodule(const Module& x, const Matrix& columns);

SubquotientData radical_of_module(const Module& x);
SubquotientData top(const Module& x);

struct SearchConfig {
    uint64_t seed = 0xC0FFEEull;
    std::size_t random_trials = 200;
    uint64_t exhaustive_cap = 1ull << 20; // on |End| or |Hom|
};

std::optional<ModuleHom> is_isomorphic(const Module& x, const Module& y,
                                       const SearchConfig& cfg = {});

/// Krull-Schmidt decomposition via Fitting splittings of endomorphisms.
/// `certified` is false when the search caps were exceeded for some factor
/// ("possibly decomposable" -- never silently wrong).
struct Decomposition {
    std::vector<Module> factors;
    Matrix change_of_basis; // iso from the direct sum of factors onto x
    bool certified = true;
};
Decomposition decompose(const Module& x, const SearchConfig& cfg = {});

/// k-dual: module over opposite(algebra), actions transposed.
Module dual(const Module& x);
ModuleHom dual_hom(const ModuleHom& f);

/// Action matrices of a hom image under restriction: solves
/// incl * act = rho(e) * incl for each basis element.
Module induced_on_columns(const Module& ambient, const Matrix& incl);

} // namespace gptk
