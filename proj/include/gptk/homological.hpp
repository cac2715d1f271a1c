#pragma once

#include <string>
#include <vector>

#include "gptk/module.hpp"

namespace gptk {

/// Finite window [lo, hi] of a chain complex; terms[i] = C_{lo+i} and
/// diffs[i-1] = d_{lo+i} : C_{lo+i} -> C_{lo+i-1}. d o d = 0 is checked on
/// construction.
struct ComplexWindow {
    long lo = 0, hi = -1;
    std::vector<Module> terms;
    std::vector<ModuleHom> diffs;
};
ComplexWindow make_window(long lo, std::vector<Module> terms,
                          std::vector<ModuleHom> diffs);

enum class GPTag { ProvenGP, GPUpToBound, NotGP };
enum class GPReason { SelfInjective, FiniteGlobalDimension, ExtVanishing };

struct GPVerdict {
    GPTag tag;
    GPReason reason = GPReason::ExtVanishing; // for ProvenGP
    std::size_t bound = 0;                    // for GPUpToBound
    // witness for NotGP
    std::size_t witness_degree = 0;
    std::string witness_side; // "module" or "transpose"
    std::size_t witness_ext_dim = 0;
};

ModuleHom projective_cover(const Module& x);
Module syzygy(const Module& x, std::size_t i);

/// Projective resolution prefix: eps : P_0 -> x and d_i : P_i -> P_{i-1}.
struct Resolution {
    std::vector<Module> projectives;
    ModuleHom augmentation;      // P_0 -> x
    std::vector<ModuleHom> diffs; // diffs[i-1] = d_i : P_i -> P_{i-1}
};
Resolution projective_resolution(const Module& x, std::size_t length);

std::size_t ext_dim(const Module& x, const Module& y, std::size_t i);

/// Cocycle-level data for Ext^1(x, y): class representatives are homs
/// P_1 -> y vanishing on the image of d_2.
struct Ext1Classes {
    Resolution res;               // length >= 2
    std::vector<Matrix> reps;     // basis of cocycles modulo coboundaries
};
Ext1Classes ext1_classes(const Module& x, const Module& y);

/// Middle term of the extension of x by y classified by the cocycle f.
struct ExtensionData {
    Module middle;
    ModuleHom inclusion;  // y -> middle
    ModuleHom projection; // middle -> x
};
ExtensionData extension_from_cocycle(const Ext1Classes& cls, const Module& y,
                                     const Matrix& cocycle);

/// dim Tor_i^A(m_right, x); m_right is a module over opposite(A).
std::size_t tor_dim(const Module& m_right, const Module& x, std::size_t i);

/// Auslander-Bretscher transpose from a minimal projective presentation.
Module transpose_module(const Module& x);

bool is_projective(const Module& x);
bool is_injective(const Module& x);

bool is_self_injective(const AlgebraPtr& a);

/// Global dimension when all simples have projective dimension <= bound.
std::optional<std::size_t> finite_global_dimension(const AlgebraPtr& a,
                                                   std::size_t bound);

/// Indecomposable projectives of a (summands of the left regular module)
/// together with their tops; cached per algebra.
struct IndecProjective {
    Module projective;
    Module simple_top;
    Matrix top_projection; // projective -> simple_top
};
const std::vector<IndecProjective>& indecomposable_projectives(const AlgebraPtr& a);

std::vector<Module> simple_modules(const AlgebraPtr& a);

GPVerdict gp_oracle(const Module& x, std::size_t bound = 8);

/// Gorenstein injectivity via duality: dual(x) tested over the opposite.
GPVerdict gi_oracle(const Module& x, std::size_t bound = 8);

/// Exact at all interior indices, and still exact there after Hom(-, A).
/// Throws if some term is not projective.
bool is_totally_acyclic_window(const ComplexWindow& c);

} // namespace gptk
