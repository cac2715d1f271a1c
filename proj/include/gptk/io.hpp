#pragma once

#include <cstdint>
#include <string>

#include "gptk/classify.hpp"
#include "gptk/triangular.hpp"

namespace gptk {

/// FNV-1a content digest, rendered as 16 hex digits.
std::string fnv1a_digest(const std::string& content);

std::string read_file(const std::string& path);

/// Write-to-temp-then-rename so readers never observe partial files.
void atomic_write(const std::string& path, const std::string& content);

/// Algebra files: {"kind":"algebra"} with either a "structure" body
/// (dim, left_mult, unit, radical), a "quiver" body (vertices, arrows,
/// relations, truncation), or a "truncated" body (t). Field characteristic
/// is a top-level "p".
AlgebraPtr load_algebra(const std::string& path);
void save_algebra(const std::string& path, const AlgebraPtr& a);

/// Module files reference their algebra file by path (relative to the
/// module file) plus a content digest that is verified when present.
Module load_module(const std::string& path);
void save_module(const std::string& path, const Module& m,
                 const std::string& algebra_path);

Bimodule load_bimodule(const std::string& path);
void save_bimodule(const std::string& path, const Bimodule& m,
                   const std::string& left_algebra_path,
                   const std::string& right_algebra_path);

/// Triangular files: {"kind":"triangular"} with either {"t2_of": ref} or
/// explicit {"r": ref, "s": ref, "bimodule": ref}.
TriangularPtr load_triangular(const std::string& path);

/// Triple files reference a triangular file, two module files, and carry
/// phi over the documented tensor-basis ordering (pure tensors ordered by
/// (M-basis index, X-basis index), then reduced).
TripleModule load_triple(const std::string& path);
void save_triple(const std::string& path, const TripleModule& t,
                 const std::string& triangular_path,
                 const std::string& x_path, const std::string& y_path);

/// Census files are self-contained: the triangular data is embedded
/// structurally so the census can be reloaded without its source files.
void save_census(const std::string& path, const GPCensus& census,
                 uint64_t seed);
GPCensus load_census(const std::string& path);

/// One representative per line: dims, certificate tag, stable id.
std::string census_table(const GPCensus& census);

} // namespace gptk
