#pragma once

#include <variant>

#include "hopfz/zoo.hpp"

namespace hopfz {

// Structured text format for algebras and inclusions: JSON, UTF-8,
// newline-normalized, with explicit dimensionality and all structure
// constants written as decimal strings (arbitrary precision). Parsers accept
// plain JSON integers as well.
//
// Algebra documents carry: kind, base ("integers" | "rationals" |
// "prime:p"), rank, mult (n x n array of length-n vectors), comult (n array
// of n x n matrices), counit (length n), antipode (optional n x n, column j
// the image of basis vector j), basis_names (optional). The unit is not
// stored; it is solved for on parse (the unique two-sided unit).

Json algebra_to_json(const HopfAlgebra& h);
HopfAlgebra algebra_from_json(const Json& j);
Json inclusion_to_json(const HopfInclusion& inc);
HopfInclusion inclusion_from_json(const Json& j);

/// Parses and validates: verify_hopf runs eagerly (solving the antipode when
/// absent), check_inclusion runs on inclusions. Throws Error with kinds
/// Syntax, Dimension, or AxiomFailure.
HopfAlgebra parse_algebra_document(const std::string& text);
HopfInclusion parse_inclusion_document(const std::string& text);

std::string emit_algebra_document(const HopfAlgebra& h);
std::string emit_inclusion_document(const HopfInclusion& inc);

using ParsedInput = std::variant<HopfAlgebra, HopfInclusion>;

/// Resolves "builtin:<name>" through the zoo registry, anything else as a
/// file path.
ParsedInput load_input(const std::string& spec);
HopfAlgebra load_algebra(const std::string& spec);
HopfInclusion load_inclusion(const std::string& spec);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hopfz
