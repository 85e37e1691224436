#pragma once

#include <iosfwd>
#include <string>

#include "monideal/analysis.hpp"
#include "monideal/ideal.hpp"

namespace monideal {

/// Ideal document: a JSON object
///
///   {"nvars": 2, "gens": [[4, 0], [3, 1], [1, 3], [0, 4]]}
///
/// Input generators need not be minimal; the parser minimalizes. The
/// writer emits the canonical minimal generators, one per line.
std::string to_document(const MonomialIdeal& ideal);
/// Throws ArgumentError on malformed documents, DimensionError on
/// generators of the wrong length.
MonomialIdeal parse_document(const std::string& text);

/// CSV with header `k,mu,source`, LF line endings, one row per entry.
std::string to_csv(const MuSequence& seq);
void write_csv(std::ostream& os, const MuSequence& seq);
MuSequence parse_csv(const std::string& text, std::string params = "csv");

}  // namespace monideal
