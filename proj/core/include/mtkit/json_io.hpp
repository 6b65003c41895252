#pragma once

#include <string>
#include <variant>

#include "mtkit/lattice.hpp"
#include "mtkit/poset.hpp"
#include "mtkit/space.hpp"

namespace mtkit {

/// Input documents are JSON objects of two kinds:
///   {"kind":"space","points":N,"opens":[[int,...],...]}   (0-based points)
///   {"kind":"lattice","elements":M,"leq":[[i,j],...]}     (full relation)
/// Parsing validates: spaces must be topologies, lattice documents must be
/// lattices (or merely posets, for the completion command).

using ParsedDocument = std::variant<FinSpace, FiniteLattice>;

/// Dispatches on "kind". Throws SchemaError for malformed documents,
/// NotATopology / NotALattice for semantically invalid ones.
ParsedDocument parse_document(const std::string& json_text);

FinSpace parse_space_document(const std::string& json_text);
FiniteLattice parse_lattice_document(const std::string& json_text);
/// Reads a lattice-kind document as a bare poset (the completion input).
FinPoset parse_poset_document(const std::string& json_text);

/// Canonical form: opens sorted ascending by mask, each open listed as
/// ascending point indices; leq pairs sorted lexicographically.
/// parse(serialize(parse(d))) == parse(d).
std::string serialize_space(const FinSpace& space);
std::string serialize_lattice(const FiniteLattice& lattice);

}  // namespace mtkit
