#pragma once

#include <iosfwd>
#include <string>

#include "dadelab/rpmod.hpp"

namespace dadelab {

/// Text form: ring header, "G <spec>", "dim <d>", then per generator a "gen"
/// line followed by d rows of d elements separated by ';'.
void write_module(const RPModule& M, std::ostream& os);
void write_module(const RPModule& M, const std::string& path);

/// Throws ParseError (with the line number) on malformed input and
/// ValidationError when the matrices violate a relation.
RPModule read_module(std::istream& is);
RPModule read_module(const std::string& path);

}  // namespace dadelab
