#pragma once

#include <iosfwd>
#include <string>

#include "tolrep/algebra.hpp"
#include "tolrep/binrel.hpp"

namespace tolrep {

// Plain-text exchange formats. '#' starts a comment, tokens are whitespace
// separated. Algebras:
//     algebra <name>
//     size <n>
//     op <name> <arity>
//     <n^arity integers, lexicographic argument order>
// Relations:
//     rel <name>
//     size <n>
//     reflexive          (optional directive: adds Δ)
//     <a> <b>            (one pair per line)
// Parse errors report the source name and line number.

struct NamedRelation {
  std::string name;
  BinRel rel;
};

FiniteAlgebra parse_algebra(std::istream& in, const std::string& source = "<stream>");
FiniteAlgebra load_algebra(const std::string& path);

NamedRelation parse_relation(std::istream& in, const std::string& source = "<stream>");
NamedRelation load_relation(const std::string& path);

void write_algebra(std::ostream& out, const FiniteAlgebra& a);
void write_relation(std::ostream& out, const BinRel& r, const std::string& name);

std::string format_pairs(const BinRel& r);

}  // namespace tolrep
