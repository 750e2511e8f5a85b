#pragma once
#include "kergrad/group_ring.hpp"
#include <optional>
#include <string>

namespace kergrad {

// Text form of a group ring element. Grammar, whitespace insignificant:
//   element := ['-'] term (('+'|'-') term)*
//   term    := coeff ['*'] atoms | coeff | atoms
//   coeff   := int | int '/2^' uint          -- dyadic rationals only
//   atoms   := atom (['*'] atom)*            -- multiplied left to right
//   atom    := 'e' | shift | lamp | fin
//   shift   := 't' [track] ['^' int]         -- bare 't' means track 0
//   lamp    := 'u' [track] '[' int {',' int} ']'
//   fin     := 'phi' '[' uint {',' uint} ']'
// Examples: "t + t^-1 + t*u[0] + u[0]*t^-1", "1/2^1 - 1/2^1 phi[0]".
//
// Without an explicit spec the group is inferred from the text: shift rank =
// 1 + highest track mentioned, finite bits = 1 + highest phi index, no
// automorphisms.
GroupRingElement parse_element(const std::string& text);
GroupRingElement parse_element(const std::string& text, const GroupSpec& spec);

// Round-trip friendly rendering (uses the same grammar).
std::string format_element(const GroupRingElement& e);

} // namespace kergrad
