#pragma once

#include <string>
#include <vector>

namespace hyp {

// One element u of V(alpha), subject to
//   (1)  u1 >= u2 >= ... >= ur >= 0
//   (2)  a1-u1 >= a2-u2 >= ... >= ar-ur >= 0.
// A plain vector, so tuples from different lattices of equal length stay
// directly comparable; the alpha context is supplied per call.
using Hypertuple = std::vector<int>;

// Sum of the entries: the rank function.  Every cover decrements it by one,
// and a maximal chain from u down to zero has weight(u)+1 elements.
int weight(const Hypertuple& u);

// "(3,2,1)"
std::string to_string(const Hypertuple& u);

// Entrywise comparison: the lattice partial order.  Sizes must agree.
bool tuple_leq(const Hypertuple& u, const Hypertuple& v);

// "3,2,1" -> {3,2,1}.  Throws validation_error on malformed text.
Hypertuple parse_tuple(const std::string& text);

}  // namespace hyp
