#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tri {

// Clique products overflow 64 bits quickly (cardinalities up to 125, cliques
// beyond 10 vertices), and the oracles compare scores for exact equality.
using BigInt = boost::multiprecision::cpp_int;

// State space of a clique or graph: a non-negative exact integer.
using StateSpace = BigInt;

}  // namespace tri
