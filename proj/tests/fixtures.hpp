#pragma once

#include <string>

#include "tri/network.hpp"

namespace trifix {

// Five-vertex network whose moral graph is already chordal but whose optimal
// triangulation is not reachable by elimination: d is a deterministic
// function of a and b, and c and e hang off d.
inline const char* kFixANet =
    "net fixA\n"
    "var a 3 -\n"
    "var b 3 -\n"
    "var d 8 det | a b\n"
    "var c 3 - | d a\n"
    "var e 3 - | d b\n";

// Same shape with singleton-parent children; here adding the ancestral edges
// hurts (900 without fill vs 2000 with all of them).
inline const char* kFixBNet =
    "net fixB\n"
    "var a 10 -\n"
    "var b 10 -\n"
    "var d 40 det | a b\n"
    "var c 10 - | d\n"
    "var e 10 - | d\n";

// Vertex ids in declaration order for both fixtures.
enum : int { A = 0, B = 1, D = 2, C = 3, E = 4 };

inline tri::Network fixA() { return tri::parse_network(kFixANet); }
inline tri::Network fixB() { return tri::parse_network(kFixBNet); }

// fixA with the four stochastic cardinalities at eta and |d| = eta^2 - 1.
inline tri::Network fixA_eta(int eta) {
  std::string text = "net fixA" + std::to_string(eta) + "\n";
  const std::string card = std::to_string(eta);
  text += "var a " + card + " -\n";
  text += "var b " + card + " -\n";
  text += "var d " + std::to_string(eta * eta - 1) + " det | a b\n";
  text += "var c " + card + " - | d a\n";
  text += "var e " + card + " - | d b\n";
  return tri::parse_network(text);
}

}  // namespace trifix
