#ifndef LSA_ENERGY_IO_HPP
#define LSA_ENERGY_IO_HPP

#include <iosfwd>
#include <string>

#include "lsa/energy.hpp"

namespace lsa {

// Energy text format:
//
//   # comments allowed, '#' to end of line
//   BPBE 1
//   vars <N>
//   constant <real>
//   unary <K>
//   <p> <u_p>          (K lines)
//   pairwise <L>
//   <p> <q> <w_pq>     (L lines, p < q)
//
// Reals are serialized with the shortest representation that parses back
// exactly. The reader folds diagonal entries (p == q) into the unary,
// canonicalizes p > q, and accumulates duplicate pairs.

BinaryEnergy read_energy(std::istream& in);
BinaryEnergy read_energy_file(const std::string& path);

void write_energy(std::ostream& out, const BinaryEnergy& e);
void write_energy_file(const std::string& path, const BinaryEnergy& e);

/// Shortest decimal representation of x that round-trips to the same double.
std::string format_real(double x);

/// Strict full-string parse; throws parse_error on trailing garbage.
double parse_real(const std::string& token);

}

#endif
