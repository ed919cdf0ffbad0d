#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include "k3sextic/int_matrix.hpp"
#include "k3sextic/lattice.hpp"

namespace k3sextic {

// Versioned text format for exact lattice storage. Round trips are
// bit-exact: entries are arbitrary-precision decimal integers.
//
//   k3sextic-lattice/1
//   rank <n>
//   <n rows of n entries>

inline constexpr const char* kLatticeFormatHeader = "k3sextic-lattice/1";

inline std::string lattice_to_text(const Lattice& l) {
  std::ostringstream out;
  out << kLatticeFormatHeader << '\n';
  out << "rank " << l.rank() << '\n';
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = 0; j < l.rank(); ++j) {
      if (j > 0) out << ' ';
      out << l.gram()(i, j).get_str();
    }
    out << '\n';
  }
  return out.str();
}

inline Lattice lattice_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty lattice file");
  if (header != kLatticeFormatHeader)
    throw std::runtime_error("unsupported lattice format: " + header);
  std::string keyword;
  long rank = -1;
  if (!(in >> keyword >> rank) || keyword != "rank" || rank < 0)
    throw std::runtime_error("missing rank line");
  IntMatrix g(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
  std::string token;
  for (long i = 0; i < rank; ++i)
    for (long j = 0; j < rank; ++j) {
      if (!(in >> token)) throw std::runtime_error("truncated Gram matrix");
      try {
        g(i, j) = Int(token);
      } catch (const std::invalid_argument&) {
        throw std::runtime_error("bad Gram entry: " + token);
      }
    }
  if (in >> token) throw std::runtime_error("trailing data after Gram matrix");
  return Lattice(std::move(g));
}

}  // namespace k3sextic
