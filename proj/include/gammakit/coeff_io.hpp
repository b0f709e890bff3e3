#pragma once

#include <iosfwd>
#include <string>

#include "gammakit/schemes.hpp"

namespace gammakit {

// Text record for a pole expansion.  Line-oriented "key value" pairs, all
// reals at 36 significant digits:
//
//   gammakit-coefficients v1
//   method lanczos
//   n 8
//   r 7.90609386...e+00
//   r_target inf            (or "zbar <value>" or "explicit")
//   node_generator integers (omitted with the nodes line when absent)
//   nodes 1,2,...,9
//   c_inf 2.50662827...e+00
//   c_0 ...
//   ...
//
// Printed coefficient labels elsewhere (tables) are 1-based; this record
// keeps the internal 0-based indexing.
void write_coefficients(const PoleExpansion& e, std::ostream& out);
std::string coefficients_record(const PoleExpansion& e);

PoleExpansion parse_coefficients(std::istream& in);
PoleExpansion parse_coefficients_string(const std::string& text);
PoleExpansion load_coefficients_file(const std::string& path);

}  // namespace gammakit
