#pragma once

#include "fk/surgery.hpp"

#include <string>

namespace fk {

// Line-based diagram format:
//   kind: closed | long | standard(k0)
//   word: L1 X2 R1 ...
//   handle <name>: left=<a>..<b> right=<c>..<d>
//   comp <name>: orient=+|- coeff=<p>/<q>|+<n>|-<n>|marked
// Components are listed in canonical order; '#' starts a comment.
SurgeryDiagram parse_diagram(const std::string& text);
std::string serialize_diagram(const SurgeryDiagram& sd);

std::string coeff_string(const Role& r);

// Frozen data shipped with the library.
extern const char* const kFirstKirbyBlock;
extern const char* const kSharkPlacement;
extern const char* const kUnknotMoves;
extern const char* const kRMoveVariants;
extern const char* const kContracts;

}  // namespace fk
