#pragma once

#include "fk/rewrite.hpp"

namespace fk {

struct Routed {
    FrontDiagram diagram;
    std::vector<RewriteRecord> trail;
    int tip = -1;  // index of the finger's right cusp
};

// Grows a kink on the strand at `from` and drags its right cusp to gap `to.gap`
// (a gap of d), ending just above the strand at `to.pos`. Every step is a recorded
// Reidemeister move, so undo(result) restores d.
Routed route_finger(const FrontDiagram& d, Site from, Site to);
FrontDiagram undo(const FrontDiagram& d, const std::vector<RewriteRecord>& trail);

// Cusp splice: a finger of c1 from s1 is routed to the first left cusp of c2 at or
// after s1.gap and the pair is resolved. Roles swap when c2 has no such cusp.
FrontDiagram connect_sum(const FrontDiagram& d, int c1, Site s1, int c2, Site s2);

}  // namespace fk
