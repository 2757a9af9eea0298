#pragma once

#include "fk/rewrite.hpp"
#include "fk/surgery.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fk {

enum class MoveKind {
    R1,
    R2,
    R3,
    FC,
    Stabilize,
    Destabilize,
    HandleSlide,
    CancelPairInsert,
    CancelPairRemove,
    PushoffMeridianForward,
    PushoffMeridianBackward,
    FirstKirbyAdd,
    FirstKirbyRemove,
    SharkDestabilize,
    SharkStabilize,
    SharkInsert,
    ReplaceOneHandles,
    UnknotMove,
    Move6,
    LightBulb,
    RolfsenTwistView,
};

const char* move_kind_name(MoveKind k);
MoveKind parse_move_kind(const std::string& s);

// A site on component c: the upper strand just after its first left cusp.
Site site_on(const FrontDiagram& d, int c);

// Gives component c the label `label`, dropping whatever label it had.
SurgeryDiagram relabel(SurgeryDiagram sd, int c, int label);

// Slides i over j (contact +-1) along a band from bandTo on i. add keeps the
// copy of j parallel to j, subtract reverses it.
SurgeryDiagram handle_slide(const SurgeryDiagram& sd, int i, int j, Site bandTo, bool add);

// Inserts knot k (closed) and its push-off, split from the rest, at (gap, pos).
// The knot gets base_coeff, the push-off -base_coeff.
SurgeryDiagram cancel_pair_insert(const SurgeryDiagram& sd, const FrontDiagram& k, Site at,
                                  int base_coeff = -1, const std::string& base_name = "",
                                  const std::string& push_name = "");
SurgeryDiagram cancel_pair_remove(const SurgeryDiagram& sd, int a, int b);

SurgeryDiagram pushoff_meridian(const SurgeryDiagram& sd, int base, int target, bool forward);

SurgeryDiagram first_kirby_add(const SurgeryDiagram& sd, Site at);
SurgeryDiagram first_kirby_remove(const SurgeryDiagram& sd);

// Side of the shark relative to c: +1 below, -1 above, 0 when it is not a usable shark.
int shark_side(const SurgeryDiagram& sd, int shark, int c);
// Frozen placement: the side a shark must sit on to absorb a zigzag of the given sign.
int shark_side_for(int zigzag_sign);
// Inserts a shark meridian of c at s, placed for zigzags of the given sign.
SurgeryDiagram insert_shark(const SurgeryDiagram& sd, int c, Site s, int zigzag_sign, const std::string& name = "");
SurgeryDiagram shark_destabilize(const SurgeryDiagram& sd, int c, Site zigzag, int* sign_out = nullptr);
SurgeryDiagram shark_stabilize(const SurgeryDiagram& sd, int c, int sign, Site s);

SurgeryDiagram replace_one_handles(const SurgeryDiagram& sd);

struct UnknotMoveSpec {
    std::string name;
    int k0 = 0;
    std::vector<Event> src, dst;
    std::vector<RMove> path;
};
const std::vector<UnknotMoveSpec>& unknot_move_table();
const UnknotMoveSpec& unknot_move_spec(const std::string& name);
// Applies the frozen isotopy with its window at (gap, top strand pos).
SurgeryDiagram unknot_move(const SurgeryDiagram& sd, const std::string& kind, Site at, bool forward = true);

// Slide of c over the (+1) unknot l0 it passes through once, oriented so that
// c gains S+S-; an optional band site on c.
SurgeryDiagram move6(const SurgeryDiagram& sd, int c, int l0, std::optional<Site> at = std::nullopt);

struct RolfsenReport {
    Rational surfaceFraming;
    int tb = 0, rot = 0;
    int dTb = 0, dRot = 0;
    std::optional<std::pair<int, int>> km;
};
RolfsenReport rolfsen_twist_view(const SurgeryDiagram& sd, int l0, int c, int base_tb, int base_rot);

}  // namespace fk
