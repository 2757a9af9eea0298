#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fk {

enum class Code {
    PositionOutOfRange,
    BoundaryMismatch,
    OrientationMissing,
    UncoveredBoundaryStrand,
    InvalidComponent,
    SameComponent,
    OpenComponent,
    InvalidSite,
    NoZigzagAtSite,
    OrientationConflict,
    NotLong,
    Unrealizable,
    BlockedByBoundary,
    RoutingFailed,
    PatternMismatch,
    Overlapping,
    MarkedKnotHasNoCoefficient,
    ContainsMarkedKnot,
    NotSymmetric,
    CoefficientNotPlusMinusOne,
    NotAPushoffPair,
    NotSplit,
    CoefficientNotMinusOne,
    NotAPushoff,
    NotAMeridian,
    BlockNotFound,
    NoShark,
    NoZigzag,
    NotThroughOnce,
    NotAPlusOneUnknot,
    UnknownMoveKind,
    SyntaxError,
    SemanticError,
};

const char* code_name(Code c);

class Error : public std::runtime_error {
public:
    Error(Code c, const std::string& msg, int index = -1)
        : std::runtime_error(std::string(code_name(c)) + ": " + msg), code(c), index(index) {}
    Code code;
    int index;
};

enum class Ev : char { L, R, X };

struct Event {
    Ev kind;
    int pos;
    bool operator==(const Event&) const = default;
};

inline Event Lc(int p) { return {Ev::L, p}; }
inline Event Rc(int p) { return {Ev::R, p}; }
inline Event Xc(int p) { return {Ev::X, p}; }

enum class Kind { Closed, Long, Standard };

// Left block a..b matched in order with right block c..d (1-based, empty when b < a).
struct Handle {
    std::string name;
    int a = 1, b = 0, c = 1, d = 0;
    int size() const { return b - a + 1; }
};

struct FrontDiagram {
    std::vector<Event> events;
    Kind kind = Kind::Closed;
    int k0 = 0;
    std::vector<Handle> handles;
    std::vector<int> orient;  // per canonical component: +1 or -1
    std::vector<int> label;   // per canonical component: identity kept across rewrites
};

struct Site {
    int gap = 0;
    int pos = 1;
    int pos2 = 0;  // 0 when absent
};

struct Component {
    std::vector<int> segs;  // in traversal order
    bool closed = true;
};

struct ComponentStructure {
    std::vector<Component> comps;
    std::vector<int> seg_comp;
};

struct ClassicalInvariants {
    int tb = 0, rot = 0, writhe = 0, rightCusps = 0, upCusps = 0, downCusps = 0;
    bool operator==(const ClassicalInvariants&) const = default;
};

// Full tracing data. Segments: boundary strands first, then two per left cusp (upper first).
struct Trace {
    int nseg = 0;
    std::vector<int> seg_comp;
    std::vector<int> dir;       // +1 rightward, orientation flags applied
    std::vector<int> base_dir;  // direction with every flag +1
    std::vector<std::array<int, 2>> ev_seg;  // upper/lower strand at each event
    std::vector<std::vector<int>> at;        // segments at each gap, top to bottom
    std::vector<Component> comps;
};

std::vector<int> strand_counts(const std::vector<Event>& w, int k0);
int strands_at(const FrontDiagram& d, int gap);

// Throws on invalid words. Orientation flags are applied when present.
Trace trace(const FrontDiagram& d, bool need_orient = true);

ComponentStructure validate(const FrontDiagram& d);
int num_components(const FrontDiagram& d);
ClassicalInvariants classical(const FrontDiagram& d, int c);
ClassicalInvariants classical(const FrontDiagram& d, const Trace& t, int c);
int lk(const FrontDiagram& d, int c1, int c2);
std::vector<std::vector<int>> lk_matrix(const FrontDiagram& d, const Trace& t);
int comp_of_label(const FrontDiagram& d, int label);
int component_at(const FrontDiagram& d, Site s);
int crossings_between(const FrontDiagram& d, int c1, int c2);

// Orientation and label transport. Each source maps its events (and left-boundary
// strands) into the new diagram; untouched events determine orientations.
struct Carry {
    const FrontDiagram* from = nullptr;
    std::vector<int> emap;  // old event -> new event, -1 when gone
    std::vector<int> bmap;  // old left boundary position (0-based) -> new, empty = identity
    bool fresh = false;     // assign new labels to this source's components
    std::vector<int>* labels_out = nullptr;  // old component -> new label
};
struct Seed {
    int ev;
    int role;  // 0 upper, 1 lower strand of the event
    int dir;
};
FrontDiagram rebuild(FrontDiagram nd, const std::vector<Carry>& src, const std::vector<Seed>& seeds = {});
std::vector<int> identity_map(int n);
std::vector<int> shift_map(int n, int at, int by, int drop_from = 0, int drop_to = 0);

FrontDiagram reverse_component(const FrontDiagram& d, int c);
FrontDiagram insert_events(const FrontDiagram& d, int gap, const std::vector<Event>& ev,
                           const std::vector<Seed>& seeds = {});
FrontDiagram delete_component(const FrontDiagram& d, int c);
FrontDiagram delete_components(const FrontDiagram& d, std::vector<int> cs);
// Inserts closed diagram s at `gap` between strands pos-1 and pos (pos = 1 .. k+1).
FrontDiagram insert_split(const FrontDiagram& d, const FrontDiagram& s, int gap, int pos,
                          std::vector<int>* labels_out = nullptr);
bool is_split(const FrontDiagram& d, const std::vector<int>& cs);
FrontDiagram extract(const FrontDiagram& d, const std::vector<int>& cs);

FrontDiagram stabilize(const FrontDiagram& d, int c, int sign, Site s);
FrontDiagram destabilize(const FrontDiagram& d, Site s);
std::vector<Site> zigzags(const FrontDiagram& d, int c);
int zigzag_sign(const FrontDiagram& d, Site s);
std::pair<FrontDiagram, int> pushoff(const FrontDiagram& d, int c);
FrontDiagram add_twist(const FrontDiagram& d, int c, int sign, Site s);
FrontDiagram pinch(const FrontDiagram& d, Site s);
FrontDiagram unpinch(const FrontDiagram& d, int gap);
std::pair<FrontDiagram, int> insert_meridian(const FrontDiagram& d, int c, Site s,
                                             bool below = false, int lk_sign = +1);
FrontDiagram complete_long(const FrontDiagram& d);
FrontDiagram unknot_with_invariants(int tb, int rot, bool long_knot);
FrontDiagram unknot();
FrontDiagram from_word(const std::vector<Event>& w, Kind k = Kind::Closed, int k0 = 0);

// Swaps adjacent events e1 e2 when their footprints are disjoint.
bool far_commute_events(Event e1, Event e2, Event& f1, Event& f2);

std::string word_string(const std::vector<Event>& w);
std::vector<Event> parse_word(const std::string& s);

}  // namespace fk
