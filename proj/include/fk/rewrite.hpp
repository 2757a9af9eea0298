#pragma once

#include "fk/front.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fk {

enum class RKind { R1, R2, R3, FC };

// Frozen plat-position variant table, see data/rmove_variants.txt.
//   R1a   []      <-> L(p+1) X(p) R(p+1)
//   R1b   []      <-> L(p) X(p+1) R(p)
//   R2La  L(p)    <-> L(p+1) X(p) X(p+1)
//   R2Lb  L(p+1)  <-> L(p) X(p+1) X(p)
//   R2Ra  R(p)    <-> X(p+1) X(p) R(p+1)
//   R2Rb  R(p+1)  <-> X(p) X(p+1) R(p)
//   R3    X(p) X(p+1) X(p) <-> X(p+1) X(p) X(p+1)
//   FC    far commutation of the events at gap, gap+1
enum class Variant { R1a, R1b, R2La, R2Lb, R2Ra, R2Rb, R3, FC };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& s);
RKind kind_of(Variant v);

struct RMove {
    Variant variant;
    bool forward = true;
    Site site;  // gap = first event of the pattern; pos = p in the table
    bool operator==(const RMove&) const = default;
};

RMove inverse(const RMove& m);

struct RewriteRecord {
    RKind kind;
    RMove move;
    std::uint64_t before = 0, after = 0;
};

std::uint64_t word_hash(const std::vector<Event>& w);

// Small and large sides of a variant at position p.
std::vector<Event> variant_side(Variant v, int p, bool large);

// Every site where kind applies, in (gap, pos, variant, direction) order.
std::vector<RMove> applicable_sites(const FrontDiagram& d, RKind kind);
std::vector<RMove> applicable_sites(const FrontDiagram& d);

// Word-level application only; returns false on mismatch.
bool apply_word(std::vector<Event>& w, int k0, const RMove& m, std::vector<int>* emap = nullptr);

std::pair<FrontDiagram, RewriteRecord> apply_reidemeister(const FrontDiagram& d, const RMove& m);
FrontDiagram apply_moves(const FrontDiagram& d, const std::vector<RMove>& ms);
FrontDiagram far_commute(const FrontDiagram& d, int gap);

// Greedy far-commutation normal form, orientation and labels carried.
FrontDiagram canonical(const FrontDiagram& d);
std::vector<Event> canonical_word(const std::vector<Event>& w);

std::string move_string(const RMove& m);
// Inverse of move_string: "R2La+@3:1", "FC@4".
RMove parse_move(const std::string& s);

}  // namespace fk
