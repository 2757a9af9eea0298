#pragma once

#include "fk/kirby.hpp"
#include "fk/surgery.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fk {

struct ComponentEntry {
    std::string name;
    bool marked = false;
    Rational coeff = 0;
    bool closed = true;
    ClassicalInvariants classical;
    std::optional<Rational> topological;  // absent for marked or open components
    // writhe and cusp counts are diagram data, so only tb and rot take part
    bool operator==(const ComponentEntry&) const;
};

// Keyed by component label.
struct Ledger {
    std::map<int, ComponentEntry> comps;
    std::map<std::pair<int, int>, int> lk;  // label pairs, first < second
    HomologyReport h1;
    bool d3Defined = false;
    Rational d3 = 0;
    std::string d3Reason;
    int count = 0;
    int length = 0;
    bool closedKind = true;
    std::vector<Event> word;

    // length and word are not compared
    bool operator==(const Ledger& o) const;
    int lk_of(int a, int b) const;
};

Ledger ledger(const SurgeryDiagram& sd);
// Batch ledgers: OpenMP when available, with a serial reference.
std::vector<Ledger> ledgers(const std::vector<SurgeryDiagram>& sds);
std::vector<Ledger> ledgers_serial(const std::vector<SurgeryDiagram>& sds);

struct Clause {
    std::string name, expected, actual;
    bool pass = false;
};

struct VerificationReport {
    int step = 0;
    std::string move;
    std::vector<Clause> clauses;
    bool pass() const;
    std::string json() const;
};

// Component parameters hold labels; the rest are plain integers (sign, orient, handles).
using MoveParams = std::map<std::string, int>;

struct ContractClause {
    std::string name;
    std::vector<std::string> args;
};
const std::vector<ContractClause>& contract(MoveKind k);

VerificationReport check_move(const Ledger& before, const Ledger& after, MoveKind kind, const MoveParams& params,
                              int step = 0);

}  // namespace fk
