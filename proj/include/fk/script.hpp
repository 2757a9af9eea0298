#pragma once

#include "fk/verify.hpp"

#include <map>
#include <string>
#include <vector>

namespace fk {

// Move script: one invocation per line, `<Op> key=value ...`; values may be
// double-quoted; '#' starts a comment. Sites are written gap:pos and refer to
// the canonical word, as serialized, before the step.
//   Reidemeister move=R2La+@3:1 | move=FC@4
//   Stabilize c=<name> sign=+|- at=<site>
//   Destabilize c=<name> at=<site>
//   HandleSlide i=<name> j=<name> at=<site> orientation=add|subtract
//   CancelPair dir=insert word="L1 R1" at=<site> [base=-1|+1] [names=<b>,<p>]
//   CancelPair dir=remove a=<name> b=<name>
//   PushoffMeridian dir=forward|backward base=<name> target=<name>
//   FirstKirby dir=add at=<site> | dir=remove
//   SharkInsert c=<name> at=<site> sign=+|- [name=<n>]
//   SharkStab dir=destabilize c=<name> at=<site> | dir=stabilize c=<name> sign=+|- at=<site>
//   ReplaceOneHandles
//   UnknotMove kind=<move4|move5|meridianIsotopy1|...> at=<site> [dir=forward|backward]
//   UnknotMove kind=move6 c=<name> l0=<name> [at=<site>]
//   LightBulb c=<name> l0=<name> [at=<site>]
//   RolfsenTwistView l0=<name> c=<name> [base_tb=<n> base_rot=<n>]
struct ScriptStep {
    int line = 0;
    std::string op;
    std::map<std::string, std::string> args;
};

std::vector<ScriptStep> parse_script(const std::string& text);

struct ScriptResult {
    SurgeryDiagram diagram;
    std::vector<VerificationReport> reports;
    std::vector<std::string> notes;  // read-only reports
    bool ok = true;                  // false when a verification failed
};

// Per-step failures throw Error with index = step number (1-based).
ScriptResult run_script(const SurgeryDiagram& sd, const std::vector<ScriptStep>& steps, bool verify);

std::string render_ascii(const SurgeryDiagram& sd);
std::string render_svg(const SurgeryDiagram& sd);

}  // namespace fk
