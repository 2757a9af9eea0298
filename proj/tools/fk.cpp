#include "fk/io.hpp"
#include "fk/script.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fk;

namespace {

enum Exit { Ok = 0, ParseFail = 1, SemanticFail = 2, VerifyFail = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot write " + out);
    f << text;
}

int exit_for(const Error& e) { return e.code == Code::SyntaxError ? ParseFail : SemanticFail; }

std::string h1_text(const HomologyReport& h) {
    std::string s;
    if (h.freeRank == 0 && h.torsion.empty()) return "0";
    if (h.freeRank) s = h.freeRank == 1 ? "Z" : "Z^" + std::to_string(h.freeRank);
    for (const Int& t : h.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
    return s;
}

nlohmann::ordered_json ledger_json(const Ledger& L) {
    nlohmann::ordered_json j;
    j["components"] = nlohmann::ordered_json::array();
    for (auto& [label, e] : L.comps) {
        nlohmann::ordered_json c;
        c["name"] = e.name;
        c["coefficient"] = e.marked ? "marked" : to_string(e.coeff);
        c["closed"] = e.closed;
        c["tb"] = e.classical.tb;
        c["rot"] = e.classical.rot;
        c["writhe"] = e.classical.writhe;
        c["rightCusps"] = e.classical.rightCusps;
        if (e.topological) c["topological"] = to_string(*e.topological);
        j["components"].push_back(c);
    }
    j["linking"] = nlohmann::ordered_json::array();
    for (auto& [p, v] : L.lk)
        j["linking"].push_back({{"a", L.comps.at(p.first).name}, {"b", L.comps.at(p.second).name}, {"lk", v}});
    j["h1"] = {{"free", L.h1.freeRank}, {"torsion", nlohmann::ordered_json::array()}};
    for (const Int& t : L.h1.torsion) j["h1"]["torsion"].push_back(t.str());
    if (L.d3Defined) j["d3"] = to_string(L.d3);
    else j["d3"] = nullptr, j["d3Reason"] = L.d3Reason;
    return j;
}

std::string ledger_text(const std::string& title, const Ledger& L) {
    std::ostringstream os;
    if (!title.empty()) os << "# " << title << "\n";
    for (auto& [label, e] : L.comps) {
        os << e.name << ": coeff " << (e.marked ? "marked" : to_string(e.coeff)) << " tb " << e.classical.tb
           << " rot " << e.classical.rot;
        if (e.topological) os << " topological " << to_string(*e.topological);
        if (!e.closed) os << " (open)";
        os << "\n";
    }
    for (auto& [p, v] : L.lk) os << "lk(" << L.comps.at(p.first).name << ", " << L.comps.at(p.second).name << ") = " << v << "\n";
    os << "H1 = " << h1_text(L.h1) << "\n";
    os << "d3 = " << (L.d3Defined ? to_string(L.d3) : "undefined (" + L.d3Reason + ")") << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian front and contact surgery diagram tool"};
    app.require_subcommand(1);

    std::string file, script, out, format = "ascii";
    std::vector<std::string> files;
    bool verify = false, json = false, long_knot = false;
    int tb = -1, rot = 0;

    auto* check = app.add_subcommand("check", "parse and validate a diagram file");
    check->add_option("file", file)->required();

    auto* inv = app.add_subcommand("invariants", "print tb, rot, linking, H1 and d3 for diagram files");
    inv->add_option("files", files)->required();
    inv->add_flag("--json", json, "JSON output");

    auto* apply = app.add_subcommand("apply", "run a move script on a diagram");
    apply->add_option("file", file)->required();
    apply->add_option("script", script)->required();
    apply->add_flag("--verify", verify, "check every step against its contract");
    apply->add_option("--out", out, "write the resulting diagram here");
    apply->add_flag("--json", json, "print reports as JSON lines");

    auto* render = app.add_subcommand("render", "draw a diagram");
    render->add_option("file", file)->required();
    render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--out", out);

    auto* gen = app.add_subcommand("gen", "generate diagrams");
    gen->require_subcommand(1);
    auto* gen_unknot = gen->add_subcommand("unknot", "unknot with given tb < 0 and rot");
    gen_unknot->add_option("--tb", tb)->required();
    gen_unknot->add_option("--rot", rot)->required();
    gen_unknot->add_flag("--long", long_knot, "long unknot instead of a closed one");
    gen_unknot->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) {
            auto sd = parse_diagram(slurp(file));
            validate(sd.diagram);
            std::cout << "ok: " << num_components(sd.diagram) << " components, " << sd.diagram.events.size()
                      << " events\n";
        } else if (*inv) {
            std::vector<SurgeryDiagram> sds;
            for (auto& f : files) sds.push_back(parse_diagram(slurp(f)));
            auto ls = ledgers(sds);
            if (json) {
                nlohmann::ordered_json all = nlohmann::ordered_json::array();
                for (size_t i = 0; i < ls.size(); ++i) {
                    auto j = ledger_json(ls[i]);
                    j["file"] = files[i];
                    all.push_back(j);
                }
                std::cout << (files.size() == 1 ? all[0].dump(2) : all.dump(2)) << "\n";
            } else {
                for (size_t i = 0; i < ls.size(); ++i)
                    std::cout << ledger_text(files.size() > 1 ? files[i] : "", ls[i]);
            }
        } else if (*apply) {
            auto sd = parse_diagram(slurp(file));
            auto steps = parse_script(slurp(script));
            auto r = run_script(sd, steps, verify);
            for (auto& rep : r.reports) {
                if (json) {
                    std::cout << rep.json() << "\n";
                    continue;
                }
                std::cout << "step " << rep.step << " " << rep.move << ": " << (rep.pass() ? "pass" : "FAIL") << "\n";
                for (auto& c : rep.clauses)
                    if (!c.pass) std::cout << "  " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
            }
            for (auto& n : r.notes) std::cerr << n << "\n";
            if (!r.ok) return VerifyFail;
            emit(serialize_diagram(r.diagram), out);
        } else if (*render) {
            auto sd = parse_diagram(slurp(file));
            emit(format == "svg" ? render_svg(sd) : render_ascii(sd), out);
        } else if (*gen_unknot) {
            SurgeryDiagram sd;
            sd.diagram = unknot_with_invariants(tb, rot, long_knot);
            sd.roles[sd.diagram.label[0]] = Role{true, 0, "U"};
            emit(serialize_diagram(sd), out);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ParseFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    }
    return Ok;
}
