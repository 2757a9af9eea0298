#include "fk/verify.hpp"

#include "fk/io.hpp"

#include <json.hpp>

#include <exception>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fk {

bool ComponentEntry::operator==(const ComponentEntry& o) const {
    return name == o.name && marked == o.marked && coeff == o.coeff && closed == o.closed &&
           classical.tb == o.classical.tb && classical.rot == o.classical.rot && topological == o.topological;
}

bool Ledger::operator==(const Ledger& o) const {
    return comps == o.comps && lk == o.lk && h1 == o.h1 && d3Defined == o.d3Defined && d3 == o.d3 &&
           count == o.count && closedKind == o.closedKind;
}

int Ledger::lk_of(int a, int b) const {
    auto it = lk.find(a < b ? std::pair{a, b} : std::pair{b, a});
    return it == lk.end() ? 0 : it->second;
}

Ledger ledger(const SurgeryDiagram& sd) {
    const FrontDiagram& d = sd.diagram;
    Trace t = trace(d);
    Ledger L;
    int n = (int)t.comps.size();
    auto lkm = lk_matrix(d, t);
    for (int c = 0; c < n; ++c) {
        const Role& r = role_of(sd, c);
        ComponentEntry e;
        e.name = r.name;
        e.marked = r.marked;
        e.coeff = r.coeff;
        e.closed = t.comps[c].closed;
        e.classical = classical(d, t, c);
        if (!r.marked && e.closed) e.topological = Rational(e.classical.tb) + r.coeff;
        L.comps[d.label[c]] = e;
        for (int k = c + 1; k < n; ++k) {
            int a = d.label[c], b = d.label[k];
            L.lk[a < b ? std::pair{a, b} : std::pair{b, a}] = lkm[c][k];
        }
    }
    L.h1 = h1(sd, true);
    D3Report r = d3(sd);
    L.d3Defined = r.defined;
    L.d3 = r.value;
    L.d3Reason = r.reason;
    L.count = n;
    L.length = (int)d.events.size();
    L.closedKind = d.kind == Kind::Closed;
    L.word = d.events;
    return L;
}

std::vector<Ledger> ledgers_serial(const std::vector<SurgeryDiagram>& sds) {
    std::vector<Ledger> out;
    out.reserve(sds.size());
    for (const auto& sd : sds) out.push_back(ledger(sd));
    return out;
}

std::vector<Ledger> ledgers(const std::vector<SurgeryDiagram>& sds) {
    std::vector<Ledger> out(sds.size());
    std::exception_ptr err;
    long long n = (long long)sds.size();
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) {
        try {
            out[i] = ledger(sds[i]);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

bool VerificationReport::pass() const {
    for (const Clause& c : clauses)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::json() const {
    nlohmann::ordered_json j;
    j["step"] = step;
    j["move"] = move;
    j["clauses"] = nlohmann::ordered_json::array();
    for (const Clause& c : clauses)
        j["clauses"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    return j.dump();
}

namespace {

std::map<MoveKind, std::vector<ContractClause>> load_contracts() {
    std::map<MoveKind, std::vector<ContractClause>> out;
    std::istringstream in(kContracts);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find('|');
        std::string kind;
        std::istringstream(line.substr(0, bar)) >> kind;
        MoveKind k = parse_move_kind(kind);
        if (out.count(k)) throw Error(Code::SemanticError, "duplicate contract for " + kind);
        std::istringstream cs(line.substr(bar + 1));
        std::string tok;
        std::vector<ContractClause> clauses;
        while (cs >> tok) {
            ContractClause c;
            auto open = tok.find('(');
            c.name = tok.substr(0, open);
            if (open != std::string::npos) {
                std::string inner = tok.substr(open + 1, tok.size() - open - 2);
                std::istringstream as(inner);
                std::string a;
                while (std::getline(as, a, ',')) c.args.push_back(a);
            }
            clauses.push_back(c);
        }
        out[k] = clauses;
    }
    return out;
}

std::string classical_string(const ClassicalInvariants& c) {
    return "tb=" + std::to_string(c.tb) + " rot=" + std::to_string(c.rot);
}

std::string h1_string(const HomologyReport& h) {
    std::string s = "Z^" + std::to_string(h.freeRank);
    for (const Int& t : h.torsion) s += " + Z/" + t.str();
    return s;
}

std::string d3_string(const Ledger& L) { return L.d3Defined ? to_string(L.d3) : "undefined"; }

struct Checker {
    const Ledger &b, &a;
    const MoveParams& p;

    int param(const std::string& name) const {
        auto it = p.find(name);
        if (it == p.end()) throw Error(Code::SemanticError, "contract needs parameter " + name);
        return it->second;
    }

    int number(const std::string& s) const {
        if (s.empty()) throw Error(Code::SemanticError, "empty contract argument");
        if (isdigit((unsigned char)s[0]) || (s.size() > 1 && s[0] == '-' && isdigit((unsigned char)s[1])))
            return std::stoi(s);
        if (s[0] == '-') return -param(s.substr(1));
        return param(s);
    }

    // labels present on both sides, minus an optional excluded one
    std::vector<int> common(int skip = -1) const {
        std::vector<int> out;
        for (auto& [l, e] : b.comps)
            if (l != skip && a.comps.count(l)) out.push_back(l);
        return out;
    }

    const ComponentEntry& after(int l, const std::string& what) const {
        auto it = a.comps.find(l);
        if (it == a.comps.end()) throw Error(Code::SemanticError, what + ": component missing after the move");
        return it->second;
    }

    const ComponentEntry& before(int l, const std::string& what) const {
        auto it = b.comps.find(l);
        if (it == b.comps.end()) throw Error(Code::SemanticError, what + ": component missing before the move");
        return it->second;
    }

    Clause run(const ContractClause& c) const {
        Clause out;
        out.name = c.name;
        if (!c.args.empty()) {
            out.name += "(";
            for (size_t i = 0; i < c.args.size(); ++i) out.name += (i ? "," : "") + c.args[i];
            out.name += ")";
        }
        const std::string& n = c.name;
        if (n == "h1") {
            out.expected = h1_string(b.h1);
            out.actual = h1_string(a.h1);
            out.pass = b.h1 == a.h1;
        } else if (n == "d3") {
            out.expected = d3_string(b);
            out.actual = d3_string(a);
            out.pass = b.d3Defined == a.d3Defined && (!b.d3Defined || b.d3 == a.d3);
        } else if (n == "count") {
            int want = b.count + number(c.args.at(0));
            out.expected = std::to_string(want);
            out.actual = std::to_string(a.count);
            out.pass = want == a.count;
        } else if (n == "roles_kept") {
            out.pass = true;
            for (int l : common()) {
                const auto &x = b.comps.at(l), &y = a.comps.at(l);
                if (x.name != y.name || x.marked != y.marked || x.coeff != y.coeff) {
                    out.pass = false;
                    out.expected = x.name + " " + coeff_string(Role{x.marked, x.coeff, x.name});
                    out.actual = y.name + " " + coeff_string(Role{y.marked, y.coeff, y.name});
                    break;
                }
            }
            if (out.pass) out.expected = out.actual = "kept";
        } else if (n == "classical_kept" || n == "classical_others") {
            int skip = n == "classical_others" ? param(c.args.at(0)) : -1;
            out.pass = true;
            for (int l : common(skip)) {
                const auto &x = b.comps.at(l), &y = a.comps.at(l);
                if (x.classical.tb != y.classical.tb || x.classical.rot != y.classical.rot) {
                    out.pass = false;
                    out.expected = x.name + " " + classical_string(x.classical);
                    out.actual = y.name + " " + classical_string(y.classical);
                    break;
                }
            }
            if (out.pass) out.expected = out.actual = "kept";
        } else if (n == "lk_kept" || n == "lk_others") {
            int skip = n == "lk_others" ? param(c.args.at(0)) : -1;
            auto ls = common(skip);
            out.pass = true;
            for (size_t i = 0; i < ls.size() && out.pass; ++i)
                for (size_t j = i + 1; j < ls.size(); ++j) {
                    int x = b.lk_of(ls[i], ls[j]), y = a.lk_of(ls[i], ls[j]);
                    if (x != y) {
                        out.pass = false;
                        std::string pair = b.comps.at(ls[i]).name + "," + b.comps.at(ls[j]).name;
                        out.expected = "lk(" + pair + ")=" + std::to_string(x);
                        out.actual = "lk(" + pair + ")=" + std::to_string(y);
                        break;
                    }
                }
            if (out.pass) out.expected = out.actual = "kept";
        } else if (n == "framing") {
            int i = param(c.args.at(0)), j = param(c.args.at(1));
            const auto &bi = before(i, out.name), &bj = before(j, out.name), &ai = after(i, out.name);
            if (bi.marked) {
                out.pass = ai.marked;
                out.expected = "marked";
                out.actual = ai.marked ? "marked" : "not marked";
            } else {
                int orient = param("orient");
                Rational want = *bi.topological + *bj.topological + 2 * orient * b.lk_of(i, j);
                out.expected = "coeff " + to_string(bi.coeff) + ", f " + to_string(want);
                out.actual = "coeff " + to_string(ai.coeff) + ", f " +
                             (ai.topological ? to_string(*ai.topological) : std::string("none"));
                out.pass = ai.coeff == bi.coeff && ai.topological && *ai.topological == want;
            }
        } else if (n == "delta") {
            int l = param(c.args.at(0));
            int dtb = number(c.args.at(1)), drot = number(c.args.at(2));
            const auto &x = before(l, out.name), &y = after(l, out.name);
            ClassicalInvariants want = x.classical;
            want.tb += dtb;
            want.rot += drot;
            out.expected = classical_string(want);
            out.actual = classical_string(y.classical);
            out.pass = y.classical.tb == want.tb && y.classical.rot == want.rot;
        } else if (n == "meridian") {
            int tl = param(c.args.at(0)), bl = param(c.args.at(1));
            const auto& y = after(tl, out.name);
            int l = a.lk_of(tl, bl);
            out.expected = "tb=-1 |lk|=1";
            out.actual = "tb=" + std::to_string(y.classical.tb) + " |lk|=" + std::to_string(std::abs(l));
            out.pass = y.classical.tb == -1 && std::abs(l) == 1;
        } else if (n == "pushoff") {
            int tl = param(c.args.at(0)), bl = param(c.args.at(1));
            const auto &y = after(tl, out.name), &z = after(bl, out.name);
            int l = a.lk_of(tl, bl);
            out.expected = classical_string(z.classical) + " lk=" + std::to_string(z.classical.tb);
            out.actual = classical_string(y.classical) + " lk=" + std::to_string(l);
            out.pass = y.classical.tb == z.classical.tb && y.classical.rot == z.classical.rot && l == z.classical.tb;
        } else if (n == "closed") {
            out.expected = "closed";
            out.actual = a.closedKind ? "closed" : "not closed";
            out.pass = a.closedKind;
        } else if (n == "word_kept") {
            out.expected = word_string(b.word);
            out.actual = word_string(a.word);
            out.pass = b.word == a.word;
        } else {
            throw Error(Code::SemanticError, "unknown contract clause " + n);
        }
        return out;
    }
};

}  // namespace

const std::vector<ContractClause>& contract(MoveKind k) {
    static const auto table = load_contracts();
    auto it = table.find(k);
    if (it == table.end()) throw Error(Code::UnknownMoveKind, std::string("no contract for ") + move_kind_name(k));
    return it->second;
}

VerificationReport check_move(const Ledger& before, const Ledger& after, MoveKind kind, const MoveParams& params,
                              int step) {
    VerificationReport r;
    r.step = step;
    r.move = move_kind_name(kind);
    Checker ch{before, after, params};
    for (const ContractClause& c : contract(kind)) r.clauses.push_back(ch.run(c));
    return r;
}

}  // namespace fk
