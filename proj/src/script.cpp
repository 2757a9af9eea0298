#include "fk/script.hpp"

#include "fk/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fk {

std::vector<ScriptStep> parse_script(const std::string& text) {
    std::vector<ScriptStep> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        ScriptStep st;
        st.line = no;
        size_t i = 0, n = raw.size();
        auto fail = [&](size_t col, const std::string& what) {
            throw Error(Code::SyntaxError,
                        "line " + std::to_string(no) + ", col " + std::to_string(col + 1) + ": expected " + what, no);
        };
        auto skip = [&] {
            while (i < n && (raw[i] == ' ' || raw[i] == '\t')) ++i;
        };
        skip();
        if (i >= n || raw[i] == '#') continue;
        size_t s0 = i;
        while (i < n && isalnum((unsigned char)raw[i])) ++i;
        if (i == s0) fail(i, "move name");
        st.op = raw.substr(s0, i - s0);
        while (true) {
            skip();
            if (i >= n || raw[i] == '#') break;
            size_t k0 = i;
            while (i < n && (isalnum((unsigned char)raw[i]) || raw[i] == '_')) ++i;
            if (i == k0 || i >= n || raw[i] != '=') fail(i, "key=value");
            std::string key = raw.substr(k0, i - k0);
            ++i;
            std::string val;
            if (i < n && raw[i] == '"') {
                size_t close = raw.find('"', i + 1);
                if (close == std::string::npos) fail(n, "closing quote");
                val = raw.substr(i + 1, close - i - 1);
                i = close + 1;
            } else {
                size_t v0 = i;
                while (i < n && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '#') ++i;
                if (i == v0) fail(i, "value");
                val = raw.substr(v0, i - v0);
            }
            if (st.args.count(key)) fail(k0, "each key once");
            st.args[key] = val;
        }
        out.push_back(st);
    }
    return out;
}

namespace {

struct StepContext {
    const ScriptStep& st;
    int index;

    [[noreturn]] void fail(Code c, const std::string& msg) const {
        throw Error(c, "step " + std::to_string(index) + " (line " + std::to_string(st.line) + "): " + msg, index);
    }

    bool has(const std::string& k) const { return st.args.count(k) > 0; }

    const std::string& arg(const std::string& k) const {
        auto it = st.args.find(k);
        if (it == st.args.end()) fail(Code::SemanticError, st.op + " needs " + k + "=");
        return it->second;
    }

    std::string arg_or(const std::string& k, const std::string& def) const { return has(k) ? arg(k) : def; }

    int integer(const std::string& k) const {
        const std::string& v = arg(k);
        try {
            size_t used = 0;
            int x = std::stoi(v, &used);
            if (used == v.size()) return x;
        } catch (const std::exception&) {
        }
        fail(Code::SemanticError, k + " must be an integer");
    }

    int sign(const std::string& k) const {
        const std::string& v = arg(k);
        if (v == "+" || v == "+1" || v == "1") return +1;
        if (v == "-" || v == "-1") return -1;
        fail(Code::SemanticError, k + " must be + or -");
    }

    Site site(const std::string& k) const {
        const std::string& v = arg(k);
        auto colon = v.find(':');
        try {
            if (colon != std::string::npos) {
                size_t u1 = 0, u2 = 0;
                std::string a = v.substr(0, colon), b = v.substr(colon + 1);
                int g = std::stoi(a, &u1), p = std::stoi(b, &u2);
                if (u1 == a.size() && u2 == b.size()) return {g, p, 0};
            }
        } catch (const std::exception&) {
        }
        fail(Code::SemanticError, k + " must be gap:pos");
    }

    int comp(const SurgeryDiagram& sd, const std::string& k) const {
        const std::string& name = arg(k);
        int c = find_component(sd, name);
        if (c < 0) fail(Code::SemanticError, "unknown component " + name);
        return c;
    }

    std::string choice(const std::string& k, std::initializer_list<const char*> opts) const {
        const std::string& v = arg(k);
        for (const char* o : opts)
            if (v == o) return v;
        std::string all;
        for (const char* o : opts) all += std::string(all.empty() ? "" : "|") + o;
        fail(Code::SemanticError, k + " must be " + all);
    }
};

struct Applied {
    SurgeryDiagram sd;
    MoveKind kind;
    MoveParams params;
    std::string note;
};

Applied apply_step(const SurgeryDiagram& sd, const StepContext& cx) {
    const std::string& op = cx.st.op;
    const FrontDiagram& d = sd.diagram;
    Applied a{sd, MoveKind::R1, {}, ""};
    auto label = [&](int c) { return d.label[c]; };
    if (op == "Reidemeister") {
        RMove m;
        try {
            m = parse_move(cx.arg("move"));
        } catch (const Error& e) {
            cx.fail(Code::SemanticError, e.what());
        }
        switch (kind_of(m.variant)) {
            case RKind::R1: a.kind = MoveKind::R1; break;
            case RKind::R2: a.kind = MoveKind::R2; break;
            case RKind::R3: a.kind = MoveKind::R3; break;
            case RKind::FC: a.kind = MoveKind::FC; break;
        }
        a.sd.diagram = apply_reidemeister(d, m).first;
    } else if (op == "Stabilize") {
        int c = cx.comp(sd, "c"), s = cx.sign("sign");
        a.kind = MoveKind::Stabilize;
        a.sd.diagram = stabilize(d, c, s, cx.site("at"));
        a.params = {{"c", label(c)}, {"sign", s}};
    } else if (op == "Destabilize") {
        int c = cx.comp(sd, "c");
        Site z = cx.site("at");
        if (component_at(d, z) != c) cx.fail(Code::InvalidSite, "site is not on " + cx.arg("c"));
        int s = zigzag_sign(d, z);
        a.kind = MoveKind::Destabilize;
        a.sd.diagram = destabilize(d, z);
        a.params = {{"c", label(c)}, {"sign", s}};
    } else if (op == "HandleSlide") {
        int i = cx.comp(sd, "i"), j = cx.comp(sd, "j");
        bool add = cx.choice("orientation", {"add", "subtract"}) == "add";
        a.kind = MoveKind::HandleSlide;
        a.sd = handle_slide(sd, i, j, cx.site("at"), add);
        a.params = {{"i", label(i)}, {"j", label(j)}, {"orient", add ? 1 : -1}};
    } else if (op == "CancelPair") {
        if (cx.choice("dir", {"insert", "remove"}) == "insert") {
            FrontDiagram k;
            try {
                k = from_word(parse_word(cx.arg("word")));
            } catch (const Error& e) {
                cx.fail(Code::SemanticError, e.what());
            }
            int base = cx.has("base") ? cx.sign("base") : -1;
            std::string bn = "b", pn = "p";
            if (cx.has("names")) {
                const std::string& v = cx.arg("names");
                auto comma = v.find(',');
                if (comma == std::string::npos) cx.fail(Code::SemanticError, "names must be <base>,<pushoff>");
                bn = v.substr(0, comma);
                pn = v.substr(comma + 1);
                if (find_component(sd, bn) >= 0 || find_component(sd, pn) >= 0 || bn == pn)
                    cx.fail(Code::SemanticError, "component names already in use");
            }
            a.kind = MoveKind::CancelPairInsert;
            a.sd = cancel_pair_insert(sd, k, cx.site("at"), base, bn, pn);
            std::set<int> old(d.label.begin(), d.label.end());
            for (int l : a.sd.diagram.label)
                if (!old.count(l)) a.params[a.sd.roles.at(l).coeff == base ? "b" : "p"] = l;
        } else {
            int x = cx.comp(sd, "a"), y = cx.comp(sd, "b");
            a.kind = MoveKind::CancelPairRemove;
            a.sd = cancel_pair_remove(sd, x, y);
        }
    } else if (op == "PushoffMeridian") {
        bool fwd = cx.choice("dir", {"forward", "backward"}) == "forward";
        int b = cx.comp(sd, "base"), t = cx.comp(sd, "target");
        a.kind = fwd ? MoveKind::PushoffMeridianForward : MoveKind::PushoffMeridianBackward;
        a.sd = pushoff_meridian(sd, b, t, fwd);
        a.params = {{"base", label(b)}, {"target", label(t)}};
    } else if (op == "FirstKirby") {
        if (cx.choice("dir", {"add", "remove"}) == "add") {
            a.kind = MoveKind::FirstKirbyAdd;
            a.sd = first_kirby_add(sd, cx.site("at"));
        } else {
            a.kind = MoveKind::FirstKirbyRemove;
            a.sd = first_kirby_remove(sd);
        }
    } else if (op == "SharkInsert") {
        int c = cx.comp(sd, "c");
        a.kind = MoveKind::SharkInsert;
        a.sd = insert_shark(sd, c, cx.site("at"), cx.sign("sign"), cx.arg_or("name", ""));
    } else if (op == "SharkStab") {
        int c = cx.comp(sd, "c");
        if (cx.choice("dir", {"destabilize", "stabilize"}) == "destabilize") {
            int s = 0;
            a.kind = MoveKind::SharkDestabilize;
            a.sd = shark_destabilize(sd, c, cx.site("at"), &s);
            a.params = {{"c", label(c)}, {"sign", s}};
        } else {
            int s = cx.sign("sign");
            a.kind = MoveKind::SharkStabilize;
            a.sd = shark_stabilize(sd, c, s, cx.site("at"));
            a.params = {{"c", label(c)}, {"sign", s}};
        }
    } else if (op == "ReplaceOneHandles") {
        a.kind = MoveKind::ReplaceOneHandles;
        a.sd = replace_one_handles(sd);
        a.params = {{"handles", (int)d.handles.size()}};
    } else if (op == "UnknotMove" || op == "LightBulb") {
        std::string kind = op == "LightBulb" ? "move6" : cx.arg("kind");
        if (kind == "move6") {
            int c = cx.comp(sd, "c"), l0 = cx.comp(sd, "l0");
            std::optional<Site> at;
            if (cx.has("at")) at = cx.site("at");
            a.kind = op == "LightBulb" ? MoveKind::LightBulb : MoveKind::Move6;
            a.sd = move6(sd, c, l0, at);
            a.params = {{"c", label(c)}, {"l0", label(l0)}, {"orient", lk(d, c, l0) == -1 ? 1 : -1}};
        } else {
            bool fwd = cx.arg_or("dir", "forward") == "forward";
            if (cx.has("dir")) cx.choice("dir", {"forward", "backward"});
            a.kind = MoveKind::UnknotMove;
            a.sd = unknot_move(sd, kind, cx.site("at"), fwd);
        }
    } else if (op == "RolfsenTwistView") {
        int l0 = cx.comp(sd, "l0"), c = cx.comp(sd, "c");
        auto ci = classical(d, c);
        int bt = cx.has("base_tb") ? cx.integer("base_tb") : ci.tb;
        int br = cx.has("base_rot") ? cx.integer("base_rot") : ci.rot;
        RolfsenReport r = rolfsen_twist_view(sd, l0, c, bt, br);
        a.kind = MoveKind::RolfsenTwistView;
        std::ostringstream os;
        os << "rolfsen " << cx.arg("l0") << ": surface framing " << to_string(r.surfaceFraming) << "; "
           << cx.arg("c") << " tb " << r.tb << " rot " << r.rot << ", delta (" << r.dTb << ", " << r.dRot << "), ";
        if (r.km) os << "(k, m) = (" << r.km->first << ", " << r.km->second << ")";
        else os << "no stabilization match";
        a.note = os.str();
    } else {
        cx.fail(Code::UnknownMoveKind, "unknown move " + op);
    }
    return a;
}

}  // namespace

ScriptResult run_script(const SurgeryDiagram& sd, const std::vector<ScriptStep>& steps, bool verify) {
    ScriptResult res;
    res.diagram = sd;
    res.diagram.diagram = canonical(sd.diagram);
    for (size_t k = 0; k < steps.size(); ++k) {
        int index = (int)k + 1;
        StepContext cx{steps[k], index};
        Ledger before;
        if (verify) before = ledger(res.diagram);
        Applied a;
        try {
            a = apply_step(res.diagram, cx);
        } catch (const Error& e) {
            if (e.index == index) throw;
            throw Error(e.code,
                        "step " + std::to_string(index) + " (line " + std::to_string(steps[k].line) + "): " + e.what(),
                        index);
        }
        if (!a.note.empty()) res.notes.push_back(a.note);
        if (verify) {
            Ledger after = ledger(a.sd);
            VerificationReport r = check_move(before, after, a.kind, a.params, index);
            res.reports.push_back(r);
            if (!r.pass()) {
                res.ok = false;
                return res;
            }
        }
        res.diagram = a.sd;
        res.diagram.diagram = canonical(a.sd.diagram);
    }
    return res;
}

namespace {

struct Layout {
    Trace t;
    int n = 0;       // events
    int height = 0;  // max strands
};

Layout layout(const FrontDiagram& d) {
    Layout L;
    L.t = trace(d);
    L.n = (int)d.events.size();
    for (auto& col : L.t.at) L.height = std::max(L.height, (int)col.size());
    return L;
}

std::string coeff_label(const Role& r) { return r.name + " " + coeff_string(r); }

// event index of the first right cusp of each component, -1 when none
std::vector<int> first_right_cusp(const FrontDiagram& d, const Trace& t) {
    std::vector<int> out(t.comps.size(), -1);
    for (int i = (int)d.events.size() - 1; i >= 0; --i)
        if (d.events[i].kind == Ev::R) out[t.seg_comp[t.ev_seg[i][0]]] = i;
    return out;
}

}  // namespace

std::string render_ascii(const SurgeryDiagram& sd0) {
    SurgeryDiagram sd = sd0;
    sd.diagram = canonical(sd0.diagram);
    const FrontDiagram& d = sd.diagram;
    Layout L = layout(d);
    int rows = std::max(1, 2 * L.height - 1), cols = 6 * L.n + 2;
    std::vector<std::string> g(rows, std::string(cols, ' '));
    auto put = [&](int r, int c, char ch) {
        if (r >= 0 && r < rows && c >= 0 && c < cols) g[r][c] = ch;
    };
    auto frc = first_right_cusp(d, L.t);
    for (int gap = 0; gap <= L.n; ++gap)
        for (int p = 0; p < (int)L.t.at[gap].size(); ++p) {
            put(2 * p, 6 * gap, '-');
            put(2 * p, 6 * gap + 1, '-');
        }
    for (int i = 0; i < L.n; ++i) {
        const Event& e = d.events[i];
        int x = 6 * i + 2, q = e.pos - 1;
        const auto &before = L.t.at[i], &after = L.t.at[i + 1];
        for (int j = 0; j < (int)before.size(); ++j) {
            auto it = std::find(after.begin(), after.end(), before[j]);
            if (it == after.end() || (e.kind == Ev::X && (j == q || j == q + 1))) continue;
            int r0 = 2 * j, r1 = 2 * (int)(it - after.begin());
            put(r0, x, '-');
            put(r1, x + 3, '-');
            if (r0 == r1) {
                put(r0, x + 1, '-');
                put(r0, x + 2, '-');
            }
            for (int r = std::min(r0, r1) + 1; r < std::max(r0, r1); ++r)
                put(r, 2 * (r - std::min(r0, r1)) < std::abs(r1 - r0) ? x + 1 : x + 2, r1 > r0 ? '\\' : '/');
        }
        if (e.kind == Ev::L) {
            put(2 * q + 1, x + 2, '<');
            put(2 * q, x + 3, '-');
            put(2 * q + 2, x + 3, '-');
        } else if (e.kind == Ev::R) {
            put(2 * q + 1, x + 1, '>');
            int c = L.t.seg_comp[L.t.ev_seg[i][0]];
            if (frc[c] == i) put(2 * q + 1, x + 2, c < 9 ? char('1' + c) : char('a' + c - 9));
        } else {
            put(2 * q, x, '-');
            put(2 * q + 2, x, '-');
            put(2 * q + 1, x + 1, 'X');
            put(2 * q + 1, x + 2, 'X');
            put(2 * q, x + 3, '-');
            put(2 * q + 2, x + 3, '-');
        }
    }
    std::string out;
    for (auto& row : g) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + "\n";
    }
    for (int c = 0; c < (int)L.t.comps.size(); ++c) {
        auto ci = classical(d, L.t, c);
        out += std::string(frc[c] >= 0 ? "[" : "(") + (c < 9 ? char('1' + c) : char('a' + c - 9)) +
               (frc[c] >= 0 ? "] " : ") ") + coeff_label(role_of(sd, c)) + "  tb " + std::to_string(ci.tb) +
               " rot " + std::to_string(ci.rot) + "\n";
    }
    return out;
}

std::string render_svg(const SurgeryDiagram& sd0) {
    SurgeryDiagram sd = sd0;
    sd.diagram = canonical(sd0.diagram);
    const FrontDiagram& d = sd.diagram;
    Layout L = layout(d);
    const int dx = 40, dy = 24, m = 30;
    int w = 2 * m + dx * (L.n + 1), h = 2 * m + dy * std::max(1, L.height) + 20;
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    auto X = [&](double gap) { return m + dx * gap; };
    auto Y = [&](double pos) { return m + dy * pos; };
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    int nseg = L.t.nseg;
    // polyline per segment: its position at each gap, plus cusp points
    std::vector<std::vector<std::pair<double, double>>> pts(nseg);
    std::vector<int> seg_start(nseg, -1);
    for (int gap = 0; gap <= L.n; ++gap)
        for (int p = 0; p < (int)L.t.at[gap].size(); ++p) {
            int s = L.t.at[gap][p];
            if (gap > 0 && d.events[gap - 1].kind == Ev::L && seg_start[s] < 0) {
                int q = d.events[gap - 1].pos - 1;
                pts[s].push_back({X(gap - 0.5), Y(q + 0.5)});
            }
            if (seg_start[s] < 0) seg_start[s] = gap;
            pts[s].push_back({X(gap), Y(p)});
        }
    for (int i = 0; i < L.n; ++i)
        if (d.events[i].kind == Ev::R) {
            int q = d.events[i].pos - 1;
            for (int s : L.t.ev_seg[i]) pts[s].push_back({X(i + 0.5), Y(q + 0.5)});
        }
    auto polyline = [&](const std::vector<std::pair<double, double>>& ps, const char* color) {
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (size_t k = 0; k < ps.size(); ++k) os << (k ? " " : "") << ps[k].first << "," << ps[k].second;
        os << "\"/>\n";
    };
    for (int s = 0; s < nseg; ++s) polyline(pts[s], palette[L.t.seg_comp[s] % 8]);
    // crossings: the descending strand is redrawn on top of a gap in the other
    for (int i = 0; i < L.n; ++i) {
        if (d.events[i].kind != Ev::X) continue;
        int q = d.events[i].pos - 1;
        int down = L.t.at[i][q];
        os << "<circle cx=\"" << X(i + 0.5) << "\" cy=\"" << Y(q + 0.5) << "\" r=\"5\" fill=\"white\"/>\n";
        polyline({{X(i), Y(q)}, {X(i + 1), Y(q + 1)}}, palette[L.t.seg_comp[down] % 8]);
    }
    auto frc = first_right_cusp(d, L.t);
    for (int c = 0; c < (int)L.t.comps.size(); ++c) {
        std::string text = coeff_label(role_of(sd, c));
        std::string esc;
        for (char ch : text) {
            if (ch == '<') esc += "&lt;";
            else if (ch == '>') esc += "&gt;";
            else if (ch == '&') esc += "&amp;";
            else esc += ch;
        }
        double x = frc[c] >= 0 ? X(frc[c] + 0.5) + 6 : X(0);
        double y = frc[c] >= 0 ? Y(d.events[frc[c]].pos - 0.5) + 4 : Y(0) - 8;
        os << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"11\" fill=\""
           << palette[c % 8] << "\">" << esc << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace fk
