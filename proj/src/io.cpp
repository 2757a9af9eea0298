#include "fk/io.hpp"

#include "fk/rewrite.hpp"

#include <set>
#include <sstream>

namespace fk {

namespace {

struct Line {
    int no;
    std::string text;

    [[noreturn]] void fail(size_t col, const std::string& expected) const {
        throw Error(Code::SyntaxError,
                    "line " + std::to_string(no) + ", col " + std::to_string(col + 1) + ": expected " + expected, no);
    }
};

size_t skip_ws(const std::string& s, size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return i;
}

bool is_name_char(char c) { return isalnum((unsigned char)c) || c == '_' || c == '-' || c == '.'; }

// parses "<int>..<int>"
std::pair<int, int> parse_range(const Line& ln, const std::string& v, size_t col) {
    auto dots = v.find("..");
    if (dots == std::string::npos) ln.fail(col, "<a>..<b>");
    auto num = [&](const std::string& t, size_t c) {
        if (t.empty()) ln.fail(c, "integer");
        for (char ch : t)
            if (!isdigit((unsigned char)ch)) ln.fail(c, "integer");
        return std::stoi(t);
    };
    return {num(v.substr(0, dots), col), num(v.substr(dots + 2), col + dots + 2)};
}

// key=value pairs after the colon
std::vector<std::tuple<std::string, std::string, size_t>> parse_pairs(const Line& ln, size_t i) {
    std::vector<std::tuple<std::string, std::string, size_t>> out;
    const std::string& s = ln.text;
    while (true) {
        i = skip_ws(s, i);
        if (i >= s.size()) break;
        size_t k0 = i;
        while (i < s.size() && isalpha((unsigned char)s[i])) ++i;
        if (i == k0 || i >= s.size() || s[i] != '=') ln.fail(i, "key=value");
        std::string key = s.substr(k0, i - k0);
        ++i;
        size_t v0 = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i == v0) ln.fail(i, "value");
        out.emplace_back(key, s.substr(v0, i - v0), v0);
    }
    return out;
}

}  // namespace

SurgeryDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    bool have_kind = false, have_word = false;
    FrontDiagram d;
    struct CompLine {
        std::string name;
        int orient;
        Role role;
        int line;
    };
    std::vector<CompLine> comps;
    std::set<std::string> names;
    while (std::getline(in, raw)) {
        ++no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        Line ln{no, raw};
        size_t i = skip_ws(raw, 0);
        if (i >= raw.size()) continue;
        size_t k0 = i;
        while (i < raw.size() && isalpha((unsigned char)raw[i])) ++i;
        std::string key = raw.substr(k0, i - k0);
        if (key == "kind") {
            i = skip_ws(raw, i);
            if (i >= raw.size() || raw[i] != ':') ln.fail(i, "':'");
            i = skip_ws(raw, i + 1);
            size_t v0 = i;
            while (i < raw.size() && isalpha((unsigned char)raw[i])) ++i;
            std::string v = raw.substr(v0, i - v0);
            if (v == "closed") {
                d.kind = Kind::Closed;
            } else if (v == "long") {
                d.kind = Kind::Long;
                d.k0 = 1;
            } else if (v == "standard") {
                d.kind = Kind::Standard;
                if (i >= raw.size() || raw[i] != '(') ln.fail(i, "'('");
                size_t n0 = ++i;
                while (i < raw.size() && isdigit((unsigned char)raw[i])) ++i;
                if (i == n0) ln.fail(i, "strand count");
                d.k0 = std::stoi(raw.substr(n0, i - n0));
                if (i >= raw.size() || raw[i] != ')') ln.fail(i, "')'");
                ++i;
            } else {
                ln.fail(v0, "closed, long or standard(k0)");
            }
            if (skip_ws(raw, i) < raw.size()) ln.fail(skip_ws(raw, i), "end of line");
            have_kind = true;
        } else if (key == "word") {
            i = skip_ws(raw, i);
            if (i >= raw.size() || raw[i] != ':') ln.fail(i, "':'");
            ++i;
            while (true) {
                i = skip_ws(raw, i);
                if (i >= raw.size()) break;
                char c = raw[i];
                if (c != 'L' && c != 'R' && c != 'X') ln.fail(i, "event L<i>, R<i> or X<i>");
                size_t n0 = ++i;
                while (i < raw.size() && isdigit((unsigned char)raw[i])) ++i;
                if (i == n0 || (i < raw.size() && raw[i] != ' ' && raw[i] != '\t')) ln.fail(i, "strand position");
                int p = std::stoi(raw.substr(n0, i - n0));
                d.events.push_back({c == 'L' ? Ev::L : c == 'R' ? Ev::R : Ev::X, p});
            }
            have_word = true;
        } else if (key == "handle" || key == "comp") {
            i = skip_ws(raw, i);
            size_t n0 = i;
            while (i < raw.size() && is_name_char(raw[i])) ++i;
            if (i == n0) ln.fail(i, "name");
            std::string name = raw.substr(n0, i - n0);
            i = skip_ws(raw, i);
            if (i >= raw.size() || raw[i] != ':') ln.fail(i, "':'");
            auto pairs = parse_pairs(ln, i + 1);
            if (key == "handle") {
                Handle h;
                h.name = name;
                bool l = false, r = false;
                for (auto& [k, v, col] : pairs) {
                    if (k == "left") {
                        std::tie(h.a, h.b) = parse_range(ln, v, col);
                        l = true;
                    } else if (k == "right") {
                        std::tie(h.c, h.d) = parse_range(ln, v, col);
                        r = true;
                    } else {
                        ln.fail(col - k.size() - 1, "left= or right=");
                    }
                }
                if (!l || !r) ln.fail(raw.size(), "left=<a>..<b> right=<c>..<d>");
                d.handles.push_back(h);
            } else {
                CompLine cl{name, 0, {}, no};
                cl.role.name = name;
                bool co = false;
                for (auto& [k, v, col] : pairs) {
                    if (k == "orient") {
                        if (v == "+") cl.orient = 1;
                        else if (v == "-") cl.orient = -1;
                        else ln.fail(col, "'+' or '-'");
                    } else if (k == "coeff") {
                        co = true;
                        if (v == "marked") {
                            cl.role.marked = true;
                        } else {
                            try {
                                cl.role.coeff = parse_rational(v);
                            } catch (const Error&) {
                                ln.fail(col, "coefficient p/q, +n, -n or marked");
                            }
                            if (cl.role.coeff == 0) throw Error(Code::SemanticError, "line " + std::to_string(no) + ": contact coefficient 0 is not allowed", no);
                        }
                    } else if (k == "used") {
                        if (v != "yes" && v != "no") ln.fail(col, "yes or no");
                        cl.role.used = v == "yes";
                    } else {
                        ln.fail(col - k.size() - 1, "orient=, coeff= or used=");
                    }
                }
                if (!cl.orient) ln.fail(raw.size(), "orient=");
                if (!co) ln.fail(raw.size(), "coeff=");
                if (!names.insert(name).second)
                    throw Error(Code::SemanticError, "line " + std::to_string(no) + ": duplicate component " + name, no);
                comps.push_back(cl);
            }
        } else {
            ln.fail(k0, "kind:, word:, handle or comp");
        }
    }
    if (!have_kind) throw Error(Code::SyntaxError, "line " + std::to_string(no + 1) + ", col 1: expected kind:", no + 1);
    if (!have_word) throw Error(Code::SyntaxError, "line " + std::to_string(no + 1) + ", col 1: expected word:", no + 1);
    Trace t;
    try {
        t = trace(d, false);
    } catch (const Error& e) {
        throw Error(Code::SemanticError, std::string("invalid word: ") + e.what(), e.index);
    }
    if (comps.size() != t.comps.size())
        throw Error(Code::SemanticError, "word has " + std::to_string(t.comps.size()) + " components, " +
                                             std::to_string(comps.size()) + " comp lines");
    SurgeryDiagram sd;
    d.orient.clear();
    for (size_t c = 0; c < comps.size(); ++c) {
        d.orient.push_back(comps[c].orient);
        d.label.push_back((int)c);
        sd.roles[(int)c] = comps[c].role;
    }
    sd.diagram = d;
    return sd;
}

std::string coeff_string(const Role& r) {
    if (r.marked) return "marked";
    using boost::multiprecision::denominator;
    if (denominator(r.coeff) == 1) return (r.coeff > 0 ? "+" : "") + to_string(r.coeff);
    return to_string(r.coeff);
}

std::string serialize_diagram(const SurgeryDiagram& sd) {
    const FrontDiagram& d0 = sd.diagram;
    FrontDiagram d = canonical(d0);
    std::ostringstream out;
    out << "kind: ";
    if (d.kind == Kind::Closed) out << "closed";
    else if (d.kind == Kind::Long) out << "long";
    else out << "standard(" << d.k0 << ")";
    out << "\nword:";
    for (const Event& e : d.events) out << ' ' << (e.kind == Ev::L ? 'L' : e.kind == Ev::R ? 'R' : 'X') << e.pos;
    out << "\n";
    for (const Handle& h : d.handles)
        out << "handle " << h.name << ": left=" << h.a << ".." << h.b << " right=" << h.c << ".." << h.d << "\n";
    for (size_t c = 0; c < d.label.size(); ++c) {
        auto it = sd.roles.find(d.label[c]);
        if (it == sd.roles.end()) throw Error(Code::InvalidComponent, "component without role");
        out << "comp " << it->second.name << ": orient=" << (d.orient[c] > 0 ? '+' : '-')
            << " coeff=" << coeff_string(it->second);
        if (it->second.used) out << " used=yes";
        out << "\n";
    }
    return out.str();
}

}  // namespace fk
