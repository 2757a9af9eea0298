#include "fk/rewrite.hpp"

#include "fk/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace fk {

namespace {

constexpr Variant kAll[] = {Variant::R1a, Variant::R1b, Variant::R2La, Variant::R2Lb,
                            Variant::R2Ra, Variant::R2Rb, Variant::R3, Variant::FC};

int rank(Ev k) { return k == Ev::R ? 0 : k == Ev::X ? 1 : 2; }

bool less_event(Event a, Event b) { return std::pair(a.pos, rank(a.kind)) < std::pair(b.pos, rank(b.kind)); }

}  // namespace

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::R1a: return "R1a";
    case Variant::R1b: return "R1b";
    case Variant::R2La: return "R2La";
    case Variant::R2Lb: return "R2Lb";
    case Variant::R2Ra: return "R2Ra";
    case Variant::R2Rb: return "R2Rb";
    case Variant::R3: return "R3";
    case Variant::FC: return "FC";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    for (Variant v : kAll)
        if (s == variant_name(v)) return v;
    throw Error(Code::SyntaxError, "unknown variant '" + s + "'");
}

RKind kind_of(Variant v) {
    switch (v) {
    case Variant::R1a:
    case Variant::R1b: return RKind::R1;
    case Variant::R3: return RKind::R3;
    case Variant::FC: return RKind::FC;
    default: return RKind::R2;
    }
}

RMove inverse(const RMove& m) {
    RMove r = m;
    if (m.variant != Variant::FC) r.forward = !m.forward;
    return r;
}

std::uint64_t word_hash(const std::vector<Event>& w) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (const Event& e : w) {
        mix(static_cast<std::uint64_t>(e.kind));
        mix(static_cast<std::uint64_t>(e.pos));
    }
    mix(w.size());
    return h;
}

namespace {

struct VariantRow {
    std::vector<std::pair<Ev, int>> side[2];  // small, large: kind and offset from p
    int margin = 0;                           // p <= k + margin
};

std::vector<std::pair<Ev, int>> parse_side(const std::string& s) {
    std::vector<std::pair<Ev, int>> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        // L[p], X[p+1], ...
        Ev k = tok[0] == 'L' ? Ev::L : tok[0] == 'R' ? Ev::R : Ev::X;
        int off = 0;
        auto plus = tok.find('+');
        if (plus != std::string::npos) off = std::stoi(tok.substr(plus + 1));
        out.push_back({k, off});
    }
    return out;
}

const std::map<Variant, VariantRow>& variant_table() {
    static const std::map<Variant, VariantRow> table = [] {
        std::map<Variant, VariantRow> t;
        std::istringstream in(kRMoveVariants);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> f;
            std::string cell;
            std::istringstream ls(line);
            while (std::getline(ls, cell, '|')) f.push_back(cell);
            std::string name;
            std::istringstream(f.at(0)) >> name;
            VariantRow r;
            r.side[0] = parse_side(f.at(1));
            r.side[1] = parse_side(f.at(2));
            std::string lim;
            std::istringstream(f.at(3)) >> lim;
            r.margin = lim == "k" ? 0 : std::stoi(lim.substr(1));
            t[parse_variant(name)] = r;
        }
        return t;
    }();
    return table;
}

}  // namespace

std::vector<Event> variant_side(Variant v, int p, bool large) {
    std::vector<Event> out;
    if (v == Variant::FC) return out;
    for (auto [k, off] : variant_table().at(v).side[large ? 1 : 0]) out.push_back({k, p + off});
    return out;
}

namespace {

bool side_ok(Variant v, int p, int k) {
    if (v == Variant::FC) return true;
    return p >= 1 && p <= k + variant_table().at(v).margin;
}

bool matches(const std::vector<Event>& w, int g, const std::vector<Event>& pat) {
    if (g < 0 || g + (int)pat.size() > (int)w.size()) return false;
    return std::equal(pat.begin(), pat.end(), w.begin() + g);
}

int count_at(const std::vector<Event>& w, int k0, int g) {
    int k = k0;
    for (int i = 0; i < g; ++i) k += w[i].kind == Ev::L ? 2 : w[i].kind == Ev::R ? -2 : 0;
    return k;
}

}  // namespace

bool apply_word(std::vector<Event>& w, int k0, const RMove& m, std::vector<int>* emap) {
    int n = (int)w.size();
    int g = m.site.gap, p = m.site.pos;
    if (g < 0 || g > n) return false;
    if (m.variant == Variant::FC) {
        if (g + 1 >= n) return false;
        Event f1, f2;
        if (!far_commute_events(w[g], w[g + 1], f1, f2)) return false;
        w[g] = f1;
        w[g + 1] = f2;
        if (emap) {
            *emap = identity_map(n);
            std::swap((*emap)[g], (*emap)[g + 1]);
        }
        return true;
    }
    auto from = variant_side(m.variant, p, !m.forward);
    auto to = variant_side(m.variant, p, m.forward);
    if (!matches(w, g, from)) return false;
    if (!side_ok(m.variant, p, count_at(w, k0, g))) return false;
    w.erase(w.begin() + g, w.begin() + g + from.size());
    w.insert(w.begin() + g, to.begin(), to.end());
    if (emap) *emap = shift_map(n, g, (int)to.size() - (int)from.size(), g, g + (int)from.size());
    return true;
}

std::vector<RMove> applicable_sites(const FrontDiagram& d, RKind kind) {
    std::vector<RMove> out;
    const auto& w = d.events;
    int n = (int)w.size();
    auto ks = strand_counts(w, d.k0);
    for (int g = 0; g <= n; ++g) {
        int k = ks[g];
        for (Variant v : kAll) {
            if (kind_of(v) != kind) continue;
            if (v == Variant::FC) {
                Event f1, f2;
                if (g + 1 < n && far_commute_events(w[g], w[g + 1], f1, f2)) out.push_back({v, true, {g, 0, 0}});
                continue;
            }
            for (int p = 1; p <= k + 1; ++p) {
                if (!side_ok(v, p, k)) continue;
                for (bool fwd : {true, false}) {
                    auto from = variant_side(v, p, !fwd);
                    if (matches(w, g, from)) out.push_back({v, fwd, {g, p, 0}});
                }
            }
        }
    }
    return out;
}

std::vector<RMove> applicable_sites(const FrontDiagram& d) {
    std::vector<RMove> out;
    for (RKind k : {RKind::R1, RKind::R2, RKind::R3, RKind::FC}) {
        auto s = applicable_sites(d, k);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::pair<FrontDiagram, RewriteRecord> apply_reidemeister(const FrontDiagram& d, const RMove& m) {
    FrontDiagram nd = d;
    std::vector<int> emap;
    if (!apply_word(nd.events, d.k0, m, &emap)) {
        Code c = m.variant == Variant::FC ? Code::Overlapping : Code::PatternMismatch;
        throw Error(c, move_string(m));
    }
    nd = rebuild(std::move(nd), {{&d, emap}});
    RewriteRecord r{kind_of(m.variant), m, word_hash(d.events), word_hash(nd.events)};
    return {nd, r};
}

FrontDiagram apply_moves(const FrontDiagram& d, const std::vector<RMove>& ms) {
    FrontDiagram cur = d;
    for (const RMove& m : ms) cur = apply_reidemeister(cur, m).first;
    return cur;
}

FrontDiagram far_commute(const FrontDiagram& d, int gap) {
    return apply_reidemeister(d, {Variant::FC, true, {gap, 0, 0}}).first;
}

namespace {

// Moves event j to index i by far commutations; returns false if blocked.
bool bubble(std::vector<Event>& w, std::vector<int>& ids, int i, int j) {
    for (int t = j; t > i; --t) {
        Event f1, f2;
        if (!far_commute_events(w[t - 1], w[t], f1, f2)) return false;
        w[t - 1] = f1;
        w[t] = f2;
        std::swap(ids[t - 1], ids[t]);
    }
    return true;
}

// One greedy pass: each slot takes the smallest event that far-commutes into it,
// the earliest on ties. A pass never makes the word lexicographically larger.
void greedy_pass(std::vector<Event>& w, std::vector<int>& ids) {
    int n = (int)w.size();
    for (int i = 0; i < n; ++i) {
        Event key{};
        int pick = -1;
        for (int j = i; j < n; ++j) {
            Event cur = w[j];
            bool ok = true;
            for (int t = j - 1; t >= i && ok; --t) {
                Event f1, f2;
                ok = far_commute_events(w[t], cur, f1, f2);
                cur = f1;
            }
            if (ok && (pick < 0 || less_event(cur, key))) {
                key = cur;
                pick = j;
            }
        }
        bubble(w, ids, i, pick);
    }
}

// Repeated passes reach a fixed point, so the result is idempotent.
void normalize(std::vector<Event>& w, std::vector<int>& ids) {
    while (true) {
        std::vector<Event> before = w;
        greedy_pass(w, ids);
        if (w == before) return;
    }
}

}  // namespace

std::vector<Event> canonical_word(const std::vector<Event>& w) {
    std::vector<Event> r = w;
    std::vector<int> ids = identity_map((int)w.size());
    normalize(r, ids);
    return r;
}

FrontDiagram canonical(const FrontDiagram& d) {
    FrontDiagram nd = d;
    int n = (int)d.events.size();
    std::vector<int> ids = identity_map(n);
    normalize(nd.events, ids);
    std::vector<int> emap(n);
    for (int i = 0; i < n; ++i) emap[ids[i]] = i;
    return rebuild(std::move(nd), {{&d, emap}});
}

RMove parse_move(const std::string& s) {
    auto bad = [&] { return Error(Code::SyntaxError, "bad move '" + s + "'"); };
    auto at = s.find('@');
    if (at == std::string::npos || at == 0) throw bad();
    std::string head = s.substr(0, at), tail = s.substr(at + 1);
    RMove m{Variant::FC, true, {0, 0, 0}};
    if (head != "FC") {
        char d = head.back();
        if (d != '+' && d != '-') throw bad();
        m.forward = d == '+';
        head.pop_back();
    }
    m.variant = parse_variant(head);
    auto colon = tail.find(':');
    try {
        size_t used = 0;
        m.site.gap = std::stoi(tail.substr(0, colon), &used);
        if (used != (colon == std::string::npos ? tail.size() : colon)) throw bad();
        if (colon != std::string::npos) {
            m.site.pos = std::stoi(tail.substr(colon + 1), &used);
            if (used != tail.size() - colon - 1) throw bad();
        }
    } catch (const std::logic_error&) {
        throw bad();
    }
    if ((m.variant == Variant::FC) != (colon == std::string::npos)) throw bad();
    return m;
}

std::string move_string(const RMove& m) {
    std::string s = variant_name(m.variant);
    if (m.variant != Variant::FC) s += m.forward ? "+" : "-";
    s += "@" + std::to_string(m.site.gap);
    if (m.variant != Variant::FC) s += ":" + std::to_string(m.site.pos);
    return s;
}

}  // namespace fk
