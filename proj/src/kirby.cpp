#include "fk/kirby.hpp"

#include "fk/io.hpp"
#include "fk/route.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace fk {

namespace {

constexpr std::pair<MoveKind, const char*> kKindNames[] = {
    {MoveKind::R1, "R1"},
    {MoveKind::R2, "R2"},
    {MoveKind::R3, "R3"},
    {MoveKind::FC, "FC"},
    {MoveKind::Stabilize, "Stabilize"},
    {MoveKind::Destabilize, "Destabilize"},
    {MoveKind::HandleSlide, "HandleSlide"},
    {MoveKind::CancelPairInsert, "CancelPairInsert"},
    {MoveKind::CancelPairRemove, "CancelPairRemove"},
    {MoveKind::PushoffMeridianForward, "PushoffMeridianForward"},
    {MoveKind::PushoffMeridianBackward, "PushoffMeridianBackward"},
    {MoveKind::FirstKirbyAdd, "FirstKirbyAdd"},
    {MoveKind::FirstKirbyRemove, "FirstKirbyRemove"},
    {MoveKind::SharkDestabilize, "SharkDestabilize"},
    {MoveKind::SharkStabilize, "SharkStabilize"},
    {MoveKind::SharkInsert, "SharkInsert"},
    {MoveKind::ReplaceOneHandles, "ReplaceOneHandles"},
    {MoveKind::UnknotMove, "UnknotMove"},
    {MoveKind::Move6, "Move6"},
    {MoveKind::LightBulb, "LightBulb"},
    {MoveKind::RolfsenTwistView, "RolfsenTwistView"},
};

std::string fresh_name(const SurgeryDiagram& sd, const std::string& base) {
    std::set<std::string> used;
    for (auto& [l, r] : sd.roles) used.insert(r.name);
    if (!used.count(base)) return base;
    for (int i = 2;; ++i) {
        std::string n = base + "_" + std::to_string(i);
        if (!used.count(n)) return n;
    }
}

// Drops roles whose labels no longer occur.
void prune_roles(SurgeryDiagram& sd) {
    std::set<int> live(sd.diagram.label.begin(), sd.diagram.label.end());
    for (auto it = sd.roles.begin(); it != sd.roles.end();)
        it = live.count(it->first) ? std::next(it) : sd.roles.erase(it);
}

void check_comp(const SurgeryDiagram& sd, int c) {
    if (c < 0 || c >= (int)sd.diagram.label.size()) throw Error(Code::InvalidComponent, std::to_string(c));
}

}  // namespace

const char* move_kind_name(MoveKind k) {
    for (auto [m, n] : kKindNames)
        if (m == k) return n;
    return "?";
}

MoveKind parse_move_kind(const std::string& s) {
    for (auto [m, n] : kKindNames)
        if (s == n) return m;
    throw Error(Code::UnknownMoveKind, s);
}

Site site_on(const FrontDiagram& d, int c) {
    Trace t = trace(d);
    for (size_t i = 0; i < d.events.size(); ++i)
        if (d.events[i].kind == Ev::L && t.seg_comp[t.ev_seg[i][0]] == c) return {(int)i + 1, d.events[i].pos, 0};
    for (size_t g = 0; g < t.at.size(); ++g)
        for (size_t p = 0; p < t.at[g].size(); ++p)
            if (t.seg_comp[t.at[g][p]] == c) return {(int)g, (int)p + 1, 0};
    throw Error(Code::InvalidComponent, "component has no strand");
}

SurgeryDiagram relabel(SurgeryDiagram sd, int c, int label) {
    check_comp(sd, c);
    auto& lab = sd.diagram.label;
    for (size_t k = 0; k < lab.size(); ++k)
        if ((int)k != c && lab[k] == label) throw Error(Code::InvalidComponent, "label in use");
    lab[c] = label;
    return sd;
}

SurgeryDiagram handle_slide(const SurgeryDiagram& sd, int i, int j, Site bandTo, bool add) {
    const FrontDiagram& d = sd.diagram;
    check_comp(sd, i);
    check_comp(sd, j);
    if (i == j) throw Error(Code::SameComponent, "cannot slide a component over itself");
    const Role& rj = role_of(sd, j);
    if (rj.marked || (rj.coeff != 1 && rj.coeff != -1))
        throw Error(Code::CoefficientNotPlusMinusOne, rj.name);
    if (component_at(d, bandTo) != i) throw Error(Code::InvalidSite, "band site is not on the sliding component");
    Trace t = trace(d);
    if (!t.comps[j].closed) throw Error(Code::OpenComponent, rj.name);
    int li = d.label[i];
    // band site after doubling j
    auto onj = [&](int seg) { return t.seg_comp[seg] == j; };
    int ng = 0;
    for (int e = 0; e < bandTo.gap; ++e) {
        auto [u, l] = t.ev_seg[e];
        Ev k = d.events[e].kind;
        if (k == Ev::X) ng += onj(u) && onj(l) ? 4 : onj(u) || onj(l) ? 2 : 1;
        else ng += onj(u) ? 3 : 1;
    }
    int npos = bandTo.pos;
    for (int p = 0; p < bandTo.pos - 1; ++p) npos += onj(t.at[bandTo.gap][p]);

    auto [pd, copy] = pushoff(d, j);
    int lc = pd.label[copy];
    int jn = comp_of_label(pd, d.label[j]);
    Trace tp = trace(pd);
    int tg = -1, tq = 0;
    for (int g = 0; g < (int)tp.at.size() && tg < 0; ++g)
        for (int q = 0; q + 1 < (int)tp.at[g].size(); ++q)
            if (tp.seg_comp[tp.at[g][q]] == copy && tp.seg_comp[tp.at[g][q + 1]] == jn &&
                tp.dir[tp.at[g][q]] == tp.dir[tp.at[g][q + 1]]) {
                tg = g;
                tq = q + 1;
                break;
            }
    if (tg < 0) throw Error(Code::RoutingFailed, "push-off is never directly above its base");
    int sign = rj.coeff > 0 ? +1 : -1;
    FrontDiagram tw = add_twist(pd, copy, sign, {tg, tq, tq + 1});
    if (ng > tg) ng += 5;
    int cc = comp_of_label(tw, lc);
    if (!add) tw = reverse_component(tw, cc);
    int ci = comp_of_label(tw, li);
    FrontDiagram sum = connect_sum(tw, ci, {ng, npos, 0}, cc, site_on(tw, cc));
    SurgeryDiagram out = sd;
    out.diagram = sum;
    for (size_t k = 0; k < sum.label.size(); ++k)
        if (sum.label[k] == lc || sum.label[k] == li) out.diagram.label[k] = li;
    prune_roles(out);
    return out;
}

SurgeryDiagram cancel_pair_insert(const SurgeryDiagram& sd, const FrontDiagram& k, Site at, int base_coeff,
                                  const std::string& base_name, const std::string& push_name) {
    if (k.kind != Kind::Closed || num_components(k) != 1)
        throw Error(Code::InvalidComponent, "cancelling pair needs a single closed knot");
    if (base_coeff != 1 && base_coeff != -1) throw Error(Code::CoefficientNotPlusMinusOne, "base");
    FrontDiagram kk = k;
    kk.label = {0};
    auto [pd, copy] = pushoff(kk, 0);
    int base = comp_of_label(pd, 0);
    std::vector<int> lo;
    SurgeryDiagram out = sd;
    out.diagram = insert_split(sd.diagram, pd, at.gap, at.pos, &lo);
    Role rb{false, base_coeff, fresh_name(sd, base_name.empty() ? "b" : base_name)};
    out.roles[lo[base]] = rb;
    Role rp{false, -base_coeff, fresh_name(out, push_name.empty() ? "p" : push_name)};
    out.roles[lo[copy]] = rp;
    return out;
}

SurgeryDiagram cancel_pair_remove(const SurgeryDiagram& sd, int a, int b) {
    check_comp(sd, a);
    check_comp(sd, b);
    if (a == b) throw Error(Code::SameComponent, "cancel_pair");
    const Role &ra = role_of(sd, a), &rb = role_of(sd, b);
    const FrontDiagram& d = sd.diagram;
    Trace t = trace(d);
    if (!t.comps[a].closed || !t.comps[b].closed) throw Error(Code::NotAPushoffPair, "open component");
    if (ra.marked || rb.marked || ra.coeff + rb.coeff != 0 || (ra.coeff != 1 && ra.coeff != -1))
        throw Error(Code::NotAPushoffPair, "coefficients must be -1 and +1");
    auto ca = classical(d, t, a), cb = classical(d, t, b);
    if (ca.tb != cb.tb || ca.rot != cb.rot || lk(d, a, b) != ca.tb)
        throw Error(Code::NotAPushoffPair, ra.name + ", " + rb.name);
    if (!is_split(d, {a, b})) throw Error(Code::NotSplit, ra.name + ", " + rb.name);
    SurgeryDiagram out = sd;
    out.diagram = delete_components(d, {a, b});
    prune_roles(out);
    return out;
}

SurgeryDiagram pushoff_meridian(const SurgeryDiagram& sd, int base, int target, bool forward) {
    check_comp(sd, base);
    check_comp(sd, target);
    if (base == target) throw Error(Code::SameComponent, "pushoff_meridian");
    const Role& rb = role_of(sd, base);
    if (rb.marked || rb.coeff != -1) throw Error(Code::CoefficientNotMinusOne, rb.name);
    const FrontDiagram& d = sd.diagram;
    Trace t = trace(d);
    if (!t.comps[target].closed) throw Error(forward ? Code::NotAPushoff : Code::NotAMeridian, "open component");
    auto cb = classical(d, t, base), ct = classical(d, t, target);
    int lt = d.label[target], lb = d.label[base];
    if (forward) {
        if (ct.tb != cb.tb || ct.rot != cb.rot || lk(d, base, target) != cb.tb)
            throw Error(Code::NotAPushoff, role_of(sd, target).name);
    } else {
        bool ok = ct.tb == -1 && ct.rot == 0 && std::abs(lk(d, base, target)) == 1 &&
                  crossings_between(d, base, target) == 2;
        for (int x = 0; ok && x < (int)t.comps.size(); ++x)
            if (x != base && x != target && crossings_between(d, x, target) != 0) ok = false;
        if (!ok) throw Error(Code::NotAMeridian, role_of(sd, target).name);
    }
    FrontDiagram rest = delete_components(d, {target});
    int b2 = comp_of_label(rest, lb);
    FrontDiagram nd;
    int added;
    if (forward) std::tie(nd, added) = insert_meridian(rest, b2, site_on(rest, b2), false, +1);
    else std::tie(nd, added) = pushoff(rest, b2);
    SurgeryDiagram out = sd;
    out.diagram = nd;
    out = relabel(out, added, lt);
    return out;
}

SurgeryDiagram first_kirby_add(const SurgeryDiagram& sd, Site at) {
    SurgeryDiagram blk = parse_diagram(kFirstKirbyBlock);
    std::vector<int> lo;
    SurgeryDiagram out = sd;
    out.diagram = insert_split(sd.diagram, blk.diagram, at.gap, at.pos, &lo);
    for (size_t c = 0; c < blk.diagram.label.size(); ++c) {
        Role r = role_of(blk, (int)c);
        r.name = fresh_name(out, r.name);
        out.roles[lo[c]] = r;
    }
    return out;
}

SurgeryDiagram first_kirby_remove(const SurgeryDiagram& sd) {
    SurgeryDiagram blk = parse_diagram(kFirstKirbyBlock);
    FrontDiagram cb = canonical(blk.diagram);
    std::vector<Rational> bco;
    for (int l : cb.label) bco.push_back(blk.roles.at(l).coeff);
    const FrontDiagram& d = sd.diagram;
    Trace t = trace(d);
    int nc = (int)t.comps.size();
    // groups of components joined by crossings
    std::vector<int> parent(nc);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (size_t i = 0; i < d.events.size(); ++i)
        if (d.events[i].kind == Ev::X) parent[find(t.seg_comp[t.ev_seg[i][0]])] = find(t.seg_comp[t.ev_seg[i][1]]);
    std::map<int, std::vector<int>> groups;
    for (int c = 0; c < nc; ++c) groups[find(c)].push_back(c);
    int ncb = (int)cb.label.size();
    for (auto& [root, g] : groups) {
        if ((int)g.size() != ncb) continue;
        bool surgery = true;
        for (int c : g) surgery = surgery && t.comps[c].closed && !role_of(sd, c).marked;
        if (!surgery) continue;
        FrontDiagram e = canonical(extract(d, g));
        if (e.events != cb.events || e.orient != cb.orient) continue;
        bool same = true;
        for (int c = 0; c < ncb; ++c) same = same && sd.roles.at(e.label[c]).coeff == bco[c];
        if (!same) continue;
        SurgeryDiagram out = sd;
        out.diagram = delete_components(d, g);
        prune_roles(out);
        return out;
    }
    throw Error(Code::BlockNotFound, "no split copy of the first Kirby block");
}

int shark_side_for(int zigzag_sign) {
    static const std::map<int, int> table = [] {
        std::map<int, int> t;
        std::istringstream in(kSharkPlacement);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto bar = line.find('|');
            std::string s, side;
            std::istringstream(line.substr(0, bar)) >> s;
            std::istringstream(line.substr(bar + 1)) >> side;
            t[s == "+" ? +1 : -1] = side == "below" ? +1 : -1;
        }
        return t;
    }();
    return table.at(zigzag_sign > 0 ? +1 : -1);
}

int shark_side(const SurgeryDiagram& sd, int s, int c) {
    const FrontDiagram& d = sd.diagram;
    const Role& r = role_of(sd, s);
    if (s == c || r.marked || r.coeff != 1) return 0;
    Trace t = trace(d);
    if (!t.comps[s].closed || classical(d, t, s).tb != -2) return 0;
    if (std::abs(lk(d, s, c)) != 1 || crossings_between(d, s, c) != 2) return 0;
    for (int x = 0; x < (int)t.comps.size(); ++x)
        if (x != s && x != c && t.comps[x].closed && lk(d, s, x) != 0) return 0;
    // side of the first crossing between the shark and c
    for (size_t g = 0; g < d.events.size(); ++g) {
        if (d.events[g].kind != Ev::X) continue;
        int u = t.seg_comp[t.ev_seg[g][0]], l = t.seg_comp[t.ev_seg[g][1]];
        if (u == c && l == s) return +1;
        if (u == s && l == c) return -1;
    }
    return 0;
}

SurgeryDiagram insert_shark(const SurgeryDiagram& sd, int c, Site s, int zigzag_sign, const std::string& name) {
    check_comp(sd, c);
    int side = shark_side_for(zigzag_sign);
    bool below = side > 0;
    auto [md, m] = insert_meridian(sd.diagram, c, s, below, +1);
    int p = s.pos;
    FrontDiagram sh = stabilize(md, m, zigzag_sign, {s.gap + 3, below ? p + 2 : p, 0});
    SurgeryDiagram out = sd;
    out.diagram = sh;
    int ms = comp_of_label(sh, md.label[m]);
    out.roles[sh.label[ms]] = Role{false, 1, fresh_name(sd, name.empty() ? "shark" : name)};
    return out;
}

SurgeryDiagram shark_destabilize(const SurgeryDiagram& sd, int c, Site zz, int* sign_out) {
    check_comp(sd, c);
    if (!role_of(sd, c).marked) throw Error(Code::InvalidComponent, "shark moves act on marked knots");
    const FrontDiagram& d = sd.diagram;
    Trace t = trace(d);
    if (zz.gap < 0 || zz.gap >= (int)d.events.size() || d.events[zz.gap].kind != Ev::L ||
        t.seg_comp[t.ev_seg[zz.gap][0]] != c)
        throw Error(Code::NoZigzag, "no left cusp of the component at gap " + std::to_string(zz.gap));
    FrontDiagram nd;
    try {
        nd = destabilize(d, zz);
    } catch (const Error& e) {
        if (e.code == Code::NoZigzagAtSite) throw Error(Code::NoZigzag, e.what());
        throw;
    }
    int lc = d.label[c];
    int c2 = comp_of_label(nd, lc);
    int sign = classical(d, t, c).rot - classical(nd, c2).rot;
    SurgeryDiagram out = sd;
    out.diagram = nd;
    int want = shark_side_for(sign);
    for (int s = 0; s < (int)nd.label.size(); ++s) {
        if (s == c2 || role_of(out, s).used) continue;
        if (shark_side(out, s, c2) == want) {
            role_of(out, s).used = true;
            if (sign_out) *sign_out = sign;
            return out;
        }
    }
    throw Error(Code::NoShark, std::string("no unused shark on the ") + (want > 0 ? "lower" : "upper") + " side");
}

SurgeryDiagram shark_stabilize(const SurgeryDiagram& sd, int c, int sign, Site s) {
    check_comp(sd, c);
    if (!role_of(sd, c).marked) throw Error(Code::InvalidComponent, "shark moves act on marked knots");
    int want = shark_side_for(sign);
    for (int k = 0; k < (int)sd.diagram.label.size(); ++k) {
        if (k == c || !role_of(sd, k).used) continue;
        if (shark_side(sd, k, c) != want) continue;
        SurgeryDiagram out = sd;
        out.diagram = stabilize(sd.diagram, c, sign, s);
        int k2 = comp_of_label(out.diagram, sd.diagram.label[k]);
        if (shark_side(out, k2, comp_of_label(out.diagram, sd.diagram.label[c])) != want)
            throw Error(Code::InvalidSite, "stabilization separates the shark from its strand");
        role_of(out, k2).used = false;
        return out;
    }
    throw Error(Code::NoShark, "no used shark to release");
}

namespace {

// m parallel left cusps at s, each arc a Legendrian push-off of the one below it
void open_block(std::vector<Event>& w, int s, int m) {
    w.push_back(Lc(s));
    for (int j = 2; j <= m; ++j) {
        w.push_back(Lc(s + 2 * j - 2));
        for (int x = s + 2 * j - 3; x >= s + j - 1; --x) w.push_back(Xc(x));
    }
}

// mirror image of open_block
void close_block(std::vector<Event>& w, int s, int m) {
    for (int j = m; j >= 2; --j) {
        for (int x = s + j - 1; x <= s + 2 * j - 3; ++x) w.push_back(Xc(x));
        w.push_back(Rc(s + 2 * j - 2));
    }
    w.push_back(Rc(s));
}

}  // namespace

SurgeryDiagram replace_one_handles(const SurgeryDiagram& sd) {
    const FrontDiagram& d = sd.diagram;
    if (d.kind != Kind::Standard) return sd;
    trace(d);
    int k0 = d.k0;
    std::vector<const Handle*> byA, byC;
    for (const Handle& h : d.handles)
        if (h.size() > 0) {
            byA.push_back(&h);
            byC.push_back(&h);
        }
    std::sort(byA.begin(), byA.end(), [](auto x, auto y) { return x->a > y->a; });
    std::sort(byC.begin(), byC.end(), [](auto x, auto y) { return x->c < y->c; });

    FrontDiagram nd;
    nd.kind = Kind::Closed;
    // closing arcs: lowest block outermost, so the body's boundary strands sit below all upper arcs
    std::vector<int> bmap(k0);
    int nl = 0, up = 0;
    for (const Handle* h : byA) {
        int m = h->size();
        open_block(nd.events, up + 1, m);
        for (int j = 0; j < m; ++j) bmap[h->a - 1 + j] = 2 * (nl + j) + 1;
        nl += m;
        up += m;
    }
    std::vector<int> bundle_at;
    for (const Handle& h : d.handles) {
        int m = h.size();
        bundle_at.push_back((int)nd.events.size());
        if (m == 0) {
            nd.events.insert(nd.events.end(), {Lc(1), Rc(1)});
            continue;
        }
        int p = k0 + 1 - h.b;
        nd.events.push_back(Lc(p));
        for (int x = p + 1; x <= p + m; ++x) nd.events.push_back(Xc(x));
        for (int x = p + m; x >= p + 1; --x) nd.events.push_back(Xc(x));
        nd.events.push_back(Rc(p));
    }
    std::vector<int> emap(d.events.size());
    for (size_t i = 0; i < d.events.size(); ++i) {
        emap[i] = (int)nd.events.size();
        nd.events.push_back({d.events[i].kind, d.events[i].pos + k0});
    }
    // upper arc of left strand a+i sits at k0-b+i+1 and must reach k0-d+i+1
    std::vector<int> want(k0 + 1, 0);
    for (const Handle& h : d.handles)
        for (int i = 0; i < h.size(); ++i) want[k0 - h.b + i + 1] = k0 - h.d + i + 1;
    for (bool moved = true; moved;) {
        moved = false;
        for (int p = 1; p < k0; ++p)
            if (want[p] > want[p + 1]) {
                std::swap(want[p], want[p + 1]);
                nd.events.push_back(Xc(p));
                moved = true;
            }
    }
    for (const Handle* h : byC) {
        close_block(nd.events, up - h->size() + 1, h->size());
        up -= h->size();
    }
    Carry cs{&d, emap};
    cs.bmap = bmap;
    nd = rebuild(nd, {cs});
    SurgeryDiagram out;
    out.diagram = nd;
    out.roles = sd.roles;
    Trace tn = trace(nd);
    for (size_t h = 0; h < d.handles.size(); ++h) {
        int c = tn.seg_comp[tn.ev_seg[bundle_at[h]][0]];
        out.roles[nd.label[c]] = Role{false, 1, fresh_name(out, "h_" + d.handles[h].name)};
    }
    return out;
}

const std::vector<UnknotMoveSpec>& unknot_move_table() {
    static const std::vector<UnknotMoveSpec> table = [] {
        std::vector<UnknotMoveSpec> out;
        std::istringstream in(kUnknotMoves);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::vector<std::string> f;
            std::string cell;
            std::istringstream ls(line);
            while (std::getline(ls, cell, '|')) f.push_back(cell);
            UnknotMoveSpec s;
            std::istringstream(f.at(0)) >> s.name;
            s.k0 = std::stoi(f.at(1));
            s.src = parse_word(f.at(2));
            s.dst = parse_word(f.at(3));
            std::istringstream ps(f.at(4));
            std::string tok;
            while (ps >> tok) s.path.push_back(parse_move(tok));
            out.push_back(s);
        }
        return out;
    }();
    return table;
}

const UnknotMoveSpec& unknot_move_spec(const std::string& name) {
    for (const auto& s : unknot_move_table())
        if (s.name == name) return s;
    throw Error(Code::UnknownMoveKind, "unknot move " + name);
}

SurgeryDiagram unknot_move(const SurgeryDiagram& sd, const std::string& kind, Site at, bool forward) {
    const UnknotMoveSpec& spec = unknot_move_spec(kind);
    const FrontDiagram& d = sd.diagram;
    int off = at.pos - 1;
    auto shifted = [&](const std::vector<Event>& w) {
        std::vector<Event> r;
        for (Event e : w) r.push_back({e.kind, e.pos + off});
        return r;
    };
    auto from = shifted(forward ? spec.src : spec.dst), to = shifted(forward ? spec.dst : spec.src);
    int n = (int)d.events.size(), len = (int)from.size();
    if (at.gap < 0 || at.pos < 1 || at.gap + len > n || strands_at(d, at.gap) < off + spec.k0 ||
        !std::equal(from.begin(), from.end(), d.events.begin() + at.gap))
        throw Error(Code::PatternMismatch, kind + " window does not match");
    Trace t = trace(d);
    bool plus_one = false;
    for (int c = 0; c < (int)t.comps.size() && !plus_one; ++c) {
        const Role& r = role_of(sd, c);
        if (r.marked || r.coeff != 1) continue;
        bool inside = true, has_l = false;
        for (int i = 0; i < n; ++i) {
            auto [u, l] = t.ev_seg[i];
            bool mine = t.seg_comp[u] == c || t.seg_comp[l] == c;
            if (!mine) continue;
            if (i < at.gap || i >= at.gap + len) inside = false;
            if (d.events[i].kind == Ev::L) has_l = true;
        }
        plus_one = inside && has_l;
    }
    if (!plus_one) throw Error(Code::PatternMismatch, kind + " window holds no (+1) unknot");
    std::vector<RMove> path;
    if (forward) path = spec.path;
    else
        for (auto it = spec.path.rbegin(); it != spec.path.rend(); ++it) path.push_back(inverse(*it));
    for (RMove& m : path) {
        m.site.gap += at.gap;
        if (m.variant != Variant::FC) m.site.pos += off;
    }
    SurgeryDiagram out = sd;
    out.diagram = apply_moves(d, path);
    if (!std::equal(to.begin(), to.end(), out.diagram.events.begin() + at.gap))
        throw Error(Code::PatternMismatch, kind + " path did not reach its target window");
    return out;
}

namespace {

void check_plus_one_unknot(const SurgeryDiagram& sd, int l0) {
    const Role& r = role_of(sd, l0);
    Trace t = trace(sd.diagram);
    if (r.marked || r.coeff != 1 || !t.comps[l0].closed) throw Error(Code::NotAPlusOneUnknot, r.name);
    auto ci = classical(sd.diagram, t, l0);
    if (ci.tb != -1 || ci.rot != 0 || ci.rightCusps != 1) throw Error(Code::NotAPlusOneUnknot, r.name);
}

void check_through_once(const SurgeryDiagram& sd, int c, int l0) {
    if (crossings_between(sd.diagram, c, l0) != 2 || std::abs(lk(sd.diagram, c, l0)) != 1)
        throw Error(Code::NotThroughOnce, role_of(sd, c).name);
}

}  // namespace

SurgeryDiagram move6(const SurgeryDiagram& sd, int c, int l0, std::optional<Site> at) {
    check_comp(sd, c);
    check_comp(sd, l0);
    if (c == l0) throw Error(Code::SameComponent, "move6");
    check_plus_one_unknot(sd, l0);
    check_through_once(sd, c, l0);
    bool add = lk(sd.diagram, c, l0) == -1;
    if (at) return handle_slide(sd, c, l0, *at, add);
    Trace t = trace(sd.diagram);
    for (int g = 0; g < (int)t.at.size(); ++g)
        for (int p = 0; p < (int)t.at[g].size(); ++p) {
            if (t.seg_comp[t.at[g][p]] != c) continue;
            try {
                return handle_slide(sd, c, l0, {g, p + 1, 0}, add);
            } catch (const Error& e) {
                if (e.code != Code::RoutingFailed && e.code != Code::BlockedByBoundary) throw;
            }
        }
    throw Error(Code::RoutingFailed, "no band site on the component reaches the unknot");
}

RolfsenReport rolfsen_twist_view(const SurgeryDiagram& sd, int l0, int c, int base_tb, int base_rot) {
    check_comp(sd, c);
    check_comp(sd, l0);
    check_plus_one_unknot(sd, l0);
    if (std::abs(lk(sd.diagram, c, l0)) != 1) throw Error(Code::NotThroughOnce, role_of(sd, c).name);
    RolfsenReport r;
    r.surfaceFraming = topological_coefficient(sd, l0);
    auto ci = classical(sd.diagram, c);
    r.tb = ci.tb;
    r.rot = ci.rot;
    r.dTb = ci.tb - base_tb;
    r.dRot = ci.rot - base_rot;
    r.km = match_stabilizations(r.dTb, r.dRot);
    return r;
}

}  // namespace fk
