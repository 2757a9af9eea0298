#include "fk/front.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fk {

const char* code_name(Code c) {
    switch (c) {
    case Code::PositionOutOfRange: return "PositionOutOfRange";
    case Code::BoundaryMismatch: return "BoundaryMismatch";
    case Code::OrientationMissing: return "OrientationMissing";
    case Code::UncoveredBoundaryStrand: return "UncoveredBoundaryStrand";
    case Code::InvalidComponent: return "InvalidComponent";
    case Code::SameComponent: return "SameComponent";
    case Code::OpenComponent: return "OpenComponent";
    case Code::InvalidSite: return "InvalidSite";
    case Code::NoZigzagAtSite: return "NoZigzagAtSite";
    case Code::OrientationConflict: return "OrientationConflict";
    case Code::NotLong: return "NotLong";
    case Code::Unrealizable: return "Unrealizable";
    case Code::BlockedByBoundary: return "BlockedByBoundary";
    case Code::RoutingFailed: return "RoutingFailed";
    case Code::PatternMismatch: return "PatternMismatch";
    case Code::Overlapping: return "Overlapping";
    case Code::MarkedKnotHasNoCoefficient: return "MarkedKnotHasNoCoefficient";
    case Code::ContainsMarkedKnot: return "ContainsMarkedKnot";
    case Code::NotSymmetric: return "NotSymmetric";
    case Code::CoefficientNotPlusMinusOne: return "CoefficientNotPlusMinusOne";
    case Code::NotAPushoffPair: return "NotAPushoffPair";
    case Code::NotSplit: return "NotSplit";
    case Code::CoefficientNotMinusOne: return "CoefficientNotMinusOne";
    case Code::NotAPushoff: return "NotAPushoff";
    case Code::NotAMeridian: return "NotAMeridian";
    case Code::BlockNotFound: return "BlockNotFound";
    case Code::NoShark: return "NoShark";
    case Code::NoZigzag: return "NoZigzag";
    case Code::NotThroughOnce: return "NotThroughOnce";
    case Code::NotAPlusOneUnknot: return "NotAPlusOneUnknot";
    case Code::UnknownMoveKind: return "UnknownMoveKind";
    case Code::SyntaxError: return "SyntaxError";
    case Code::SemanticError: return "SemanticError";
    }
    return "?";
}

std::vector<int> strand_counts(const std::vector<Event>& w, int k0) {
    std::vector<int> ks{k0};
    ks.reserve(w.size() + 1);
    int k = k0;
    for (size_t i = 0; i < w.size(); ++i) {
        const Event& e = w[i];
        if (e.kind == Ev::L) {
            if (e.pos < 1 || e.pos > k + 1)
                throw Error(Code::PositionOutOfRange, "event " + std::to_string(i), (int)i);
            k += 2;
        } else {
            if (e.pos < 1 || e.pos > k - 1)
                throw Error(Code::PositionOutOfRange, "event " + std::to_string(i), (int)i);
            if (e.kind == Ev::R) k -= 2;
        }
        ks.push_back(k);
    }
    return ks;
}

int strands_at(const FrontDiagram& d, int gap) {
    if (gap < 0 || gap > (int)d.events.size()) throw Error(Code::InvalidSite, "gap out of range");
    return strand_counts({d.events.begin(), d.events.begin() + gap}, d.k0).back();
}

namespace {

struct Ends {
    // left end: cusp partner or -(position+1) for boundary; same for right end
    std::vector<int> left, right;
};

void check_handles(const FrontDiagram& d) {
    std::vector<int> lused(d.k0, 0), rused(d.k0, 0);
    for (const Handle& h : d.handles) {
        if (h.b - h.a != h.d - h.c || h.b < h.a - 1)
            throw Error(Code::BoundaryMismatch, "handle " + h.name + " blocks differ in size");
        for (int i = h.a; i <= h.b; ++i) {
            if (i < 1 || i > d.k0 || lused[i - 1]++)
                throw Error(Code::BoundaryMismatch, "handle " + h.name + " left block invalid");
        }
        for (int i = h.c; i <= h.d; ++i) {
            if (i < 1 || i > d.k0 || rused[i - 1]++)
                throw Error(Code::BoundaryMismatch, "handle " + h.name + " right block invalid");
        }
    }
    if (d.kind == Kind::Standard) {
        for (int i = 0; i < d.k0; ++i)
            if (!lused[i] || !rused[i])
                throw Error(Code::UncoveredBoundaryStrand, "boundary strand " + std::to_string(i + 1));
    }
}

}  // namespace

Trace trace(const FrontDiagram& d, bool need_orient) {
    if (d.kind == Kind::Closed && d.k0 != 0) throw Error(Code::BoundaryMismatch, "closed diagram with boundary");
    if (d.kind == Kind::Long && d.k0 != 1) throw Error(Code::BoundaryMismatch, "long diagram needs one boundary strand");
    if (d.kind != Kind::Standard && !d.handles.empty())
        throw Error(Code::BoundaryMismatch, "handles outside standard form");
    auto ks = strand_counts(d.events, d.k0);
    if (ks.back() != d.k0) throw Error(Code::BoundaryMismatch, "final strand count " + std::to_string(ks.back()));
    check_handles(d);

    Trace t;
    int n = (int)d.events.size();
    int nseg = d.k0;
    for (const Event& e : d.events)
        if (e.kind == Ev::L) nseg += 2;
    t.nseg = nseg;
    Ends en;
    en.left.assign(nseg, 0);
    en.right.assign(nseg, 0);
    std::vector<int> st(d.k0);
    for (int i = 0; i < d.k0; ++i) {
        st[i] = i;
        en.left[i] = -(i + 1);
    }
    t.at.reserve(n + 1);
    t.at.push_back(st);
    t.ev_seg.resize(n);
    int next = d.k0;
    for (int i = 0; i < n; ++i) {
        const Event& e = d.events[i];
        int p = e.pos - 1;
        if (e.kind == Ev::L) {
            int a = next++, b = next++;
            st.insert(st.begin() + p, {a, b});
            en.left[a] = b;
            en.left[b] = a;
            t.ev_seg[i] = {a, b};
        } else if (e.kind == Ev::R) {
            int a = st[p], b = st[p + 1];
            st.erase(st.begin() + p, st.begin() + p + 2);
            en.right[a] = b;
            en.right[b] = a;
            t.ev_seg[i] = {a, b};
        } else {
            t.ev_seg[i] = {st[p], st[p + 1]};
            std::swap(st[p], st[p + 1]);
        }
        t.at.push_back(st);
    }
    for (int i = 0; i < d.k0; ++i) en.right[st[i]] = -(i + 1);

    // boundary joins through handles
    std::vector<int> l2r(d.k0, -1), r2l(d.k0, -1);
    for (const Handle& h : d.handles)
        for (int i = 0; i < h.size(); ++i) {
            l2r[h.a - 1 + i] = h.c - 1 + i;
            r2l[h.c - 1 + i] = h.a - 1 + i;
        }

    t.seg_comp.assign(nseg, -1);
    t.base_dir.assign(nseg, 0);
    // step from segment s moving in direction dr; returns (next seg, next dir) or (-1, 0)
    auto step = [&](int s, int dr) -> std::pair<int, int> {
        if (dr > 0) {
            int r = en.right[s];
            if (r >= 0) return {r, -1};
            int pos = -r - 1;
            if (l2r.empty() || r2l[pos] < 0) return {-1, 0};
            return {r2l[pos], +1};
        }
        int l = en.left[s];
        if (l >= 0) return {l, +1};
        int pos = -l - 1;
        if (l2r[pos] < 0) return {-1, 0};
        return {st[l2r[pos]], -1};
    };
    for (int s = 0; s < nseg; ++s) {
        if (t.seg_comp[s] >= 0) continue;
        int c = (int)t.comps.size();
        Component comp;
        std::vector<int> fwd{s};
        t.seg_comp[s] = c;
        t.base_dir[s] = 1;
        int cur = s, dr = 1;
        bool closed = false;
        while (true) {
            auto [nx, nd] = step(cur, dr);
            if (nx < 0) break;
            if (nx == s) {
                closed = true;
                break;
            }
            t.seg_comp[nx] = c;
            t.base_dir[nx] = nd;
            fwd.push_back(nx);
            cur = nx;
            dr = nd;
        }
        std::vector<int> back;
        if (!closed) {
            cur = s;
            dr = -1;
            while (true) {
                auto [nx, nd] = step(cur, dr);
                if (nx < 0) break;
                t.seg_comp[nx] = c;
                t.base_dir[nx] = -nd;
                back.push_back(nx);
                cur = nx;
                dr = nd;
            }
        }
        comp.closed = closed;
        comp.segs.assign(back.rbegin(), back.rend());
        comp.segs.insert(comp.segs.end(), fwd.begin(), fwd.end());
        t.comps.push_back(std::move(comp));
    }
    if (d.kind == Kind::Long) {
        int open = 0;
        for (auto& c : t.comps) open += !c.closed;
        if (open != 1) throw Error(Code::BoundaryMismatch, "long diagram needs exactly one open component");
    }
    t.dir = t.base_dir;
    if (need_orient) {
        if (d.orient.size() != t.comps.size())
            throw Error(Code::OrientationMissing, std::to_string(t.comps.size()) + " components, " +
                                                      std::to_string(d.orient.size()) + " orientation flags");
        for (int s = 0; s < nseg; ++s) t.dir[s] *= d.orient[t.seg_comp[s]];
    }
    return t;
}

ComponentStructure validate(const FrontDiagram& d) {
    Trace t = trace(d, true);
    if (d.label.size() != t.comps.size()) throw Error(Code::OrientationMissing, "label table size");
    return {t.comps, t.seg_comp};
}

int num_components(const FrontDiagram& d) { return (int)trace(d, false).comps.size(); }

ClassicalInvariants classical(const FrontDiagram& d, const Trace& t, int c) {
    if (c < 0 || c >= (int)t.comps.size()) throw Error(Code::InvalidComponent, std::to_string(c));
    ClassicalInvariants ci;
    for (size_t i = 0; i < d.events.size(); ++i) {
        auto [u, l] = t.ev_seg[i];
        if (t.seg_comp[u] != c) continue;
        switch (d.events[i].kind) {
        case Ev::X:
            if (t.seg_comp[l] == c) ci.writhe += t.dir[u] == t.dir[l] ? 1 : -1;
            break;
        case Ev::R:
            ci.rightCusps++;
            (t.dir[u] > 0 ? ci.downCusps : ci.upCusps)++;
            break;
        case Ev::L:
            (t.dir[u] < 0 ? ci.downCusps : ci.upCusps)++;
            break;
        }
    }
    ci.tb = ci.writhe - ci.rightCusps;
    ci.rot = (ci.downCusps - ci.upCusps) / 2;
    return ci;
}

ClassicalInvariants classical(const FrontDiagram& d, int c) { return classical(d, trace(d), c); }

std::vector<std::vector<int>> lk_matrix(const FrontDiagram& d, const Trace& t) {
    int nc = (int)t.comps.size();
    std::vector<std::vector<int>> m(nc, std::vector<int>(nc, 0));
    for (size_t i = 0; i < d.events.size(); ++i) {
        if (d.events[i].kind != Ev::X) continue;
        auto [u, l] = t.ev_seg[i];
        int a = t.seg_comp[u], b = t.seg_comp[l];
        if (a == b) continue;
        int s = t.dir[u] == t.dir[l] ? 1 : -1;
        m[a][b] += s;
        m[b][a] += s;
    }
    for (auto& row : m)
        for (int& x : row) x /= 2;
    return m;
}

int lk(const FrontDiagram& d, int c1, int c2) {
    Trace t = trace(d);
    int nc = (int)t.comps.size();
    if (c1 < 0 || c2 < 0 || c1 >= nc || c2 >= nc) throw Error(Code::InvalidComponent, "lk");
    if (c1 == c2) throw Error(Code::SameComponent, "lk");
    if (!t.comps[c1].closed || !t.comps[c2].closed) throw Error(Code::OpenComponent, "lk");
    return lk_matrix(d, t)[c1][c2];
}

int crossings_between(const FrontDiagram& d, int c1, int c2) {
    Trace t = trace(d, false);
    int n = 0;
    for (size_t i = 0; i < d.events.size(); ++i) {
        if (d.events[i].kind != Ev::X) continue;
        int a = t.seg_comp[t.ev_seg[i][0]], b = t.seg_comp[t.ev_seg[i][1]];
        if ((a == c1 && b == c2) || (a == c2 && b == c1)) ++n;
    }
    return n;
}

int comp_of_label(const FrontDiagram& d, int label) {
    for (size_t i = 0; i < d.label.size(); ++i)
        if (d.label[i] == label) return (int)i;
    return -1;
}

int component_at(const FrontDiagram& d, Site s) {
    Trace t = trace(d, false);
    if (s.gap < 0 || s.gap >= (int)t.at.size()) throw Error(Code::InvalidSite, "gap");
    const auto& col = t.at[s.gap];
    if (s.pos < 1 || s.pos > (int)col.size()) throw Error(Code::InvalidSite, "pos");
    return t.seg_comp[col[s.pos - 1]];
}

std::vector<int> identity_map(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return m;
}

// events at index >= at move by `by`; events in [drop_from, drop_to) are dropped
std::vector<int> shift_map(int n, int at, int by, int drop_from, int drop_to) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) {
        if (i >= drop_from && i < drop_to) m[i] = -1;
        else m[i] = i < at ? i : i + by;
    }
    return m;
}

FrontDiagram rebuild(FrontDiagram nd, const std::vector<Carry>& src, const std::vector<Seed>& seeds) {
    nd.orient.clear();
    nd.label.clear();
    Trace tn = trace(nd, false);
    int nc = (int)tn.comps.size();
    std::vector<int> flag(nc, 0);
    // origin[c] = list of (source, old component)
    std::vector<std::set<std::pair<int, int>>> origin(nc);
    int next_label = 0;
    for (const Carry& cs : src)
        for (int l : cs.from->label) next_label = std::max(next_label, l + 1);

    auto bind = [&](int c, int f) {
        if (flag[c] == 0) flag[c] = f;
        else if (flag[c] != f) throw Error(Code::OrientationConflict, "component " + std::to_string(c));
    };
    for (size_t si = 0; si < src.size(); ++si) {
        const Carry& cs = src[si];
        Trace to = trace(*cs.from, true);
        for (size_t i = 0; i < cs.emap.size(); ++i) {
            int j = cs.emap[i];
            if (j < 0) continue;
            for (int r = 0; r < 2; ++r) {
                int so = to.ev_seg[i][r], sn = tn.ev_seg[j][r];
                int cn = tn.seg_comp[sn];
                bind(cn, to.dir[so] * tn.base_dir[sn]);
                origin[cn].insert({(int)si, to.seg_comp[so]});
            }
        }
        int kb = cs.from->k0;
        for (int i = 0; i < kb; ++i) {
            int j = cs.bmap.empty() ? i : cs.bmap[i];
            if (j < 0) continue;
            int cn = tn.seg_comp[j];
            bind(cn, to.dir[i] * tn.base_dir[j]);
            origin[cn].insert({(int)si, to.seg_comp[i]});
        }
    }
    for (const Seed& s : seeds) {
        int sn = tn.ev_seg[s.ev][s.role];
        bind(tn.seg_comp[sn], s.dir * tn.base_dir[sn]);
    }
    nd.orient.resize(nc);
    nd.label.assign(nc, -1);
    std::set<std::pair<int, int>> taken;
    for (int c = 0; c < nc; ++c) {
        nd.orient[c] = flag[c] == 0 ? 1 : flag[c];
        for (auto [si, oc] : origin[c]) {
            if (src[si].fresh || taken.count({si, oc})) continue;
            taken.insert({si, oc});
            nd.label[c] = src[si].from->label[oc];
            break;
        }
        if (nd.label[c] < 0) nd.label[c] = next_label++;
        for (auto [si, oc] : origin[c])
            if (src[si].labels_out) {
                auto& lo = *src[si].labels_out;
                if (lo.size() < src[si].from->label.size()) lo.resize(src[si].from->label.size(), -1);
                if (lo[oc] < 0) lo[oc] = nd.label[c];
            }
    }
    return nd;
}

FrontDiagram reverse_component(const FrontDiagram& d, int c) {
    if (c < 0 || c >= (int)d.orient.size()) throw Error(Code::InvalidComponent, std::to_string(c));
    FrontDiagram r = d;
    r.orient[c] = -r.orient[c];
    return r;
}

FrontDiagram insert_events(const FrontDiagram& d, int gap, const std::vector<Event>& ev,
                           const std::vector<Seed>& seeds) {
    int n = (int)d.events.size();
    if (gap < 0 || gap > n) throw Error(Code::InvalidSite, "gap");
    FrontDiagram nd = d;
    nd.events.insert(nd.events.begin() + gap, ev.begin(), ev.end());
    strand_counts(nd.events, nd.k0);
    Carry c{&d, shift_map(n, gap, (int)ev.size())};
    return rebuild(nd, {c}, seeds);
}

FrontDiagram delete_components(const FrontDiagram& d, std::vector<int> cs) {
    Trace t = trace(d);
    std::vector<char> del(t.comps.size(), 0);
    for (int c : cs) {
        if (c < 0 || c >= (int)t.comps.size()) throw Error(Code::InvalidComponent, std::to_string(c));
        if (!t.comps[c].closed) throw Error(Code::OpenComponent, "cannot delete an open component");
        del[c] = 1;
    }
    FrontDiagram nd = d;
    nd.events.clear();
    std::vector<int> emap(d.events.size(), -1);
    for (size_t i = 0; i < d.events.size(); ++i) {
        auto [u, l] = t.ev_seg[i];
        const Event& e = d.events[i];
        int cu = t.seg_comp[u], cl = t.seg_comp[l];
        if (e.kind == Ev::X) {
            if (del[cu] || del[cl]) continue;
        } else if (del[cu]) {
            continue;
        }
        int above = 0;
        for (int p = 0; p < e.pos - 1; ++p) above += del[t.seg_comp[t.at[i][p]]];
        emap[i] = (int)nd.events.size();
        nd.events.push_back({e.kind, e.pos - above});
    }
    return rebuild(nd, {{&d, emap}});
}

FrontDiagram delete_component(const FrontDiagram& d, int c) { return delete_components(d, {c}); }

FrontDiagram insert_split(const FrontDiagram& d, const FrontDiagram& s, int gap, int pos,
                          std::vector<int>* labels_out) {
    if (s.kind != Kind::Closed) throw Error(Code::InvalidSite, "inserted diagram must be closed");
    int n = (int)d.events.size();
    int k = strands_at(d, gap);
    if (pos < 1 || pos > k + 1) throw Error(Code::InvalidSite, "pos");
    FrontDiagram nd = d;
    std::vector<Event> ins;
    for (Event e : s.events) ins.push_back({e.kind, e.pos + pos - 1});
    nd.events.insert(nd.events.begin() + gap, ins.begin(), ins.end());
    Carry a{&d, shift_map(n, gap, (int)ins.size())};
    std::vector<int> sm(s.events.size());
    for (size_t i = 0; i < sm.size(); ++i) sm[i] = gap + (int)i;
    Carry b{&s, sm, {}, true, labels_out};
    return rebuild(nd, {a, b});
}

bool is_split(const FrontDiagram& d, const std::vector<int>& cs) {
    Trace t = trace(d, false);
    std::vector<char> in(t.comps.size(), 0);
    for (int c : cs) in[c] = 1;
    for (size_t i = 0; i < d.events.size(); ++i) {
        if (d.events[i].kind != Ev::X) continue;
        if (in[t.seg_comp[t.ev_seg[i][0]]] != in[t.seg_comp[t.ev_seg[i][1]]]) return false;
    }
    return true;
}

FrontDiagram extract(const FrontDiagram& d, const std::vector<int>& cs) {
    std::vector<int> others;
    int nc = (int)d.orient.size();
    for (int c = 0; c < nc; ++c)
        if (std::find(cs.begin(), cs.end(), c) == cs.end()) others.push_back(c);
    return delete_components(d, others);
}

bool far_commute_events(Event e1, Event e2, Event& f1, Event& f2) {
    // footprints: gap g sits between strands g-1 and g
    bool g1 = e1.kind == Ev::R, g2 = e2.kind == Ev::L;
    int p = e1.pos, q = e2.pos;
    if (!g1 && !g2 && !(p + 1 < q || q + 1 < p)) return false;
    if (g1 && !g2 && q < p && p <= q + 1) return false;
    if (!g1 && g2 && p < q && q <= p + 1) return false;
    Ev t1 = e1.kind, t2 = e2.kind;
    int q0 = q;
    if (t1 == Ev::L) q0 = (t2 == Ev::L ? q <= p : q < p) ? q : q - 2;
    else if (t1 == Ev::R) q0 = (t2 == Ev::L ? q <= p : q < p) ? q : q + 2;
    int p1 = p;
    if (t2 == Ev::L) {
        if (t1 == Ev::L) p1 = p < q0 ? p : p > q0 ? p + 2 : (q <= p ? p + 2 : p);
        else p1 = p < q0 ? p : p + 2;
    } else if (t2 == Ev::R) {
        p1 = (t1 == Ev::L ? p <= q0 : p < q0) ? p : p - 2;
    }
    f1 = {t2, q0};
    f2 = {t1, p1};
    return true;
}

FrontDiagram from_word(const std::vector<Event>& w, Kind k, int k0) {
    FrontDiagram d;
    d.events = w;
    d.kind = k;
    d.k0 = k0;
    Trace t = trace(d, false);
    d.orient.assign(t.comps.size(), 1);
    d.label = identity_map((int)t.comps.size());
    return d;
}

FrontDiagram unknot() { return from_word({Lc(1), Rc(1)}); }

namespace {

struct Located {
    Trace t;
    int seg;
    int comp;
    int dir;
};

Located locate(const FrontDiagram& d, Site s) {
    Located r{trace(d), -1, -1, 0};
    if (s.gap < 0 || s.gap >= (int)r.t.at.size()) throw Error(Code::InvalidSite, "gap out of range");
    const auto& col = r.t.at[s.gap];
    if (s.pos < 1 || s.pos > (int)col.size()) throw Error(Code::InvalidSite, "no strand at position");
    r.seg = col[s.pos - 1];
    r.comp = r.t.seg_comp[r.seg];
    r.dir = r.t.dir[r.seg];
    return r;
}

}  // namespace

FrontDiagram stabilize(const FrontDiagram& d, int c, int sign, Site s) {
    Located lo = locate(d, s);
    if (lo.comp != c) throw Error(Code::InvalidSite, "site is not on the component");
    int p = s.pos;
    // below a rightward strand both cusps are traversed downward
    bool below = (sign > 0) == (lo.dir > 0);
    std::vector<Event> z = below ? std::vector<Event>{Lc(p + 1), Rc(p)} : std::vector<Event>{Lc(p), Rc(p + 1)};
    return insert_events(d, s.gap, z);
}

namespace {

// Zigzag at events g, g+1: returns the side (+1 below, -1 above) or 0.
int zigzag_at(const FrontDiagram& d, int g) {
    int n = (int)d.events.size();
    if (g < 0 || g + 1 >= n) return 0;
    Event a = d.events[g], b = d.events[g + 1];
    if (a.kind != Ev::L || b.kind != Ev::R) return 0;
    if (b.pos + 1 == a.pos) return +1;
    if (b.pos == a.pos + 1) return -1;
    return 0;
}

}  // namespace

std::vector<Site> zigzags(const FrontDiagram& d, int c) {
    Trace t = trace(d);
    std::vector<Site> out;
    for (int g = 0; g + 1 < (int)d.events.size(); ++g) {
        int side = zigzag_at(d, g);
        if (!side) continue;
        if (t.seg_comp[t.ev_seg[g][0]] != c) continue;
        out.push_back({g, side > 0 ? d.events[g].pos - 1 : d.events[g].pos, 0});
    }
    return out;
}

int zigzag_sign(const FrontDiagram& d, Site s) {
    int side = zigzag_at(d, s.gap);
    if (!side) throw Error(Code::NoZigzagAtSite, "gap " + std::to_string(s.gap));
    Trace t = trace(d);
    // direction of the strand carrying the zigzag
    int dir_upper = t.dir[t.ev_seg[s.gap][0]];
    int strand_dir = side > 0 ? -dir_upper : dir_upper;
    bool below = side > 0;
    return below == (strand_dir > 0) ? +1 : -1;
}

FrontDiagram destabilize(const FrontDiagram& d, Site s) {
    FrontDiagram w = d;
    int g = s.gap;
    int n = (int)w.events.size();
    if (g < 0 || g >= n || w.events[g].kind != Ev::L)
        throw Error(Code::NoZigzagAtSite, "no left cusp at gap " + std::to_string(g));
    // slide the left cusp rightward past independent events until it meets its zigzag partner
    while (!zigzag_at(w, g)) {
        if (g + 1 >= n) throw Error(Code::NoZigzagAtSite, "gap " + std::to_string(s.gap));
        Event e1 = w.events[g], e2 = w.events[g + 1];
        Event f1, f2;
        if (!far_commute_events(e1, e2, f1, f2)) throw Error(Code::NoZigzagAtSite, "gap " + std::to_string(s.gap));
        FrontDiagram nw = w;
        nw.events[g] = f1;
        nw.events[g + 1] = f2;
        std::vector<int> m = identity_map(n);
        std::swap(m[g], m[g + 1]);
        w = rebuild(nw, {{&w, m}});
        ++g;
    }
    FrontDiagram nd = w;
    nd.events.erase(nd.events.begin() + g, nd.events.begin() + g + 2);
    return rebuild(nd, {{&w, shift_map((int)w.events.size(), g, -2, g, g + 2)}});
}

std::pair<FrontDiagram, int> pushoff(const FrontDiagram& d, int c) {
    Trace t = trace(d);
    if (c < 0 || c >= (int)t.comps.size()) throw Error(Code::InvalidComponent, std::to_string(c));
    if (!t.comps[c].closed) throw Error(Code::OpenComponent, "pushoff");
    auto isc = [&](int seg) { return t.seg_comp[seg] == c; };
    FrontDiagram nd = d;
    nd.events.clear();
    std::vector<int> emap(d.events.size(), -1);
    std::vector<Seed> seeds;
    for (size_t i = 0; i < d.events.size(); ++i) {
        const auto& col = t.at[i];
        const Event& e = d.events[i];
        // new position of the first new-word strand at old position p (copy first for c strands)
        auto npos = [&](int p) {
            int q = p;
            for (int j = 0; j < p - 1; ++j) q += isc(col[j]);
            return q;
        };
        auto [u, l] = t.ev_seg[i];
        int base = (int)nd.events.size();
        if (e.kind == Ev::L) {
            int P = npos(e.pos);
            if (isc(u)) {
                nd.events.insert(nd.events.end(), {Lc(P), Lc(P + 2), Xc(P + 1)});
                emap[i] = base + 1;
                seeds.push_back({base, 0, t.dir[u]});
            } else {
                nd.events.push_back(Lc(P));
                emap[i] = base;
            }
        } else if (e.kind == Ev::R) {
            int Q = npos(e.pos);
            if (isc(u)) {
                nd.events.insert(nd.events.end(), {Xc(Q + 1), Rc(Q + 2), Rc(Q)});
                emap[i] = base + 1;
            } else {
                nd.events.push_back(Rc(Q));
                emap[i] = base;
            }
        } else {
            int Q = npos(e.pos);
            bool cu = isc(u), cl = isc(l);
            if (cu && cl) {
                nd.events.insert(nd.events.end(), {Xc(Q + 1), Xc(Q), Xc(Q + 2), Xc(Q + 1)});
                emap[i] = base + 2;
            } else if (cu) {
                nd.events.insert(nd.events.end(), {Xc(Q + 1), Xc(Q)});
                emap[i] = base;
            } else if (cl) {
                nd.events.insert(nd.events.end(), {Xc(Q), Xc(Q + 1)});
                emap[i] = base + 1;
            } else {
                nd.events.push_back(Xc(Q));
                emap[i] = base;
            }
        }
    }
    std::vector<int> lab;
    FrontDiagram r = rebuild(nd, {{&d, emap}}, seeds);
    // the copy is the component carrying a fresh label
    int copy = -1;
    for (size_t k = 0; k < r.label.size(); ++k)
        if (std::find(d.label.begin(), d.label.end(), r.label[k]) == d.label.end()) copy = (int)k;
    return {r, copy};
}

FrontDiagram add_twist(const FrontDiagram& d, int c, int sign, Site s) {
    Located lo = locate(d, s);
    if (lo.comp != c) throw Error(Code::InvalidSite, "site is not on the component");
    int q = s.pos;
    std::vector<Event> w;
    if (s.pos2) {
        if (s.pos2 != s.pos + 1) throw Error(Code::InvalidSite, "pos2 must be the strand directly below");
        int other = lo.t.at[s.gap][s.pos2 - 1];
        if (lo.t.dir[other] != lo.dir) throw Error(Code::InvalidSite, "strands must run in parallel");
        if (sign > 0) w = {Lc(q + 2), Xc(q), Xc(q + 1), Rc(q + 2), Xc(q)};
        else w = {Lc(q), Xc(q + 1), Xc(q + 2), Xc(q + 2), Rc(q + 1)};
    } else {
        if (sign > 0) w = {Lc(q + 1), Xc(q), Rc(q + 1)};
        else w = {Lc(q + 1), Xc(q + 1), Rc(q)};
    }
    return insert_events(d, s.gap, w);
}

FrontDiagram pinch(const FrontDiagram& d, Site s) {
    Located lo = locate(d, s);
    const auto& col = lo.t.at[s.gap];
    if (s.pos + 1 > (int)col.size()) throw Error(Code::InvalidSite, "pinch needs two adjacent strands");
    if (lo.t.dir[col[s.pos - 1]] == lo.t.dir[col[s.pos]])
        throw Error(Code::OrientationConflict, "pinched strands run in the same direction");
    return insert_events(d, s.gap, {Rc(s.pos), Lc(s.pos)});
}

FrontDiagram unpinch(const FrontDiagram& d, int gap) {
    int n = (int)d.events.size();
    if (gap < 0 || gap + 1 >= n || d.events[gap].kind != Ev::R || d.events[gap + 1].kind != Ev::L ||
        d.events[gap].pos != d.events[gap + 1].pos)
        throw Error(Code::PatternMismatch, "no adjacent right/left cusp pair at gap " + std::to_string(gap));
    Trace t = trace(d);
    if (t.dir[t.ev_seg[gap][0]] != t.dir[t.ev_seg[gap + 1][0]])
        throw Error(Code::OrientationConflict, "cusp pair cannot be resolved coherently");
    FrontDiagram nd = d;
    nd.events.erase(nd.events.begin() + gap, nd.events.begin() + gap + 2);
    return rebuild(nd, {{&d, shift_map(n, gap, -2, gap, gap + 2)}});
}

std::pair<FrontDiagram, int> insert_meridian(const FrontDiagram& d, int c, Site s, bool below, int lk_sign) {
    Located lo = locate(d, s);
    if (lo.comp != c) throw Error(Code::InvalidSite, "site is not on the component");
    if (!lo.t.comps[c].closed) throw Error(Code::OpenComponent, "meridian of an open component");
    int p = s.pos;
    std::vector<Event> w = below ? std::vector<Event>{Lc(p + 1), Xc(p), Xc(p), Rc(p + 1)}
                                 : std::vector<Event>{Lc(p), Xc(p + 1), Xc(p + 1), Rc(p)};
    FrontDiagram r = insert_events(d, s.gap, w, {{s.gap, 0, +1}});
    int m = -1;
    for (size_t k = 0; k < r.label.size(); ++k)
        if (std::find(d.label.begin(), d.label.end(), r.label[k]) == d.label.end()) m = (int)k;
    int cc = comp_of_label(r, d.label[c]);
    if (lk(r, m, cc) != lk_sign) r.orient[m] = -r.orient[m];
    return {r, m};
}

FrontDiagram complete_long(const FrontDiagram& d) {
    if (d.kind != Kind::Long) throw Error(Code::NotLong, "complete_long");
    Trace t = trace(d);
    FrontDiagram nd = d;
    nd.kind = Kind::Closed;
    nd.k0 = 0;
    nd.events.clear();
    nd.events.push_back(Lc(1));
    for (Event e : d.events) nd.events.push_back({e.kind, e.pos + 1});
    nd.events.push_back(Rc(1));
    Carry cs{&d, shift_map((int)d.events.size(), 0, 1), {-1}};
    FrontDiagram r = rebuild(nd, {cs}, {{0, 1, t.dir[0]}});
    // the long strand keeps its label
    Trace tr = trace(r, false);
    r.label[tr.seg_comp[tr.ev_seg[0][0]]] = d.label[t.seg_comp[0]];
    return r;
}

FrontDiagram unknot_with_invariants(int tb, int rot, bool long_knot) {
    int ar = rot < 0 ? -rot : rot;
    int base = long_knot ? 0 : -1;
    if (tb + ar > base || ((tb + rot) % 2 != 0) == long_knot)
        throw Error(Code::Unrealizable, "tb=" + std::to_string(tb) + " rot=" + std::to_string(rot));
    FrontDiagram d = long_knot ? FrontDiagram{{}, Kind::Long, 1, {}, {1}, {0}} : unknot();
    int pairs = (base - tb - ar) / 2;
    Site s{long_knot ? 0 : 1, 1, 0};
    for (int i = 0; i < pairs; ++i) {
        d = stabilize(d, 0, +1, s);
        d = stabilize(d, 0, -1, s);
    }
    for (int i = 0; i < ar; ++i) d = stabilize(d, 0, rot > 0 ? 1 : -1, s);
    return d;
}

std::string word_string(const std::vector<Event>& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += w[i].kind == Ev::L ? 'L' : w[i].kind == Ev::R ? 'R' : 'X';
        s += std::to_string(w[i].pos);
    }
    return s;
}

std::vector<Event> parse_word(const std::string& s) {
    std::vector<Event> w;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R' && tok[0] != 'X'))
            throw Error(Code::SyntaxError, "bad event '" + tok + "'");
        int p = 0;
        for (size_t i = 1; i < tok.size(); ++i) {
            if (!isdigit((unsigned char)tok[i])) throw Error(Code::SyntaxError, "bad event '" + tok + "'");
            p = p * 10 + (tok[i] - '0');
        }
        w.push_back({tok[0] == 'L' ? Ev::L : tok[0] == 'R' ? Ev::R : Ev::X, p});
    }
    return w;
}

}  // namespace fk
