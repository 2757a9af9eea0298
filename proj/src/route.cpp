#include "fk/route.hpp"

namespace fk {

namespace {

struct Dragger {
    FrontDiagram d;
    std::vector<RewriteRecord> trail;
    int r;  // index of the dragged right cusp

    void apply(const RMove& m) {
        auto [nd, rec] = apply_reidemeister(d, m);
        d = std::move(nd);
        trail.push_back(rec);
    }
    int pos() const { return d.events[r].pos; }
    int strands() const { return strands_at(d, r); }

    // pushes the cusp below (+1) or above (-1) the neighbouring strand
    bool shift(int dir) {
        int p = pos();
        if (dir > 0) {
            if (p + 2 > strands()) return false;
            apply({Variant::R2Ra, true, {r, p, 0}});
        } else {
            if (p < 2) return false;
            apply({Variant::R2Rb, true, {r, p - 1, 0}});
        }
        r += 2;
        return true;
    }

    // drags the cusp until it sits just before index stop; returns the shifted stop
    int drag(int stop) {
        while (r + 1 < stop) {
            Event f1, f2;
            if (far_commute_events(d.events[r], d.events[r + 1], f1, f2)) {
                apply({Variant::FC, true, {r, 0, 0}});
                ++r;
                continue;
            }
            if (!shift(+1) && !shift(-1)) throw Error(Code::RoutingFailed, "cusp cannot pass event " + std::to_string(r + 1));
            stop += 2;
        }
        return stop;
    }

    int align(int want, int stop) {
        while (pos() != want) {
            if (!shift(pos() < want ? +1 : -1)) throw Error(Code::RoutingFailed, "vertical alignment");
            stop += 2;
        }
        return stop;
    }
};

}  // namespace

Routed route_finger(const FrontDiagram& d, Site from, Site to) {
    int n = (int)d.events.size();
    int k = strands_at(d, from.gap);
    if (from.pos < 1 || from.pos > k) throw Error(Code::InvalidSite, "finger start");
    if (to.gap < from.gap || to.gap > n) throw Error(Code::InvalidSite, "finger end must lie at or after its start");
    int kt = strands_at(d, to.gap);
    if (to.pos < 1 || to.pos > kt + 1) throw Error(Code::InvalidSite, "finger end position");
    if (d.kind == Kind::Standard && (to.gap == n || from.gap == 0) && d.k0 > 0)
        throw Error(Code::BlockedByBoundary, "finger would touch a handle");
    Dragger dr{d, {}, from.gap + 2};
    dr.apply({Variant::R1a, true, {from.gap, from.pos, 0}});
    int stop = to.gap + 3;
    stop = dr.drag(stop);
    dr.align(to.pos, stop);
    return {dr.d, dr.trail, dr.r};
}

FrontDiagram undo(const FrontDiagram& d, const std::vector<RewriteRecord>& trail) {
    FrontDiagram cur = d;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) cur = apply_reidemeister(cur, inverse(it->move)).first;
    return cur;
}

namespace {

int first_left_cusp(const FrontDiagram& d, const Trace& t, int c, int from) {
    for (int i = std::max(from, 0); i < (int)d.events.size(); ++i)
        if (d.events[i].kind == Ev::L && t.seg_comp[t.ev_seg[i][0]] == c) return i;
    return -1;
}

}  // namespace

FrontDiagram connect_sum(const FrontDiagram& d, int c1, Site s1, int c2, Site s2) {
    Trace t = trace(d);
    int nc = (int)t.comps.size();
    if (c1 < 0 || c2 < 0 || c1 >= nc || c2 >= nc) throw Error(Code::InvalidComponent, "connect_sum");
    if (c1 == c2) throw Error(Code::SameComponent, "connect_sum");
    if (component_at(d, s1) != c1 || component_at(d, s2) != c2) throw Error(Code::InvalidSite, "site off component");
    int target = first_left_cusp(d, t, c2, s1.gap);
    if (target < 0) {
        std::swap(c1, c2);
        std::swap(s1, s2);
        target = first_left_cusp(d, t, c2, s1.gap);
    }
    if (target < 0) throw Error(Code::RoutingFailed, "no left cusp to splice into");
    int sdir = t.dir[t.at[s1.gap][s1.pos - 1]];
    int ldir = t.dir[t.ev_seg[target][0]];
    Variant v = sdir == ldir ? Variant::R1a : Variant::R1b;
    Dragger dr{d, {}, s1.gap + 2};
    dr.apply({v, true, {s1.gap, s1.pos, 0}});
    int stop = dr.drag(target + 3);
    stop = dr.align(dr.d.events[stop].pos, stop);
    return unpinch(dr.d, dr.r);
}

}  // namespace fk
