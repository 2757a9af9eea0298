#pragma once
// Independent geometric oracle: builds explicit polylines for a front word and
// reads crossing signs (right-hand rule, descending strand over) and cusp
// directions straight off the drawn curve.

#include "fk/front.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracle {

struct Pt {
    double x, y;
};

struct Strand {
    std::vector<Pt> pts;
    int left = -1, right = -1;  // partner strand at a cusp, or -(boundary pos + 1)
};

struct Cross {
    int over, under;
    int over_idx, under_idx;  // index of the crossing point in each polyline
};

struct Drawing {
    std::vector<Strand> s;
    std::vector<Cross> x;
    std::vector<int> comp;
    std::vector<int> fwd;  // +1 when the component runs along pts in order
    int ncomp = 0;
};

inline Drawing draw(const fk::FrontDiagram& d) {
    Drawing g;
    std::vector<int> st;
    for (int i = 0; i < d.k0; ++i) {
        g.s.push_back({{{-0.5, -(double)(i + 1)}}, -(i + 1), 0});
        st.push_back(i);
    }
    int n = (int)d.events.size();
    for (int i = 0; i < n; ++i) {
        double xm = i + 0.5;
        for (size_t j = 0; j < st.size(); ++j) g.s[st[j]].pts.push_back({(double)i, -(double)(j + 1)});
        auto e = d.events[i];
        int p = e.pos - 1;
        if (e.kind == fk::Ev::L) {
            int a = (int)g.s.size();
            Pt c{xm, -(p + 1.5)};
            g.s.push_back({{c}, a + 1, 0});
            g.s.push_back({{c}, a, 0});
            st.insert(st.begin() + p, {a, a + 1});
        } else if (e.kind == fk::Ev::R) {
            int a = st[p], b = st[p + 1];
            Pt c{xm, -(p + 1.5)};
            g.s[a].pts.push_back(c);
            g.s[b].pts.push_back(c);
            g.s[a].right = b;
            g.s[b].right = a;
            st.erase(st.begin() + p, st.begin() + p + 2);
        } else {
            int a = st[p], b = st[p + 1];
            Pt c{xm, -(p + 1.5)};
            g.s[a].pts.push_back(c);
            g.s[b].pts.push_back(c);
            g.x.push_back({a, b, (int)g.s[a].pts.size() - 1, (int)g.s[b].pts.size() - 1});
            std::swap(st[p], st[p + 1]);
        }
    }
    for (size_t j = 0; j < st.size(); ++j) {
        g.s[st[j]].pts.push_back({(double)n, -(double)(j + 1)});
        g.s[st[j]].pts.push_back({n + 0.5, -(double)(j + 1)});
        g.s[st[j]].right = -(int)(j + 1);
    }
    // handle identifications
    std::map<int, int> r2l;
    for (auto& h : d.handles)
        for (int i = 0; i < h.size(); ++i) r2l[h.c + i] = h.a + i;
    std::vector<int> right_at(d.k0 + 1, -1), left_at(d.k0 + 1, -1);
    for (size_t k = 0; k < g.s.size(); ++k) {
        if (g.s[k].right < 0) right_at[-g.s[k].right] = (int)k;
        if (g.s[k].left < 0) left_at[-g.s[k].left] = (int)k;
    }
    int ns = (int)g.s.size();
    g.comp.assign(ns, -1);
    g.fwd.assign(ns, 0);
    auto next = [&](int cur, int f) -> std::pair<int, int> {
        int end = f > 0 ? g.s[cur].right : g.s[cur].left;
        if (end >= 0) return {end, -f};
        if (f > 0) {
            if (!r2l.count(-end)) return {-1, 0};
            return {left_at[r2l[-end]], 1};
        }
        for (auto [r, l] : r2l)
            if (l == -end) return {right_at[r], -1};
        return {-1, 0};
    };
    for (int s0 = 0; s0 < ns; ++s0) {
        if (g.comp[s0] >= 0) continue;
        int c = g.ncomp++;
        int cur = s0, f = 1, nxt = -1;
        while (true) {
            g.comp[cur] = c;
            g.fwd[cur] = f;
            auto [a, af] = next(cur, f);
            nxt = a;
            if (nxt < 0 || nxt == s0) break;
            cur = nxt;
            f = af;
        }
        if (nxt < 0) {
            cur = s0;
            f = -1;
            while (true) {
                auto [a, af] = next(cur, f);
                if (a < 0) break;
                g.comp[a] = c;
                g.fwd[a] = -af;
                cur = a;
                f = af;
            }
        }
    }
    return g;
}

inline int sgn(double v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// tangent of strand s at point index i, in traversal direction
inline Pt tangent(const Drawing& g, int s, int i, const std::vector<int>& orient) {
    const auto& p = g.s[s].pts;
    int o = g.fwd[s] * orient[g.comp[s]];
    Pt a = p[i - 1], b = p[i + 1];
    return {(b.x - a.x) * o, (b.y - a.y) * o};
}

inline int crossing_sign(const Drawing& g, const Cross& c, const std::vector<int>& orient) {
    Pt o = tangent(g, c.over, c.over_idx, orient), u = tangent(g, c.under, c.under_idx, orient);
    return sgn(o.x * u.y - o.y * u.x);
}

struct Inv {
    int tb, rot, writhe, right;
};

inline std::vector<Inv> invariants(const Drawing& g, const std::vector<int>& orient) {
    std::vector<Inv> r(g.ncomp, {0, 0, 0, 0});
    std::vector<int> down(g.ncomp, 0), up(g.ncomp, 0);
    for (auto& c : g.x)
        if (g.comp[c.over] == g.comp[c.under]) r[g.comp[c.over]].writhe += crossing_sign(g, c, orient);
    for (size_t s = 0; s < g.s.size(); ++s) {
        int c = g.comp[s];
        int o = g.fwd[s] * orient[c];
        const auto& p = g.s[s].pts;
        // cusp at the start: count once per cusp, from the strand that leaves it
        if (g.s[s].left >= 0 && o > 0) {
            // leaving a left cusp rightward: moving down means the cusp is traversed downward
            (p[1].y < p[0].y ? down : up)[c]++;
        }
        if (g.s[s].right >= 0 && o > 0) {
            r[c].right++;
            size_t m = p.size();
            (p[m - 1].y < p[m - 2].y ? down : up)[c]++;
        }
    }
    for (int c = 0; c < g.ncomp; ++c) {
        r[c].tb = r[c].writhe - r[c].right;
        r[c].rot = (down[c] - up[c]) / 2;
    }
    return r;
}

inline std::vector<std::vector<int>> linking(const Drawing& g, const std::vector<int>& orient) {
    std::vector<std::vector<int>> m(g.ncomp, std::vector<int>(g.ncomp, 0));
    for (auto& c : g.x) {
        int a = g.comp[c.over], b = g.comp[c.under];
        if (a == b) continue;
        int s = crossing_sign(g, c, orient);
        m[a][b] += s;
        m[b][a] += s;
    }
    for (auto& row : m)
        for (int& v : row) v /= 2;
    return m;
}

// Random valid closed word, length <= maxlen, at most maxk strands.
inline std::vector<fk::Event> random_word(std::mt19937& rng, int maxlen, int maxk = 8, int k0 = 0) {
    std::vector<fk::Event> w;
    int k = k0;
    auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
    while ((int)w.size() + (k - k0) / 2 < maxlen) {
        int r = uni(0, 9);
        if ((r < 3 || k < 2) && k + 2 <= maxk && (int)w.size() + (k + 2 - k0) / 2 + 1 <= maxlen) {
            w.push_back(fk::Lc(uni(1, k + 1)));
            k += 2;
        } else if (r < 8 && k >= 2) {
            w.push_back(fk::Xc(uni(1, k - 1)));
        } else if (k - 2 >= k0) {
            w.push_back(fk::Rc(uni(1, k - 1)));
            k -= 2;
        } else if (k >= 2) {
            w.push_back(fk::Xc(uni(1, k - 1)));
        } else {
            break;
        }
    }
    while (k > k0) {
        w.push_back(fk::Rc(uni(1, k - 1)));
        k -= 2;
    }
    return w;
}

}  // namespace oracle
