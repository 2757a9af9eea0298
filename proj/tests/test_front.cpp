#include "doctest.h"
#include "fk/front.hpp"
#include "fk/rewrite.hpp"
#include "fk/route.hpp"
#include "oracle.hpp"

using namespace fk;

namespace {

FrontDiagram trefoil() { return from_word(parse_word("L1 L3 X2 X2 X2 R1 R1")); }

void check_against_oracle(const FrontDiagram& d) {
    auto g = oracle::draw(d);
    REQUIRE(g.ncomp == num_components(d));
    auto inv = oracle::invariants(g, d.orient);
    Trace t = trace(d);
    for (int c = 0; c < g.ncomp; ++c) {
        auto ci = classical(d, t, c);
        CHECK(ci.tb == inv[c].tb);
        CHECK(ci.rot == inv[c].rot);
        CHECK(ci.writhe == inv[c].writhe);
        CHECK(ci.rightCusps == inv[c].right);
    }
    CHECK(lk_matrix(d, t) == oracle::linking(g, d.orient));
}

}  // namespace

TEST_CASE("calibration") {
    auto u = unknot();
    CHECK(classical(u, 0).tb == -1);
    CHECK(classical(u, 0).rot == 0);
    auto t = trefoil();
    CHECK(num_components(t) == 1);
    CHECK(classical(t, 0).tb == 1);
    CHECK(classical(t, 0).rot == 0);
    CHECK(classical(t, 0).writhe == 3);
}

TEST_CASE("validate") {
    CHECK(validate(unknot()).comps[0].segs.size() == 2);
    FrontDiagram lng{{}, Kind::Long, 1, {}, {1}, {0}};
    auto cs = validate(lng);
    CHECK(cs.comps.size() == 1);
    CHECK_FALSE(cs.comps[0].closed);
    CHECK(classical(lng, 0).tb == 0);
    try {
        validate(from_word({Lc(1)}, Kind::Long, 1));
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code == Code::BoundaryMismatch);
    }
    try {
        from_word({Rc(1)});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code == Code::PositionOutOfRange);
        CHECK(e.index == 0);
    }
    auto u = unknot();
    u.orient.clear();
    CHECK_THROWS_AS(validate(u), Error);
}

TEST_CASE("random words agree with the geometric oracle") {
    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        auto d = from_word(oracle::random_word(rng, 40));
        for (auto& o : d.orient) o = rng() % 2 ? 1 : -1;
        check_against_oracle(d);
    }
}

TEST_CASE("linking") {
    auto two = from_word(parse_word("L1 R1 L1 R1"));
    CHECK(lk(two, 0, 1) == 0);
    CHECK_THROWS_AS(lk(two, 0, 0), Error);
    auto [m, mc] = insert_meridian(unknot(), 0, {1, 1});
    CHECK(std::abs(lk(m, 0, mc)) == 1);
    CHECK(classical(m, mc).tb == -1);
    CHECK(classical(m, mc).rot == 0);
    auto r = reverse_component(m, 0);
    CHECK(lk(r, 0, mc) == -lk(m, 0, mc));
    check_against_oracle(m);
}

TEST_CASE("stabilization") {
    auto u = unknot();
    auto sp = stabilize(u, 0, +1, {1, 1});
    CHECK(classical(sp, 0).tb == -2);
    CHECK(classical(sp, 0).rot == 1);
    auto sm = stabilize(u, 0, -1, {1, 1});
    CHECK(classical(sm, 0).rot == -1);
    // leftward strand: the lower strand of the unknot
    auto sl = stabilize(u, 0, +1, {1, 2});
    CHECK(classical(sl, 0).rot == 1);
    auto both = stabilize(sp, 0, -1, {1, 1});
    CHECK(classical(both, 0).tb == -3);
    CHECK(classical(both, 0).rot == 0);
    CHECK(canonical_word(destabilize(sp, {1, 1}).events) == canonical_word(u.events));
    CHECK(zigzag_sign(sp, {1, 1}) == 1);
    CHECK(zigzag_sign(sm, {1, 1}) == -1);
    try {
        destabilize(u, {0, 1});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code == Code::NoZigzagAtSite);
    }
    auto ts = stabilize(trefoil(), 0, -1, {1, 1});
    CHECK(classical(ts, 0).tb == 0);
    CHECK(classical(ts, 0).rot == -1);
    auto z = zigzags(ts, 0);
    REQUIRE(!z.empty());
    auto back = destabilize(ts, z[0]);
    CHECK(classical(back, 0).tb == 1);
    CHECK(classical(back, 0).rot == 0);
}

TEST_CASE("destabilize slides a separated zigzag together") {
    // zigzag cusps separated by an independent crossing further down
    auto d = from_word(parse_word("L1 L3 L2 X5 R1 R3 R1"));
    REQUIRE(num_components(d) == 2);
    auto c = classical(d, 0);
    auto e = destabilize(d, {2, 1});
    CHECK(classical(e, 0).tb == c.tb + 1);
}

TEST_CASE("pushoff") {
    auto [p, c] = pushoff(unknot(), 0);
    CHECK(num_components(p) == 2);
    CHECK(classical(p, c).tb == -1);
    CHECK(lk(p, comp_of_label(p, 0), c) == -1);
    auto [q, qc] = pushoff(trefoil(), 0);
    CHECK(lk(q, comp_of_label(q, 0), qc) == 1);
    check_against_oracle(q);
    auto s = from_word(parse_word("L1 R1 L1 R1"));
    auto [r, rc] = pushoff(s, 0);
    CHECK(lk(r, rc, comp_of_label(r, 1)) == 0);
    FrontDiagram lng{{}, Kind::Long, 1, {}, {1}, {0}};
    CHECK_THROWS_AS(pushoff(lng, 0), Error);
}

TEST_CASE("twists") {
    auto u = unknot();
    auto p = add_twist(u, 0, +1, {1, 1});
    auto n = add_twist(u, 0, -1, {1, 1});
    CHECK(classical(p, 0).tb == -1);
    CHECK(classical(n, 0).tb == -3);
    CHECK(classical(p, 0).writhe == 1);
    CHECK(classical(n, 0).writhe == -1);
    CHECK(classical(add_twist(p, 0, -1, {1, 1}), 0).tb == -3);
}

TEST_CASE("pinch and unpinch") {
    auto s = from_word(parse_word("L1 L3 R1 R1"));
    // split pair stacked vertically; pinch lower strand of the top with upper of the bottom
    REQUIRE(num_components(s) == 2);
    auto m = pinch(s, {2, 2});
    CHECK(num_components(m) == 1);
    CHECK(classical(m, 0).tb == -3);
    CHECK_THROWS_AS(pinch(reverse_component(s, 1), {2, 2}), Error);
    auto back = unpinch(m, 2);
    CHECK(num_components(back) == 2);
    CHECK(back.events == s.events);
}

TEST_CASE("connected sum") {
    auto two = from_word(parse_word("L1 R1 L1 R1"));
    auto cs = connect_sum(two, 0, {1, 1}, 1, {3, 1});
    REQUIRE(num_components(cs) == 1);
    CHECK(classical(cs, 0).tb == -1);
    CHECK(classical(cs, 0).rot == 0);
    auto tu = trefoil();
    tu.events.push_back(Lc(1));
    tu.events.push_back(Rc(1));
    tu = from_word(tu.events);
    auto ts = connect_sum(tu, 0, {1, 1}, 1, {8, 1});
    CHECK(classical(ts, 0).tb == 1);
    auto st = stabilize(from_word(parse_word("L1 R1 L1 R1")), 1, +1, {3, 1});
    auto ss = connect_sum(st, 0, {1, 2}, 1, {3, 1});
    CHECK(classical(ss, 0).rot == 1);
    CHECK(classical(ss, 0).tb == -2);
}

TEST_CASE("route finger preserves everything and undoes") {
    auto d = from_word(parse_word("L1 L1 R1 L3 X2 R3 R1"));
    Trace t0 = trace(d);
    auto r = route_finger(d, {1, 1}, {6, 3});
    Trace t1 = trace(r.diagram);
    REQUIRE(t1.comps.size() == t0.comps.size());
    for (int c = 0; c < (int)t0.comps.size(); ++c) {
        int c1 = comp_of_label(r.diagram, d.label[c]);
        auto a = classical(d, t0, c), b = classical(r.diagram, t1, c1);
        CHECK(a.tb == b.tb);
        CHECK(a.rot == b.rot);
    }
    auto back = undo(r.diagram, r.trail);
    CHECK(back.events == d.events);
    CHECK(back.orient == d.orient);
}

TEST_CASE("long knots") {
    FrontDiagram lng{{}, Kind::Long, 1, {}, {1}, {0}};
    auto c = complete_long(lng);
    CHECK(classical(c, 0).tb == -1);
    auto ls = stabilize(lng, 0, +1, {0, 1});
    CHECK(classical(ls, 0).rot == 1);
    auto lc = complete_long(ls);
    CHECK(classical(lc, 0).rot == 1);
    CHECK(classical(lc, 0).tb == classical(ls, 0).tb - 1);
    // long trefoil: open plat with tb 2
    auto lt = from_word(parse_word("L2 X1 X1 X1 R2"), Kind::Long, 1);
    CHECK(classical(lt, 0).tb == 2);
    CHECK(classical(complete_long(lt), 0).tb == 1);
    CHECK_THROWS_AS(complete_long(unknot()), Error);
    // long strand meeting no event, next to a closed unknot
    auto side = from_word(parse_word("L1 X1 R1"), Kind::Long, 1);
    auto sc = complete_long(side);
    int open = comp_of_label(sc, side.label[comp_of_label(side, 0)]);
    REQUIRE(open >= 0);
    CHECK(classical(sc, open).tb == -1);
    CHECK(sc.label[0] != sc.label[1]);
}

TEST_CASE("unknot generator") {
    CHECK(unknot_with_invariants(-1, 0, false).events == unknot().events);
    auto u = unknot_with_invariants(-3, 0, false);
    CHECK(classical(u, 0).tb == -3);
    CHECK(classical(u, 0).rot == 0);
    CHECK_THROWS_AS(unknot_with_invariants(-1, -1, false), Error);
    auto v = unknot_with_invariants(-2, 1, false);
    CHECK(classical(v, 0).rot == 1);
    for (int tb = -6; tb <= 0; ++tb)
        for (int rot = -4; rot <= 4; ++rot)
            for (bool lng : {false, true}) {
                int base = lng ? 0 : -1;
                bool ok = tb + std::abs(rot) <= base && ((tb + rot) % 2 == 0) == lng;
                if (!ok) {
                    CHECK_THROWS_AS(unknot_with_invariants(tb, rot, lng), Error);
                    continue;
                }
                auto d = unknot_with_invariants(tb, rot, lng);
                CHECK(classical(d, 0).tb == tb);
                CHECK(classical(d, 0).rot == rot);
            }
}
