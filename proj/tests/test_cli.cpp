#include "doctest.h"
#include "fk/io.hpp"
#include "fk/kirby.hpp"
#include "fk/script.hpp"
#include "helpers.hpp"

using namespace fk;

TEST_CASE("fixture corpus round-trips byte for byte") {
    for (auto& name : th::fixture_corpus()) {
        CAPTURE(name);
        std::string text = th::read_fixture(name);
        REQUIRE_FALSE(text.empty());
        CHECK(serialize_diagram(parse_diagram(text)) == text);
    }
}

TEST_CASE("random diagrams keep their ledger through serialization") {
    std::mt19937 rng(13);
    for (int it = 0; it < 200; ++it) {
        auto sd = th::random_surgery(rng, 40);
        std::string s = serialize_diagram(sd);
        auto back = parse_diagram(s);
        auto a = ledger(sd), b = ledger(back);
        CHECK(a.h1 == b.h1);
        CHECK(a.count == b.count);
        CHECK(serialize_diagram(back) == s);
    }
}

TEST_CASE("parser accepts loose spacing and reports positions") {
    auto a = parse_diagram("kind:  closed\nword:   L1    R1  # unknot\n\ncomp   u:  orient=+   coeff=-1\n");
    CHECK(serialize_diagram(a) == th::read_fixture("unknot.fk"));
    CHECK(parse_diagram("kind: closed\nword:\n").diagram.events.empty());
    try {
        parse_diagram("kind: closed\nword: R1\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK((e.code == Code::SyntaxError || e.code == Code::SemanticError || e.code == Code::PositionOutOfRange));
    }
    try {
        parse_diagram("kind: closed\nwrd: L1 R1\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code == Code::SyntaxError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("script parser") {
    auto steps = parse_script("# comment\n\nHandleSlide i=a j=b at=1:2 orientation=add  # trailing\n"
                              "CancelPair dir=insert word=\"L1 L1 X2 R1 R1\" at=0:1\n");
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].line == 3);
    CHECK(steps[0].op == "HandleSlide");
    CHECK(steps[0].args.at("at") == "1:2");
    CHECK(steps[1].args.at("word") == "L1 L1 X2 R1 R1");
    for (const char* bad : {"HandleSlide i", "CancelPair word=\"L1", "= x", "Stabilize c=a c=b"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_script(bad), Error);
    }
}

TEST_CASE("insert then remove a cancelling pair") {
    SurgeryDiagram empty;
    auto r = run_script(empty, parse_script(th::read_fixture("pair_roundtrip.fks")), true);
    CHECK(r.ok);
    REQUIRE(r.reports.size() == 2);
    for (auto& rep : r.reports) CHECK(rep.pass());
    CHECK(r.diagram.diagram.events.empty());
}

TEST_CASE("unknown component fails at its step") {
    auto sd = parse_diagram(th::read_fixture("two_unknots.fk"));
    try {
        run_script(sd, parse_script("Stabilize c=a sign=+ at=1:1\nStabilize c=zz sign=+ at=1:1\n"), true);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.index == 2);
        CHECK(e.code == Code::SemanticError);
    }
    try {
        run_script(sd, parse_script("Teleport c=a\n"), false);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.index == 1);
        CHECK(e.code == Code::UnknownMoveKind);
    }
}

TEST_CASE("stabilized strand over a 1-handle pipeline") {
    auto sd = parse_diagram(th::read_fixture("handle_strand.fk"));
    auto r = run_script(sd, parse_script(th::read_fixture("handle_pipeline.fks")), true);
    CHECK(r.ok);
    REQUIRE(r.reports.size() == 5);
    for (auto& rep : r.reports) CHECK_MESSAGE(rep.pass(), rep.json());
    const auto& out = r.diagram;
    CHECK(out.diagram.kind == Kind::Closed);
    int m = find_component(out, "Lm"), p = find_component(out, "Lp");
    REQUIRE(m >= 0);
    REQUIRE(p >= 0);
    CHECK(role_of(out, p).coeff == 1);
    CHECK(classical(out.diagram, p).tb == -1);
    CHECK(std::abs(lk(out.diagram, m, p)) == 1);
    CHECK(h1(out, true) == h1(sd, true));
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("(k, m) = (0, 0)") != std::string::npos);
}

TEST_CASE("each script op runs and verifies") {
    auto two = parse_diagram(th::read_fixture("two_unknots.fk"));
    const char* script =
        "Reidemeister move=FC@1\n"
        "Stabilize c=a sign=- at=1:1\n"
        "HandleSlide i=b j=a at=3:1 orientation=add\n"
        "FirstKirby dir=add at=0:1\n"
        "FirstKirby dir=remove\n";
    auto r = run_script(two, parse_script(script), true);
    for (auto& rep : r.reports) CHECK_MESSAGE(rep.pass(), rep.json());
    CHECK(r.ok);
    CHECK(r.reports.size() == 5);

    auto k = parse_diagram("kind: closed\nword: L1 R1\ncomp K: orient=+ coeff=marked\n");
    const char* sharks =
        "SharkInsert c=K at=1:1 sign=+\n"
        "Stabilize c=K sign=+ at=1:1\n"
        "SharkStab dir=destabilize c=K at=1:1\n"
        "SharkStab dir=stabilize c=K sign=+ at=1:1\n";
    auto s = run_script(k, parse_script(sharks), true);
    for (auto& rep : s.reports) CHECK_MESSAGE(rep.pass(), rep.json());
    CHECK(s.ok);
}

TEST_CASE("script move 6 and light bulb") {
    auto [d, m] = insert_meridian(unknot(), 0, {1, 1, 0}, false, 1);
    SurgeryDiagram sd;
    sd.diagram = d;
    sd.roles[d.label[comp_of_label(d, 0)]] = Role{true, 0, "K"};
    sd.roles[d.label[m]] = Role{false, 1, "L0"};
    for (const char* op : {"UnknotMove kind=move6 c=K l0=L0\n", "LightBulb c=K l0=L0\n"}) {
        auto r = run_script(sd, parse_script(op), true);
        CHECK(r.ok);
        for (auto& rep : r.reports) CHECK_MESSAGE(rep.pass(), rep.json());
    }
}

TEST_CASE("rendering") {
    auto u = parse_diagram(th::read_fixture("unknot.fk"));
    std::string a = render_ascii(u);
    CHECK(a.find('<') != std::string::npos);
    CHECK(a.find('>') != std::string::npos);
    CHECK(a.find("u -1") != std::string::npos);
    CHECK(render_ascii(u) == a);

    auto cp = parse_diagram(th::read_fixture("cancelling_pair.fk"));
    std::string svg = render_svg(cp);
    CHECK(svg == render_svg(cp));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("b -1") != std::string::npos);
    CHECK(svg.find("p +1") != std::string::npos);
    // balanced tags
    int open = 0;
    for (size_t i = 0; i < svg.size(); ++i) {
        if (svg[i] != '<' || svg.compare(i, 2, "<?") == 0) continue;
        size_t close = svg.find('>', i);
        REQUIRE(close != std::string::npos);
        if (svg[i + 1] == '/') --open;
        else if (svg[close - 1] != '/') ++open;
        CHECK(open >= 0);
    }
    CHECK(open == 0);
}
