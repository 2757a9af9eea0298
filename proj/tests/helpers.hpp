#pragma once

#include "fk/io.hpp"
#include "fk/surgery.hpp"
#include "oracle.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace th {

inline fk::SurgeryDiagram with_roles(const fk::FrontDiagram& d, const std::vector<std::string>& coeffs) {
    fk::SurgeryDiagram sd;
    sd.diagram = d;
    for (size_t c = 0; c < coeffs.size(); ++c) {
        fk::Role r;
        r.name = "k" + std::to_string(c);
        if (coeffs[c] == "marked") r.marked = true;
        else r.coeff = fk::parse_rational(coeffs[c]);
        sd.roles[d.label[c]] = r;
    }
    return sd;
}

// Random closed surgery diagram: coefficients drawn from +-1, 1/2, marked.
inline fk::SurgeryDiagram random_surgery(std::mt19937& rng, int maxlen, int maxk = 8) {
    auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
    while (true) {
        fk::FrontDiagram d;
        try {
            d = fk::from_word(oracle::random_word(rng, maxlen, maxk));
        } catch (const fk::Error&) {
            continue;
        }
        std::vector<std::string> cs;
        for (int c = 0; c < fk::num_components(d); ++c) {
            int z = uni(0, 5);
            cs.push_back(z == 0 ? "marked" : z == 1 ? "1/2" : z % 2 ? "+1" : "-1");
        }
        auto sd = with_roles(d, cs);
        for (int c = 0; c < (int)cs.size(); ++c) fk::role_of(sd, c).name = "k" + std::to_string(c);
        return sd;
    }
}

inline std::string fixture_path(const std::string& name) { return std::string(FK_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const std::vector<std::string>& fixture_corpus() {
    static const std::vector<std::string> names = {
        "empty.fk",         "unknot.fk",          "trefoil.fk",         "two_unknots.fk", "hopf.fk",
        "cancelling_pair.fk", "rational.fk",      "long_stabilized.fk", "handle_strand.fk", "two_handles.fk"};
    return names;
}

}  // namespace th
