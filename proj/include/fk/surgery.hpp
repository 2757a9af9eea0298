#pragma once

#include "fk/front.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Int>>;

std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

struct Role {
    bool marked = false;
    Rational coeff = 0;
    std::string name;
    bool used = false;  // shark bookkeeping
};

// Roles are keyed by component label, so they survive reindexing.
struct SurgeryDiagram {
    FrontDiagram diagram;
    std::map<int, Role> roles;
};

const Role& role_of(const SurgeryDiagram& sd, int c);
Role& role_of(SurgeryDiagram& sd, int c);
int find_component(const SurgeryDiagram& sd, const std::string& name);
std::vector<int> surgery_curves(const SurgeryDiagram& sd);

struct HomologyReport {
    int freeRank = 0;
    std::vector<Int> torsion;
    bool operator==(const HomologyReport&) const = default;
};

struct D3Report {
    bool defined = false;
    std::string reason;
    Rational value = 0, cSquared = 0;
    int sigma = 0, chi = 0, qPlus = 0;
};

struct SNF {
    Matrix D, U, V;
};

Rational topological_coefficient(const SurgeryDiagram& sd, int c);
// ambient = true drops marked knots instead of rejecting them.
Matrix presentation_matrix(const SurgeryDiagram& sd, bool ambient = false);
SNF smith_normal_form(const Matrix& m);
HomologyReport h1(const SurgeryDiagram& sd, bool ambient = false);
HomologyReport homology_of(const Matrix& m);
int signature(const Matrix& m);
Int determinant(const Matrix& m);
D3Report d3(const SurgeryDiagram& sd);
std::optional<std::pair<int, int>> match_stabilizations(int deltaFraming, int deltaRotation);

Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace fk
