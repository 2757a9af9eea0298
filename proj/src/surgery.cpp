#include "fk/surgery.hpp"

#include "fk/linalg.hpp"

#include <algorithm>

namespace fk {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& s) {
    auto bad = [&] { return Error(Code::SyntaxError, "bad rational '" + s + "'"); };
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& t) {
        size_t i = 0;
        if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
        if (i == t.size()) throw bad();
        for (size_t j = i; j < t.size(); ++j)
            if (!isdigit((unsigned char)t[j])) throw bad();
        return Int(t[0] == '+' ? t.substr(1) : t);
    };
    Int p = parse_int(s.substr(0, slash));
    Int q = slash == std::string::npos ? Int(1) : parse_int(s.substr(slash + 1));
    if (q <= 0) throw bad();
    return Rational(p, q);
}

const Role& role_of(const SurgeryDiagram& sd, int c) {
    if (c < 0 || c >= (int)sd.diagram.label.size()) throw Error(Code::InvalidComponent, std::to_string(c));
    auto it = sd.roles.find(sd.diagram.label[c]);
    if (it == sd.roles.end()) throw Error(Code::InvalidComponent, "component " + std::to_string(c) + " has no role");
    return it->second;
}

Role& role_of(SurgeryDiagram& sd, int c) {
    return const_cast<Role&>(role_of(static_cast<const SurgeryDiagram&>(sd), c));
}

int find_component(const SurgeryDiagram& sd, const std::string& name) {
    for (size_t c = 0; c < sd.diagram.label.size(); ++c) {
        auto it = sd.roles.find(sd.diagram.label[c]);
        if (it != sd.roles.end() && it->second.name == name) return (int)c;
    }
    return -1;
}

std::vector<int> surgery_curves(const SurgeryDiagram& sd) {
    std::vector<int> out;
    for (size_t c = 0; c < sd.diagram.label.size(); ++c)
        if (!role_of(sd, (int)c).marked) out.push_back((int)c);
    return out;
}

Rational topological_coefficient(const SurgeryDiagram& sd, int c) {
    const Role& r = role_of(sd, c);
    if (r.marked) throw Error(Code::MarkedKnotHasNoCoefficient, r.name);
    return Rational(classical(sd.diagram, c).tb) + r.coeff;
}

Matrix presentation_matrix(const SurgeryDiagram& sd, bool ambient) {
    Trace t = trace(sd.diagram);
    int nc = (int)t.comps.size();
    std::vector<int> cs;
    for (int c = 0; c < nc; ++c) {
        if (role_of(sd, c).marked) {
            if (!ambient) throw Error(Code::ContainsMarkedKnot, role_of(sd, c).name);
            continue;
        }
        if (!t.comps[c].closed) throw Error(Code::OpenComponent, "surgery curve must be closed");
        cs.push_back(c);
    }
    auto lkm = lk_matrix(sd.diagram, t);
    int n = (int)cs.size();
    // a 1-handle acts as a 0-framed curve linked by the algebraic passage count
    const auto& hs = sd.diagram.handles;
    int g = (int)hs.size();
    std::vector<std::vector<int>> pass(g, std::vector<int>(nc, 0));
    for (int h = 0; h < g; ++h)
        for (int i = hs[h].a; i <= hs[h].b; ++i) {
            int seg = t.at[0][i - 1];
            pass[h][t.seg_comp[seg]] += t.dir[seg];
        }
    Matrix m(n + g, std::vector<Int>(n + g, 0));
    for (int i = 0; i < n; ++i) {
        Rational f = Rational(classical(sd.diagram, t, cs[i]).tb) + role_of(sd, cs[i]).coeff;
        Int a = numerator(f), b = denominator(f);
        for (int j = 0; j < n; ++j) m[i][j] = i == j ? a : b * lkm[cs[i]][cs[j]];
        for (int h = 0; h < g; ++h) {
            m[i][n + h] = b * pass[h][cs[i]];
            m[n + h][i] = pass[h][cs[i]];
        }
    }
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Matrix r(n, std::vector<Int>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

SNF smith_normal_form(const Matrix& m) {
    SNF s;
    linalg::smith(m, s.D, s.U, s.V);
    return s;
}

HomologyReport homology_of(const Matrix& m) {
    SNF s = smith_normal_form(m);
    HomologyReport h;
    size_t n = m.size();
    size_t cols = n ? m[0].size() : 0;
    // generators are the rows (meridians); relations are the columns
    h.freeRank = (int)n;
    for (size_t i = 0; i < std::min(n, cols); ++i) {
        const Int& d = s.D[i][i];
        if (d != 0) {
            --h.freeRank;
            if (d > 1) h.torsion.push_back(d);
        }
    }
    return h;
}

HomologyReport h1(const SurgeryDiagram& sd, bool ambient) { return homology_of(presentation_matrix(sd, ambient)); }

Int determinant(const Matrix& m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Matrix a = m;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

int signature(const Matrix& m) {
    int sig = 0;
    if (!linalg::signature<Rational>(m, sig)) throw Error(Code::NotSymmetric, "matrix is not symmetric");
    return sig;
}

D3Report d3(const SurgeryDiagram& sd) {
    D3Report r;
    Trace t = trace(sd.diagram);
    std::vector<int> cs;
    for (int c = 0; c < (int)t.comps.size(); ++c) {
        const Role& ro = role_of(sd, c);
        if (ro.marked) continue;
        if (ro.coeff != 1 && ro.coeff != -1) {
            r.reason = "rational coefficient present";
            return r;
        }
        cs.push_back(c);
        if (ro.coeff == 1) ++r.qPlus;
    }
    if (!sd.diagram.handles.empty()) {
        r.reason = "1-handles present";
        return r;
    }
    Matrix m = presentation_matrix(sd, true);
    size_t n = m.size();
    r.chi = 1 + (int)n;
    if (determinant(m) == 0) {
        r.reason = "singular matrix";
        return r;
    }
    // solve M x = rot exactly
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    std::vector<Rational> rot(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
        rot[i] = classical(sd.diagram, t, cs[i]).rot;
        a[i][n] = rot[i];
    }
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (a[p][k] == 0) ++p;
        std::swap(a[p], a[k]);
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    r.cSquared = 0;
    for (size_t i = 0; i < n; ++i) r.cSquared += a[i][n] / a[i][i] * rot[i];
    r.sigma = signature(m);
    r.value = (r.cSquared - 3 * r.sigma - 2 * r.chi) / 4 + r.qPlus;
    r.defined = true;
    return r;
}

std::optional<std::pair<int, int>> match_stabilizations(int deltaFraming, int deltaRotation) {
    int s = -deltaFraming, d = deltaRotation;
    if ((s + d) % 2 != 0) return std::nullopt;
    int k = (s + d) / 2, m = (s - d) / 2;
    if (k < 0 || m < 0) return std::nullopt;
    return std::pair{k, m};
}

}  // namespace fk
