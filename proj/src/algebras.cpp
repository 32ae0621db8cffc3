/* Copyright 2026 The expfactor Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "expfactor/algebras.hpp"

#include <map>
#include <sstream>

#include "expfactor/errors.hpp"

namespace expfactor {

namespace {

void push(BasisCombination& out, const BasisIndex& x, const Rational& c) {
    if (!c.is_zero()) out.emplace_back(x, c);
}

// Parses "L_n"-style names; returns the doubled mode.
int parse_mode(std::string_view text, std::string_view prefix) {
    if (text.substr(0, prefix.size()) != prefix) throw DomainError("unknown basis element '" + std::string(text) + "'");
    return parse_doubled(text.substr(prefix.size()));
}

void virasoro_bracket(int m, int n, BasisCombination& out, const BasisIndex& l_target, const BasisIndex& c) {
    push(out, l_target, Rational(m - n));
    if (m + n == 0) push(out, c, Rational(static_cast<long>(m) * m * m - m, 12));
}

} // namespace

// ---------------------------------------------------------------- Virasoro

BasisCombination VirasoroAlgebra::bracket(const BasisIndex& x, const BasisIndex& y) const {
    BasisCombination out;
    if (x.central || y.central) return out;
    const int m = x.degree / 2;
    const int n = y.degree / 2;
    virasoro_bracket(m, n, out, L(m + n), c());
    return out;
}

std::string VirasoroAlgebra::format(const BasisIndex& x) const {
    if (x.family == family_c) return "c";
    return "L_" + std::to_string(x.degree / 2);
}

BasisIndex VirasoroAlgebra::parse(std::string_view text) const {
    if (text == "c") return c();
    const int d = parse_mode(text, "L_");
    if (d % 2 != 0) throw DomainError("Virasoro modes are integers: '" + std::string(text) + "'");
    return L(d / 2);
}

std::vector<BasisIndex> VirasoroAlgebra::basis_window(int max_abs_degree) const {
    std::vector<BasisIndex> out;
    for (int n = -max_abs_degree; n <= max_abs_degree; ++n) out.push_back(L(n));
    out.push_back(c());
    return out;
}

// ----------------------------------------------------------- Neveu-Schwarz

BasisIndex NeveuSchwarzAlgebra::G(int doubled) {
    if (doubled % 2 == 0) throw DomainError("G modes are half-integers (odd doubled index)");
    return {doubled, family_g, 0, 1, false};
}

BasisCombination NeveuSchwarzAlgebra::bracket(const BasisIndex& x, const BasisIndex& y) const {
    BasisCombination out;
    if (x.central || y.central) return out;
    const bool xg = x.family == family_g;
    const bool yg = y.family == family_g;
    if (!xg && !yg) {
        virasoro_bracket(x.degree / 2, y.degree / 2, out, L((x.degree + y.degree) / 2), c());
    } else if (xg && !yg) {
        // [G_r, L_n] = (r - n/2) G_{r+n}; with doubled r2 = 2r, n2 = 2n:
        // r - n/2 = (2 r2 - n2) / 4.
        push(out, G(x.degree + y.degree), Rational(2L * x.degree - y.degree, 4));
    } else if (!xg && yg) {
        // Even-odd skew-symmetry: [L_n, G_r] = -[G_r, L_n].
        push(out, G(x.degree + y.degree), -Rational(2L * y.degree - x.degree, 4));
    } else {
        // [G_r, G_s] = 2 L_{r+s} + (r^2 - 1/4)/3 delta c = ... (r2^2 - 1)/12.
        push(out, L((x.degree + y.degree) / 2), Rational(2));
        if (x.degree + y.degree == 0) push(out, c(), Rational(static_cast<long>(x.degree) * x.degree - 1, 12));
    }
    return out;
}

std::string NeveuSchwarzAlgebra::format(const BasisIndex& x) const {
    if (x.family == family_c) return "c";
    return (x.family == family_g ? "G_" : "L_") + doubled_string(x.degree);
}

BasisIndex NeveuSchwarzAlgebra::parse(std::string_view text) const {
    if (text == "c") return c();
    if (text.substr(0, 2) == "G_") return G(parse_mode(text, "G_"));
    const int d = parse_mode(text, "L_");
    if (d % 2 != 0) throw DomainError("L modes are integers: '" + std::string(text) + "'");
    return L(d / 2);
}

std::vector<BasisIndex> NeveuSchwarzAlgebra::basis_window(int max_abs_degree) const {
    std::vector<BasisIndex> out;
    for (int d = -2 * max_abs_degree; d <= 2 * max_abs_degree; ++d)
        out.push_back(d % 2 == 0 ? L(d / 2) : G(d));
    out.push_back(c());
    return out;
}

// ------------------------------------------------------------------ Affine

void FiniteLieData::check_shape() const {
    const std::size_t n = names.size();
    if (n == 0) throw DomainError("finite Lie algebra has no basis");
    if (structure.size() != n || form.size() != n) throw DomainError("structure constants / form have the wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
        if (structure[i].size() != n || form[i].size() != n)
            throw DomainError("structure constants / form have the wrong shape");
        for (std::size_t j = 0; j < n; ++j)
            if (structure[i][j].size() != n) throw DomainError("structure constants have the wrong shape");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names[i] == names[j]) throw DomainError("duplicate basis name '" + names[i] + "'");
    for (const auto& name : names)
        if (name.empty() || name == "k" || name.find('@') != std::string::npos)
            throw DomainError("invalid basis name '" + name + "'");
}

FiniteLieData sl2_data() {
    FiniteLieData d;
    d.names = {"e", "f", "h"};
    const std::vector<Rational> zero(3);
    d.structure.assign(3, std::vector<std::vector<Rational>>(3, zero));
    enum { e = 0, f = 1, h = 2 };
    d.structure[e][f][h] = 1;
    d.structure[f][e][h] = -1;
    d.structure[h][e][e] = 2;
    d.structure[e][h][e] = -2;
    d.structure[h][f][f] = -2;
    d.structure[f][h][f] = 2;
    d.form.assign(3, zero);
    d.form[e][f] = 1;
    d.form[f][e] = 1;
    d.form[h][h] = 2;
    return d;
}

AffineAlgebra::AffineAlgebra(FiniteLieData data, std::string label) : data_(std::move(data)), label_(std::move(label)) {
    data_.check_shape();
}

int AffineAlgebra::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < data_.names.size(); ++i)
        if (data_.names[i] == name) return static_cast<int>(i);
    throw DomainError("unknown finite basis element '" + std::string(name) + "'");
}

Rational AffineAlgebra::form(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    Rational out;
    for (std::size_t i = 0; i < data_.dim(); ++i)
        for (std::size_t j = 0; j < data_.dim(); ++j)
            if (!x[i].is_zero() && !y[j].is_zero()) out += x[i] * y[j] * data_.form[i][j];
    return out;
}

BasisCombination AffineAlgebra::bracket(const BasisIndex& x, const BasisIndex& y) const {
    BasisCombination out;
    if (x.central || y.central) return out;
    const int m = x.degree / 2;
    const int n = y.degree / 2;
    const auto& row = data_.structure[static_cast<std::size_t>(x.sub)][static_cast<std::size_t>(y.sub)];
    for (std::size_t k = 0; k < row.size(); ++k) push(out, gen(static_cast<int>(k), m + n), row[k]);
    if (m + n == 0)
        push(out, AffineAlgebra::k(),
             data_.form[static_cast<std::size_t>(x.sub)][static_cast<std::size_t>(y.sub)] * Rational(m));
    return out;
}

std::string AffineAlgebra::format(const BasisIndex& x) const {
    if (x.family == family_k) return "k";
    return data_.names[static_cast<std::size_t>(x.sub)] + "@" + std::to_string(x.degree / 2);
}

BasisIndex AffineAlgebra::parse(std::string_view text) const {
    if (text == "k") return k();
    const auto at = text.find('@');
    if (at == std::string_view::npos) throw DomainError("affine basis elements look like 'e@2': '" + std::string(text) + "'");
    const int d = parse_doubled(text.substr(at + 1));
    if (d % 2 != 0) throw DomainError("affine modes are integers: '" + std::string(text) + "'");
    return gen(index_of(text.substr(0, at)), d / 2);
}

std::vector<BasisIndex> AffineAlgebra::basis_window(int max_abs_degree) const {
    std::vector<BasisIndex> out;
    for (int n = -max_abs_degree; n <= max_abs_degree; ++n)
        for (std::size_t i = 0; i < data_.dim(); ++i) out.push_back(gen(static_cast<int>(i), n));
    out.push_back(k());
    return out;
}

std::vector<std::string> AffineAlgebra::extra_checks() const {
    std::vector<std::string> failures;
    const std::size_t n = data_.dim();
    const auto& f = data_.structure;
    const auto& B = data_.form;
    auto nm = [&](std::size_t i) { return data_.names[i]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (B[i][j] != B[j][i]) failures.push_back("form not symmetric at (" + nm(i) + "," + nm(j) + ")");
            for (std::size_t k = 0; k < n; ++k)
                if (f[i][j][k] != -f[j][i][k])
                    failures.push_back("finite bracket not skew at (" + nm(i) + "," + nm(j) + ")");
        }
    }
    // Jacobi on l: [[x,y],z] + [[y,z],x] + [[z,x],y] = 0.
    auto nested = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t out) {
        Rational s;
        for (std::size_t k = 0; k < n; ++k)
            if (!f[a][b][k].is_zero()) s += f[a][b][k] * f[k][c][out];
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t o = 0; o < n; ++o)
                    if (!(nested(i, j, k, o) + nested(j, k, i, o) + nested(k, i, j, o)).is_zero()) {
                        failures.push_back("finite Jacobi fails at (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
                        o = n;
                    }
    // Invariance: ([x,y],z) + (y,[x,z]) = 0.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Rational s;
                for (std::size_t o = 0; o < n; ++o) s += f[i][j][o] * B[o][k] + B[j][o] * f[i][k][o];
                if (!s.is_zero())
                    failures.push_back("form not invariant at (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
            }
    return failures;
}

std::shared_ptr<const AffineAlgebra> make_affine(FiniteLieData data, std::string label) {
    auto plugin = std::make_shared<const AffineAlgebra>(std::move(data), std::move(label));
    const ValidationReport report = validate_plugin(*plugin, 2);
    if (!report.ok) {
        std::ostringstream os;
        os << "affine configuration fails validation:";
        for (const auto& f : report.failures) os << "\n  " << f;
        throw DomainError(os.str());
    }
    return plugin;
}

// -------------------------------------------------------------- validation

namespace {

using Accum = std::map<BasisIndex, Rational>;

void accumulate(Accum& acc, const BasisCombination& terms, const Rational& scale) {
    for (const auto& [x, c] : terms) {
        auto& slot = acc[x];
        slot += c * scale;
    }
}

bool all_zero(const Accum& acc) {
    for (const auto& [x, c] : acc)
        if (!c.is_zero()) return false;
    return true;
}

int sign(int p, int q) { return (p * q) % 2 == 0 ? 1 : -1; }

// sign * [[u, v], w]
void nested_into(Accum& acc, const LieAlgebraPlugin& plugin, const BasisIndex& u, const BasisIndex& v,
                 const BasisIndex& w, int s) {
    for (const auto& [x, c] : plugin.bracket(u, v)) accumulate(acc, plugin.bracket(x, w), c * Rational(s));
}

} // namespace

ValidationReport validate_plugin(const LieAlgebraPlugin& plugin, int max_abs_degree) {
    ValidationReport report;
    const auto basis = plugin.basis_window(max_abs_degree);
    auto fail = [&](std::string msg) {
        report.ok = false;
        if (report.failures.size() < 50) report.failures.push_back(std::move(msg));
    };
    for (const auto& u : basis) {
        for (const auto& v : basis) {
            ++report.pairs_checked;
            const auto uv = plugin.bracket(u, v);
            const std::string tag = "(" + plugin.format(u) + ", " + plugin.format(v) + ")";
            for (const auto& [x, c] : uv) {
                if (x.degree != u.degree + v.degree) fail("degree additivity fails at " + tag);
                if (x.parity != (u.parity + v.parity) % 2) fail("parity additivity fails at " + tag);
                if (c.is_zero()) fail("zero coefficient returned at " + tag);
            }
            if ((u.central || v.central) && !uv.empty()) fail("central element does not commute at " + tag);
            Accum acc;
            accumulate(acc, uv, Rational(1));
            accumulate(acc, plugin.bracket(v, u), Rational(sign(u.parity, v.parity)));
            if (!all_zero(acc)) fail("graded skew-symmetry fails at " + tag);
        }
    }
    for (const auto& u : basis) {
        for (const auto& v : basis) {
            for (const auto& w : basis) {
                ++report.triples_checked;
                Accum acc;
                nested_into(acc, plugin, u, v, w, sign(u.parity, w.parity));
                nested_into(acc, plugin, v, w, u, sign(v.parity, u.parity));
                nested_into(acc, plugin, w, u, v, sign(w.parity, v.parity));
                if (!all_zero(acc)) {
                    fail("graded Jacobi fails at (" + plugin.format(u) + ", " + plugin.format(v) + ", " +
                         plugin.format(w) + ")");
                    if (!report.jacobi_witness)
                        report.jacobi_witness = std::vector<std::string>{plugin.format(u), plugin.format(v), plugin.format(w)};
                }
            }
        }
    }
    for (auto& f : plugin.extra_checks()) fail(std::move(f));
    return report;
}

} // namespace expfactor
