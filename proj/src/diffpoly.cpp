#include "kdvflow/diffpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kdvflow {

void Monomial::trim() {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

bool Monomial::operator<(const Monomial& o) const {
    // Descending-print order reversed: qt-heaviest monomials first when the
    // map is walked back to front, so strict ordering here is "smaller last".
    if (qt != o.qt) return qt < o.qt;
    return u < o.u;  // lexicographic on exponent vectors
}

int Monomial::degree() const {
    int d = static_cast<int>(qt);
    for (unsigned e : u) d += static_cast<int>(e);
    return d;
}

DiffPoly DiffPoly::constant(Rational c) {
    DiffPoly p;
    p.insert(Monomial{}, std::move(c));
    return p;
}

DiffPoly DiffPoly::jet(unsigned i, unsigned exponent) {
    DiffPoly p;
    if (exponent == 0) return constant(1);
    Monomial m;
    m.u.assign(i + 1, 0);
    m.u[i] = exponent;
    p.insert(std::move(m), 1);
    return p;
}

DiffPoly DiffPoly::q_t() {
    DiffPoly p;
    Monomial m;
    m.qt = 1;
    p.insert(std::move(m), 1);
    return p;
}

bool DiffPoly::has_qt() const {
    for (const auto& [m, c] : terms_)
        if (m.qt > 0) return true;
    return false;
}

int DiffPoly::jet_order() const {
    int order = -1;
    for (const auto& [m, c] : terms_)
        if (!m.u.empty()) order = std::max(order, static_cast<int>(m.u.size()) - 1);
    return order;
}

void DiffPoly::insert(Monomial m, Rational c) {
    if (c == 0) return;
    m.trim();
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
    DiffPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.insert(m, c);
    return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const {
    DiffPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.insert(m, -c);
    return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
    DiffPoly r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.qt = ma.qt + mb.qt;
            m.u.assign(std::max(ma.u.size(), mb.u.size()), 0);
            for (std::size_t i = 0; i < ma.u.size(); ++i) m.u[i] += ma.u[i];
            for (std::size_t i = 0; i < mb.u.size(); ++i) m.u[i] += mb.u[i];
            r.insert(std::move(m), ca * cb);
        }
    }
    return r;
}

DiffPoly DiffPoly::operator*(const Rational& c) const {
    DiffPoly r;
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

DiffPoly DiffPoly::x_derivative() const {
    DiffPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.qt > 0) throw std::logic_error("x_derivative: qt symbol is not differentiable");
        for (std::size_t i = 0; i < m.u.size(); ++i) {
            if (m.u[i] == 0) continue;
            Monomial d = m;
            d.u[i] -= 1;
            if (d.u.size() < i + 2) d.u.resize(i + 2, 0);
            d.u[i + 1] += 1;
            r.insert(std::move(d), c * static_cast<int>(m.u[i]));
        }
    }
    return r;
}

Rational DiffPoly::coefficient(const Monomial& m) const {
    Monomial key = m;
    key.trim();
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

double DiffPoly::eval(std::span<const double> jet_values, double qt_value) const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) {
        double term = to_double(c);
        for (std::size_t i = 0; i < m.u.size(); ++i) {
            if (m.u[i] == 0) continue;
            if (i >= jet_values.size()) throw std::invalid_argument("eval: missing jet value");
            for (unsigned e = 0; e < m.u[i]; ++e) term *= jet_values[i];
        }
        for (unsigned e = 0; e < m.qt; ++e) term *= qt_value;
        sum += term;
    }
    return sum;
}

std::string DiffPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Reverse map order: qt terms first, then high-lex jet monomials.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1);
        bool bare = (m.qt == 0 && m.u.empty());
        if (!unit || bare) out << kdvflow::to_string(a);
        bool need_sep = !unit && !bare;
        if (m.qt > 0) {
            if (need_sep) out << "*";
            out << "qt";
            if (m.qt > 1) out << "^" << m.qt;
            need_sep = true;
        }
        for (std::size_t i = 0; i < m.u.size(); ++i) {
            if (m.u[i] == 0) continue;
            if (need_sep) out << "*";
            out << "u" << i;
            if (m.u[i] > 1) out << "^" << m.u[i];
            need_sep = true;
        }
    }
    return out.str();
}

}  // namespace kdvflow
