#pragma once

#include "kdvflow/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace kdvflow {

// Monomial in the jet variables u0,u1,...,uK (u_i carries the i-th spatial
// derivative of the field) and the distinguished time-derivative symbol qt,
// which is never produced or consumed by the spatial derivation.
struct Monomial {
    unsigned qt = 0;
    std::vector<unsigned> u;  // exponent of u_i at index i, trailing zeros trimmed

    void trim();
    bool operator==(const Monomial& o) const { return qt == o.qt && u == o.u; }
    // Order used both for map storage and for deterministic printing.
    bool operator<(const Monomial& o) const;
    int degree() const;
};

// Multivariate polynomial over the jet variables with exact rational
// coefficients. Immutable in spirit: operations return new values and never
// store zero coefficients.
class DiffPoly {
  public:
    DiffPoly() = default;
    static DiffPoly constant(Rational c);
    static DiffPoly jet(unsigned i, unsigned exponent = 1);
    static DiffPoly q_t();

    bool is_zero() const { return terms_.empty(); }
    bool has_qt() const;
    // Largest jet index appearing with nonzero exponent; -1 for constants.
    int jet_order() const;
    std::size_t term_count() const { return terms_.size(); }

    DiffPoly operator-() const;
    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly operator*(const Rational& c) const;
    bool operator==(const DiffPoly& o) const { return terms_ == o.terms_; }

    // Total x-derivative: d(u_i) = u_{i+1}. Throws if qt is present.
    DiffPoly x_derivative() const;

    Rational coefficient(const Monomial& m) const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    double eval(std::span<const double> jet_values, double qt_value = 0.0) const;

    // One monomial per term, descending monomial order, coefficients as p/q.
    std::string to_string() const;

  private:
    void insert(Monomial m, Rational c);
    std::map<Monomial, Rational> terms_;
};

inline DiffPoly operator*(const Rational& c, const DiffPoly& p) { return p * c; }

}  // namespace kdvflow
