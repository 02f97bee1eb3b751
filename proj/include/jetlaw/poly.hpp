#pragma once

#include "jetlaw/atom.hpp"
#include "jetlaw/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace jetlaw {

/// Exponent of one factor, affine in the formal exponent symbol of the
/// verification subring: c0 + c1*m.  Outside that subring c1 == 0 and the
/// exponent is the plain integer c0.
struct FactorExp {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;

    bool is_plain() const { return c1 == 0; }
    bool is_zero() const { return c0 == 0 && c1 == 0; }
    friend constexpr auto operator<=>(const FactorExp&, const FactorExp&) = default;
};

struct Factor {
    Atom atom;
    FactorExp exp{1, 0};

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Monomial: factor list sorted by atom order with no repeated atoms.
using Monomial = std::vector<Factor>;

bool monomial_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(a, b); }
};

/// coeff * product of atom^exp.  Canonical form: coeff != 0, factors sorted
/// by atom order, exponents nonzero.  Exponents are positive integers except
/// on the base jets u, v: u may carry any integer (and, inside the
/// verification subring, an exponent affine in the family symbol).
struct Term {
    Rational coeff;
    Monomial factors;
};

/// Canonical multivariate polynomial over jet-space atoms with exact
/// rational coefficients.  Immutable after construction; arithmetic returns
/// new values.  Two DiffPolys are mathematically equal iff structurally
/// equal.
class DiffPoly {
public:
    DiffPoly() = default;

    static DiffPoly zero() { return DiffPoly(); }
    static DiffPoly constant(Rational c);
    static DiffPoly atom(const Atom& a);
    static DiffPoly monomial(Rational c, Monomial m);
    /// Canonicalizes an arbitrary term list (merges, sorts, drops zeros).
    static DiffPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// The rational value of a constant polynomial; throws PreconditionError
    /// if any term has factors.
    Rational constant_value() const;
    bool is_constant() const;

    DiffPoly operator-() const;
    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly& operator+=(const DiffPoly& o) { return *this = *this + o; }
    DiffPoly& operator-=(const DiffPoly& o) { return *this = *this - o; }
    DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }

    DiffPoly scaled(const Rational& c) const;
    /// Integer power, exponent >= 0.
    DiffPoly pow(int e) const;

    friend bool operator==(const DiffPoly&, const DiffPoly&);

    /// Maximum jet order of the given dependent variable present (0 when
    /// the variable is absent entirely).
    int max_jet_order(Dep dep) const;
    /// Maximum jet order over both dependents.
    int max_jet_order() const;

    bool contains_kind(Atom::Kind kind) const;
    bool contains_dep(Dep dep) const;
    bool contains_atom(const Atom& a) const;

    /// Set of distinct atoms appearing in the polynomial.
    std::set<Atom> atoms() const;

    /// Divides every coefficient by the gcd of the numerators over the lcm
    /// of the denominators, keeping the first term's sign positive.
    /// The zero polynomial is returned unchanged.
    DiffPoly primitive_part() const;

private:
    std::vector<Term> terms_;
};

bool term_less(const Term& a, const Term& b);

DiffPoly operator*(const Rational& c, const DiffPoly& p);

/// Convenience builders.
DiffPoly jet_poly(Dep dep, JetIndex idx);
DiffPoly param_poly(const std::string& name);
DiffPoly aux_poly(const std::string& name);
DiffPoly indep_poly(Indep iv);
DiffPoly phi_poly(int order);

} // namespace jetlaw
