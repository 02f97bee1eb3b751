#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace jetlaw {

/// Independent variables of the jet space.  x^1 = t, x^2 = x.
enum class Indep : std::uint8_t { t = 0, x = 1 };

/// Dependent variables: u is the physical field, v the adjoint variable.
enum class Dep : std::uint8_t { u = 0, v = 1 };

inline constexpr int kDefaultMaxOrder = 12;

/// Unordered multi-index of a jet coordinate: nt differentiations in t and
/// nx in x.  Mixed partials commute, so (1,1) stands for both u_tx and u_xt.
struct JetIndex {
    int nt = 0;
    int nx = 0;

    constexpr int order() const { return nt + nx; }
    constexpr bool is_base() const { return nt == 0 && nx == 0; }

    constexpr JetIndex bumped(Indep dir) const {
        return dir == Indep::t ? JetIndex{nt + 1, nx} : JetIndex{nt, nx + 1};
    }

    /// True when this index is a prolongation of `other` (componentwise >=).
    constexpr bool contains(const JetIndex& other) const {
        return nt >= other.nt && nx >= other.nx;
    }

    friend constexpr auto operator<=>(const JetIndex&, const JetIndex&) = default;
};

/// One indeterminate of the differential-polynomial ring.
///
/// The total order below is the basis of every canonical form in the
/// library; changing it changes golden outputs.
struct Atom {
    enum class Kind : std::uint8_t {
        parameter = 0,       // eps, alpha, beta, kappa, ...
        aux_constant = 1,    // a, b (split constants of the phi families)
        indep_var = 2,       // t, x
        jet = 3,             // u_J, v_J
        phi_deriv = 4,       // phi^(k)(u)
        family_exponent = 5, // formal exponent symbol of the verification subring
    };

    Kind kind = Kind::parameter;
    Dep dep = Dep::u;     // jet only
    Indep iv = Indep::t;  // indep_var only
    JetIndex index{};     // jet only
    int phi_order = 0;    // phi_deriv only
    std::string name;     // parameter / aux_constant / family_exponent

    static Atom parameter(std::string name);
    static Atom aux_constant(std::string name);
    static Atom indep(Indep iv);
    static Atom jet(Dep dep, JetIndex idx);
    static Atom phi(int order);
    static Atom family_exponent(std::string name = "m");

    bool is_jet() const { return kind == Kind::jet; }
    bool is_jet_of(Dep d) const { return kind == Kind::jet && dep == d; }
    bool is_base_jet(Dep d) const { return is_jet_of(d) && index.is_base(); }

    /// Differential weight used by the term order: the order of a jet
    /// coordinate, zero for everything else.
    int jet_weight() const { return kind == Kind::jet ? index.order() : 0; }

    /// Grammar spelling: "u_tx", "phi''", "eps", "t", ...
    std::string spelling() const;

    friend bool operator==(const Atom&, const Atom&);
    friend std::strong_ordering operator<=>(const Atom&, const Atom&);
};

} // namespace jetlaw
