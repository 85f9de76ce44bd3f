#pragma once

#include "liftq/lattice.hpp"

namespace liftq {

/// Finite commutative unital quantale: a complete lattice with a
/// sup-preserving commutative monoid structure. Residuals are derived.
class FinQuantale {
public:
    /// Validates the quantale laws; returns the quantale or the first
    /// failure with witnesses. mult is a row-major n*n table.
    static std::variant<FinQuantale, Violation> make(FinLattice lat, Elt unit,
                                                     const std::vector<Elt>& mult);
    static FinQuantale make_or_throw(FinLattice lat, Elt unit, const std::vector<Elt>& mult);

    /// Two-element Boolean quantale {0, 1} with meet as multiplication.
    static FinQuantale boolean();

    const FinLattice& lattice() const { return lat_; }
    std::size_t size() const { return lat_.size(); }
    Elt unit() const { return unit_; }
    Elt bot() const { return lat_.bot(); }
    Elt top() const { return lat_.top(); }
    bool leq(Elt a, Elt b) const { return lat_.leq(a, b); }
    Elt join2(Elt a, Elt b) const { return lat_.join2(a, b); }
    Elt meet2(Elt a, Elt b) const { return lat_.meet2(a, b); }
    Elt mult(Elt a, Elt b) const { return mult_[a * size() + b]; }

    /// a -o b = join{c | a*c <= b}; right adjoint of mult(a, -).
    Elt residual(Elt a, Elt b) const { return res_[a * size() + b]; }

    const std::string& label(Elt a) const { return lat_.label(a); }

    /// Exhaustive check that (a -o omega) -o omega = a for all a; the first
    /// failing a on failure.
    std::optional<Elt> is_dualizing(Elt omega) const;

    /// j(a) = (a -o omega) -o omega, post-validated as a closure operator
    /// and as a nucleus (j(a)*j(b) <= j(a*b)).
    ClosureOp double_negation_nucleus(Elt omega) const;

    /// The name used in reports, set by the corpus loader.
    std::string name = "quantale";

private:
    FinQuantale() = default;
    FinLattice lat_;
    Elt unit_ = 0;
    std::vector<Elt> mult_;
    std::vector<Elt> res_;
};

/// Result of restricting to the fixed points of the double-negation nucleus.
struct GirardQuotient {
    FinQuantale quotient;
    std::vector<Elt> embedding;  // quotient index -> parent element
    Elt omega_in_quotient;
};

/// Fixed points of (- -o omega) -o omega with multiplication j(a*b) and unit
/// j(e). The result is re-validated through the quantale laws and must be
/// dualizing at omega; a failure throws InternalLawViolation.
GirardQuotient girard_quotient(const FinQuantale& q, Elt omega);

}  // namespace liftq
