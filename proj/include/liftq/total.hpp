#pragma once

#include "liftq/presheaf.hpp"

namespace liftq {

/// Object of the total category: a base object with a chosen element of its
/// value lattice.
struct TotalObj {
    FinSet X;
    Elt alpha;
};

/// Candidate dualizing pair: the base dualizing object is the singleton
/// (which is also the tensor unit here), omega is an element of its value
/// lattice. Dualizing is checked, never assumed.
struct DualCandidate {
    Elt omega;
};

/// Hom condition: Q(f)(alpha) <= beta. Returns the witness on failure.
std::optional<Violation> is_morphism(const Presheaf& P, const TotalObj& src, const QMat& f,
                                     const TotalObj& dst);

/// Isomorphism criterion: f a base struct iso and Q(f)(alpha) = beta.
std::optional<Violation> is_iso_morphism(const Presheaf& P, const TotalObj& src, const QMat& f,
                                         const TotalObj& dst);

TotalObj lifted_tensor(const Presheaf& P, const TotalObj& a, const TotalObj& b);
TotalObj lifted_unit(const Presheaf& P);

/// <alpha, beta> = Q(ev_{X,Y})(mu(alpha, beta)), beta in Q(X -o Y), computed
/// by that composite.
Elt pairing_oracle(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt beta);

/// Closed form when the instance provides one, otherwise the composite.
Elt pairing(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt beta);

/// iota(alpha, gamma) = join{beta | <alpha, beta> <= gamma}, by enumeration
/// of Q(X -o Y). Throws CarrierTooLarge beyond the enumeration budget.
Elt iota_oracle(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt gamma);

/// Closed form when the instance provides one, otherwise the oracle.
Elt iota(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt gamma);

/// omega_X(alpha) = iota_{X,I}(alpha, omega), an element of Q(X*).
Elt omega_map(const Presheaf& P, const DualCandidate& d, const FinSet& X, Elt alpha);

/// lneg(beta) = join{alpha | <alpha, beta>_X <= omega}, beta in Q(X*).
Elt lneg(const Presheaf& P, const DualCandidate& d, const FinSet& X, Elt beta);

/// Currying along the compact closed structure:
/// curry(f : X (x) Y -> Z) = (id_X -o f) o eta : Y -> X -o Z.
QMat curry_mor(const FinSet& X, const FinSet& Y, const QMat& f);
/// uncurry(g : Y -> X -o Z) = ev o (id_X (x) g) : X (x) Y -> Z.
QMat uncurry_mor(const FinSet& X, const FinSet& Z, const QMat& g);

/// Lifted structural isos are isomorphisms of the total category, and the
/// hom condition is stable under composition.
void check_total_basics(const Presheaf& P, std::size_t max_obj, Report& rep,
                        std::uint64_t mat_limit = 1u << 12);

/// Closed structure of the total category: oracle/closed-form agreement,
/// the adjunction <a,b> <= c iff b <= iota(a,c), the unit and counit
/// inequalities, definability of mu from the pairing, the curry bijection
/// on hom-sets, and naturality of iota along invertible maps.
void check_closed_structure(const Presheaf& P, std::size_t max_obj, Report& rep,
                            std::uint64_t mat_limit = 1u << 12);

/// Lax extranaturality of the iota family (semi-commutativity in both
/// variables), with the adjoint-transposed variant.
void check_iota_lax(const Presheaf& P, std::size_t max_obj, Report& rep,
                    std::uint64_t mat_limit = 1u << 8);

/// Dualizing candidate check. Criterion A: omega_X and lneg are mutually
/// inverse on every object in budget. Criterion B: Q(j_X) = omega_{X*} o
/// omega_X. The two criteria must agree (their equivalence is a theorem);
/// returns whether A holds everywhere.
bool check_dualizing(const Presheaf& P, const DualCandidate& d, std::size_t max_obj,
                     Report& rep);

/// <alpha, beta>_X = <beta, Q(j_X)(alpha)>_{X*}, plus the Galois chain
/// alpha <= lneg(beta) iff <alpha,beta> <= omega iff beta <= omega_X(alpha).
void pairing_twist_check(const Presheaf& P, const DualCandidate& d, std::size_t max_obj,
                         Report& rep);

}  // namespace liftq
