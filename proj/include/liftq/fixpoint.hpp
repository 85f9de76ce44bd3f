#pragma once

#include <functional>

#include "liftq/total.hpp"

namespace liftq {

/// Thrown when a (co)algebra structure map that must be a base isomorphism
/// is not one.
struct StructureNotInvertible : CheckError {
    using CheckError::CheckError;
};

/// Thrown when the initial-algebra lifting is requested but the lax family
/// is not natural.
struct PsiNotNatural : CheckError {
    using CheckError::CheckError;
};

/// A supported base endofunctor together with the lax family
/// psi_X : Q(X) -> Q(F(X)) that lifts it to the total category. psi_natural
/// is stamped by check_lift when every naturality square is an equality.
struct EndoLift {
    std::shared_ptr<const Presheaf> P;
    EndoFunctor F;
    std::function<Elt(const FinSet&, Elt)> psi;
    std::string psi_desc;
    bool psi_natural = false;

    std::string show() const { return F.show() + " with psi " + psi_desc; }

    /// F = Id, psi = id; natural.
    static EndoLift identity_lift(std::shared_ptr<const Presheaf> P);
    /// F constant at A, psi constantly theta in Q(A).
    static EndoLift constant_lift(std::shared_ptr<const Presheaf> P, FinSet A, QMat mult,
                                  QMat unit, Elt theta);
    /// F = A (x) -, psi_X(alpha) = mu(a0, alpha) for a0 in Q(A).
    static EndoLift product_lift(std::shared_ptr<const Presheaf> P, FinSet A, QMat mult,
                                 QMat unit, Elt a0);
};

/// Coalgebra gamma : X -> F(X); algebra gamma : F(X) -> X.
struct Coalg {
    FinSet X;
    QMat gamma;
};
struct Alg {
    FinSet X;
    QMat gamma;
};

/// psi monotone and lax natural: Q(F(f))(psi(a)) <= psi(Q(f)(a)). Stamps
/// psi_natural when the squares all commute strictly.
void check_lift(EndoLift& lift, std::size_t max_obj, Report& rep,
                std::uint64_t mat_limit = 1u << 10);

/// Post-fixed points {a | Q(gamma)(a) <= psi_X(a)}, the value lattice of the
/// coalgebra in the lifted setting.
std::vector<Elt> q_nu(const EndoLift& lift, const Coalg& c);

/// Pre-fixed points {a | Q(gamma)(psi_X(a)) <= a}.
std::vector<Elt> q_mu(const EndoLift& lift, const Alg& a);

/// Functorial action on pre-fixed points: the least member of q_mu(dst)
/// above Q(f)(alpha). Coincides with Q(f)(alpha) when psi is natural.
Elt q_mu_action(const EndoLift& lift, const Alg& src, const QMat& f, const Alg& dst,
                Elt alpha);

/// q_nu join-closed and stable under coalgebra-morphism restriction; q_mu
/// meet-closed.
void check_fixpoint_lattices(const EndoLift& lift, std::size_t max_obj, Report& rep,
                             std::uint64_t mat_limit = 1u << 10);

/// Two routes to the pre-fixed points: the definition directly, and the dual
/// computation psi_X(a) <= Q(gamma)^*(a) through right adjoints, with the
/// matching adjoint description of the functorial action.
void check_q_mu_duality(const EndoLift& lift, std::size_t max_obj, Report& rep,
                        std::uint64_t mat_limit = 1u << 10);

/// Coalgebras of the lifted functor versus pairs (base coalgebra, post-fixed
/// point): object and morphism sets must biject under the identity carrier
/// map.
void enumerate_coalg_category(const EndoLift& lift, std::size_t max_obj, Report& rep,
                              std::uint64_t mat_limit = 1u << 10);

/// A lifted (co)algebra: carrier with its value, structure map, and the
/// fixed-point iteration length.
struct LiftedFixpoint {
    TotalObj obj;
    QMat chi;
    std::size_t iterations = 0;
};

/// Lifts a base terminal coalgebra (X, chi) with chi invertible: the value is
/// the greatest fixed point of Q(chi^{-1}) o psi_X, computed by iteration
/// from the top. Terminality and the Lambek isomorphism are verified by
/// exhaustive mediator enumeration within the budget.
LiftedFixpoint lift_terminal_coalgebra(const EndoLift& lift, const Coalg& nu,
                                       std::size_t max_obj, Report& rep,
                                       std::uint64_t mat_limit = 1u << 10);

/// Dual lifting of a base initial algebra (X, chi): least fixed point of
/// Q(chi) o psi_X from the bottom. Requires psi natural.
LiftedFixpoint lift_initial_algebra(const EndoLift& lift, const Alg& mu,
                                    std::size_t max_obj, Report& rep,
                                    std::uint64_t mat_limit = 1u << 10);

}  // namespace liftq
