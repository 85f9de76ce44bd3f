#include "liftq/fixpoint.hpp"

namespace liftq {

namespace {

bool enumerable(const Presheaf& P, const FinSet& X) {
    if (!P.supports(X)) return false;
    try {
        return P.carrier_size(X) <= P.enum_budget();
    } catch (const CarrierTooLarge&) {
        return false;
    }
}

std::vector<QMat> mats_within(const FinSet& X, const FinSet& Y, const FinQuantale* q,
                              std::uint64_t limit) {
    try {
        return all_mats(X, Y, q, limit);
    } catch (const CarrierTooLarge&) {
        return {};
    }
}

bool usable(const EndoLift& lift, const FinSet& X) {
    const FinSet FX = lift.F.on_obj(X);
    return enumerable(*lift.P, X) && lift.P->supports(FX) && enumerable(*lift.P, FX);
}

std::string budget_str(std::size_t max_obj) {
    return "objects of size <= " + std::to_string(max_obj) +
           ", morphisms within the hom limit, all carrier elements";
}

void require_coalg_shape(const EndoLift& lift, const Coalg& c) {
    if (!(c.gamma.dom() == c.X) || !(c.gamma.cod() == lift.F.on_obj(c.X)))
        throw ShapeMismatch("coalgebra structure must map the carrier into its image under " +
                            lift.F.show());
}

void require_alg_shape(const EndoLift& lift, const Alg& a) {
    if (!(a.gamma.cod() == a.X) || !(a.gamma.dom() == lift.F.on_obj(a.X)))
        throw ShapeMismatch("algebra structure must map the functor image onto the carrier of " +
                            lift.F.show());
}

/// join{xi in Q(Z) | Q(g)(xi) <= a}, the right adjoint of Q(g) at a.
Elt apply_right_adjoint(const Presheaf& P, const QMat& g, Elt a) {
    std::vector<Elt> below;
    for (Elt xi : P.carrier(g.dom()))
        if (P.leq(g.cod(), P.apply(g, xi), a)) below.push_back(xi);
    return P.join(g.dom(), below);
}

/// Iterates f from start until stationary; the chain must be monotone in the
/// given direction, so it stabilizes within the carrier height.
Elt iterate_to_fixpoint(const Presheaf& P, const FinSet& X, Elt start,
                        const std::function<Elt(Elt)>& f, std::size_t* count) {
    Elt cur = start;
    std::size_t steps = 0;
    const std::size_t bound = static_cast<std::size_t>(P.carrier_size(X)) + 2;
    for (;;) {
        Elt nxt = f(cur);
        if (nxt == cur) break;
        cur = nxt;
        if (++steps > bound)
            throw InternalLawViolation("fixed-point iteration did not stabilize");
    }
    if (count) *count = steps;
    return cur;
}

}  // namespace

EndoLift EndoLift::identity_lift(std::shared_ptr<const Presheaf> P) {
    EndoLift l;
    l.P = std::move(P);
    l.F = EndoFunctor::identity();
    l.psi = [](const FinSet&, Elt a) { return a; };
    l.psi_desc = "id";
    return l;
}

EndoLift EndoLift::constant_lift(std::shared_ptr<const Presheaf> P, FinSet A, QMat mult,
                                 QMat unit, Elt theta) {
    EndoLift l;
    l.P = P;
    l.F = EndoFunctor::constant(A, std::move(mult), std::move(unit));
    l.psi = [theta](const FinSet&, Elt) { return theta; };
    l.psi_desc = "const " + P->show(A, theta);
    return l;
}

EndoLift EndoLift::product_lift(std::shared_ptr<const Presheaf> P, FinSet A, QMat mult,
                                QMat unit, Elt a0) {
    EndoLift l;
    l.P = P;
    l.F = EndoFunctor::product_left(A, std::move(mult), std::move(unit));
    std::shared_ptr<const Presheaf> Pc = P;
    l.psi = [Pc, A, a0](const FinSet& X, Elt alpha) { return Pc->mu(A, X, a0, alpha); };
    l.psi_desc = "mu(" + P->show(A, a0) + ", -)";
    return l;
}

void check_lift(EndoLift& lift, std::size_t max_obj, Report& rep, std::uint64_t mat_limit) {
    const Presheaf& P = *lift.P;
    auto objs = check_objects(max_obj);
    std::optional<Violation> vmono, vlax;
    bool strict = true;
    for (const auto& X : objs) {
        if (!usable(lift, X)) continue;
        auto cx = P.carrier(X);
        const FinSet FX = lift.F.on_obj(X);
        for (Elt a : cx)
            for (Elt b : cx)
                if (!vmono && P.leq(X, a, b) &&
                    !P.leq(FX, lift.psi(X, a), lift.psi(X, b)))
                    vmono = Violation{"family not monotone",
                                      "a=" + P.show(X, a) + ", b=" + P.show(X, b)};
        for (const auto& Y : objs) {
            if (!usable(lift, Y)) continue;
            const FinSet FY = lift.F.on_obj(Y);
            for (const auto& f : mats_within(X, Y, P.base(), mat_limit)) {
                QMat Ff = lift.F.on_mor(f);
                for (Elt a : cx) {
                    Elt lhs = P.apply(Ff, lift.psi(X, a));
                    Elt rhs = lift.psi(Y, P.apply(f, a));
                    if (!vlax && !P.leq(FY, lhs, rhs))
                        vlax = Violation{"lax naturality fails",
                                         "f=" + f.show() + ", a=" + P.show(X, a)};
                    if (lhs != rhs) strict = false;
                }
            }
        }
    }
    std::string budget = budget_str(max_obj);
    rep.law("lift.psi_monotone", "each component of the family is monotone", budget, vmono);
    rep.law("lift.psi_lax_natural", "lax naturality of the family", budget, vlax);
    lift.psi_natural = strict && !vlax;
    rep.pass("lift.psi_naturality_flag",
             lift.psi_natural ? "family detected natural (strict squares)"
                              : "family detected lax only",
             budget);
}

std::vector<Elt> q_nu(const EndoLift& lift, const Coalg& c) {
    require_coalg_shape(lift, c);
    const Presheaf& P = *lift.P;
    const FinSet FX = lift.F.on_obj(c.X);
    std::vector<Elt> out;
    for (Elt a : P.carrier(c.X))
        if (P.leq(FX, P.apply(c.gamma, a), lift.psi(c.X, a))) out.push_back(a);
    return out;
}

std::vector<Elt> q_mu(const EndoLift& lift, const Alg& a) {
    require_alg_shape(lift, a);
    const Presheaf& P = *lift.P;
    std::vector<Elt> out;
    for (Elt x : P.carrier(a.X))
        if (P.leq(a.X, P.apply(a.gamma, lift.psi(a.X, x)), x)) out.push_back(x);
    return out;
}

Elt q_mu_action(const EndoLift& lift, const Alg& src, const QMat& f, const Alg& dst,
                Elt alpha) {
    const Presheaf& P = *lift.P;
    Elt fa = P.apply(f, alpha);
    std::vector<Elt> above;
    for (Elt b : q_mu(lift, dst))
        if (P.leq(dst.X, fa, b)) above.push_back(b);
    return P.meet(dst.X, above);
}

void check_fixpoint_lattices(const EndoLift& lift, std::size_t max_obj, Report& rep,
                             std::uint64_t mat_limit) {
    const Presheaf& P = *lift.P;
    auto objs = check_objects(max_obj);
    std::optional<Violation> vjoin, vmeet, vrestrict;
    for (const auto& X : objs) {
        if (!usable(lift, X)) continue;
        const FinSet FX = lift.F.on_obj(X);
        for (const auto& g : mats_within(X, FX, P.base(), mat_limit)) {
            Coalg c{X, g};
            auto nu = q_nu(lift, c);
            auto in_nu = [&](Elt a) {
                return P.leq(FX, P.apply(g, a), lift.psi(X, a));
            };
            if (!vjoin && !in_nu(P.bot(X)))
                vjoin = Violation{"bottom escapes the post-fixed points", "gamma=" + g.show()};
            for (Elt a : nu)
                for (Elt b : nu)
                    if (!vjoin && !in_nu(P.join2(X, a, b)))
                        vjoin = Violation{"join escapes the post-fixed points",
                                          "gamma=" + g.show() + ", a=" + P.show(X, a) +
                                              ", b=" + P.show(X, b)};

            for (const auto& Y : objs) {
                if (!usable(lift, Y)) continue;
                const FinSet FY = lift.F.on_obj(Y);
                for (const auto& h : mats_within(Y, FY, P.base(), mat_limit)) {
                    Coalg d{Y, h};
                    for (const auto& f : mats_within(X, Y, P.base(), mat_limit)) {
                        if (!(g.then(lift.F.on_mor(f)) == f.then(h))) continue;
                        for (Elt a : nu) {
                            if (vrestrict) break;
                            Elt fa = P.apply(f, a);
                            if (!P.leq(FY, P.apply(h, fa), lift.psi(Y, fa)))
                                vrestrict = Violation{
                                    "image escapes the post-fixed points",
                                    "f=" + f.show() + ", a=" + P.show(X, a)};
                        }
                    }
                }
            }
        }
        for (const auto& g : mats_within(FX, X, P.base(), mat_limit)) {
            Alg al{X, g};
            auto mu = q_mu(lift, al);
            auto in_mu = [&](Elt a) {
                return P.leq(X, P.apply(g, lift.psi(X, a)), a);
            };
            if (!vmeet && !in_mu(P.top(X)))
                vmeet = Violation{"top escapes the pre-fixed points", "gamma=" + g.show()};
            for (Elt a : mu)
                for (Elt b : mu)
                    if (!vmeet && !in_mu(P.meet2(X, a, b)))
                        vmeet = Violation{"meet escapes the pre-fixed points",
                                          "gamma=" + g.show() + ", a=" + P.show(X, a) +
                                              ", b=" + P.show(X, b)};
        }
    }
    std::string budget = budget_str(max_obj);
    rep.law("fixpoint.nu_join_closed", "post-fixed points closed under joins", budget, vjoin);
    rep.law("fixpoint.nu_restriction", "morphism actions restrict to post-fixed points",
            budget, vrestrict);
    rep.law("fixpoint.mu_meet_closed", "pre-fixed points closed under meets", budget, vmeet);
}

void check_q_mu_duality(const EndoLift& lift, std::size_t max_obj, Report& rep,
                        std::uint64_t mat_limit) {
    const Presheaf& P = *lift.P;
    auto objs = check_objects(max_obj);
    std::optional<Violation> vset, vact;
    for (const auto& X : objs) {
        if (!usable(lift, X)) continue;
        const FinSet FX = lift.F.on_obj(X);
        for (const auto& g : mats_within(FX, X, P.base(), mat_limit)) {
            Alg src{X, g};
            auto direct = q_mu(lift, src);
            // Dual route: alpha is pre-fixed iff psi(alpha) lies below the
            // right adjoint of the structure action at alpha.
            std::vector<Elt> dual;
            for (Elt a : P.carrier(X))
                if (P.leq(FX, lift.psi(X, a), apply_right_adjoint(P, g, a)))
                    dual.push_back(a);
            if (!vset && direct != dual)
                vset = Violation{"the two pre-fixed computations disagree",
                                 "gamma=" + g.show() + ": " + std::to_string(direct.size()) +
                                     " vs " + std::to_string(dual.size()) + " elements"};

            for (const auto& Y : objs) {
                if (!usable(lift, Y)) continue;
                const FinSet FY = lift.F.on_obj(Y);
                for (const auto& h : mats_within(FY, Y, P.base(), mat_limit)) {
                    Alg dst{Y, h};
                    auto mu_dst = q_mu(lift, dst);
                    for (const auto& f : mats_within(X, Y, P.base(), mat_limit)) {
                        if (!(g.then(f) == lift.F.on_mor(f).then(h))) continue;
                        for (Elt a : direct) {
                            Elt act = q_mu_action(lift, src, f, dst, a);
                            for (Elt b : mu_dst) {
                                if (vact) break;
                                // Adjoint description of the action: going
                                // below b is deciding a against the right
                                // adjoint of Q(f) at b.
                                bool lhs = P.leq(Y, act, b);
                                bool rhs = P.leq(X, a, apply_right_adjoint(P, f, b));
                                if (lhs != rhs)
                                    vact = Violation{
                                        "functorial action disagrees with its adjoint form",
                                        "f=" + f.show() + ", a=" + P.show(X, a) +
                                            ", b=" + P.show(Y, b)};
                            }
                            if (!vact && lift.psi_natural && act != P.apply(f, a))
                                vact = Violation{
                                    "natural case: action is not plain restriction",
                                    "f=" + f.show() + ", a=" + P.show(X, a)};
                        }
                    }
                }
            }
        }
    }
    std::string budget = budget_str(max_obj);
    rep.law("fixpoint.mu_duality", "pre-fixed points via definition and via right adjoints",
            budget, vset);
    rep.law("fixpoint.mu_action_adjoint", "functorial action matches its adjoint description",
            budget, vact);
}

void enumerate_coalg_category(const EndoLift& lift, std::size_t max_obj, Report& rep,
                              std::uint64_t mat_limit) {
    const Presheaf& P = *lift.P;
    auto objs = check_objects(max_obj);
    std::optional<Violation> vobj, vmor;
    std::uint64_t n_obj = 0, n_mor = 0;

    struct Node {
        FinSet X;
        Elt alpha;
        QMat gamma;
    };
    std::vector<Node> nodes;
    for (const auto& X : objs) {
        if (!usable(lift, X)) continue;
        const FinSet FX = lift.F.on_obj(X);
        for (const auto& g : mats_within(X, FX, P.base(), mat_limit)) {
            // Independent routes: the hom condition of the structure map as
            // a morphism of the total category, against membership in the
            // post-fixed set.
            auto nu = q_nu(lift, Coalg{X, g});
            for (Elt a : P.carrier(X)) {
                bool lifted =
                    !is_morphism(P, TotalObj{X, a}, g, TotalObj{FX, lift.psi(X, a)});
                bool member = std::find(nu.begin(), nu.end(), a) != nu.end();
                if (!vobj && lifted != member)
                    vobj = Violation{"object sides disagree",
                                     "gamma=" + g.show() + ", alpha=" + P.show(X, a)};
                if (lifted) {
                    nodes.push_back(Node{X, a, g});
                    ++n_obj;
                }
            }
        }
    }
    for (const auto& s : nodes)
        for (const auto& t : nodes)
            for (const auto& f : mats_within(s.X, t.X, P.base(), mat_limit)) {
                bool coalg_mor = s.gamma.then(lift.F.on_mor(f)) == f.then(t.gamma);
                bool hom = !is_morphism(P, TotalObj{s.X, s.alpha}, f,
                                        TotalObj{t.X, t.alpha});
                // Lifted-side morphism: both conditions; section-side
                // morphism: base coalgebra morphism whose action carries the
                // source value below the target value.
                bool lifted_side = coalg_mor && hom;
                bool section_side =
                    coalg_mor && P.leq(t.X, P.apply(f, s.alpha), t.alpha);
                if (!vmor && lifted_side != section_side)
                    vmor = Violation{"morphism sides disagree", "f=" + f.show()};
                if (lifted_side) ++n_mor;
            }
    std::string budget = budget_str(max_obj) + " (" + std::to_string(n_obj) + " objects, " +
                         std::to_string(n_mor) + " morphisms)";
    rep.law("fixpoint.coalg_objects", "lifted coalgebras are the post-fixed sections", budget,
            vobj);
    rep.law("fixpoint.coalg_morphisms", "the two morphism descriptions coincide", budget,
            vmor);
}

LiftedFixpoint lift_terminal_coalgebra(const EndoLift& lift, const Coalg& nu,
                                       std::size_t max_obj, Report& rep,
                                       std::uint64_t mat_limit) {
    require_coalg_shape(lift, nu);
    if (!nu.gamma.is_struct_iso())
        throw StructureNotInvertible("terminal coalgebra structure must be invertible");
    const Presheaf& P = *lift.P;
    const FinSet X = nu.X;
    QMat chi_inv = nu.gamma.inverse();
    LiftedFixpoint out;
    out.chi = nu.gamma;
    Elt value = iterate_to_fixpoint(
        P, X, P.top(X),
        [&](Elt a) { return P.apply(chi_inv, lift.psi(X, a)); }, &out.iterations);
    out.obj = TotalObj{X, value};

    std::string budget = budget_str(max_obj) + " (iterations " +
                         std::to_string(out.iterations) + ")";
    std::optional<Violation> vgfp, vterm, vlambek;
    auto phi = [&](Elt a) { return P.apply(chi_inv, lift.psi(X, a)); };
    for (Elt a : P.carrier(X))
        if (!vgfp && phi(a) == a && !P.leq(X, a, value))
            vgfp = Violation{"a larger fixed point exists", P.show(X, a)};
    rep.law("fixpoint.gfp", "iteration from the top reaches the greatest fixed point",
            budget, vgfp);

    const FinSet FX = lift.F.on_obj(X);
    if (P.apply(nu.gamma, value) != lift.psi(X, value) || !nu.gamma.is_struct_iso())
        vlambek = Violation{"structure map is not an isomorphism at the fixed value",
                            P.show(FX, P.apply(nu.gamma, value))};
    rep.law("fixpoint.lambek", "lifted structure map is an isomorphism", budget, vlambek);

    auto objs = check_objects(max_obj);
    for (const auto& Y : objs) {
        if (!usable(lift, Y)) continue;
        const FinSet FY = lift.F.on_obj(Y);
        for (const auto& g : mats_within(Y, FY, P.base(), mat_limit))
            for (Elt b : P.carrier(Y)) {
                if (vterm) break;
                if (!P.leq(FY, P.apply(g, b), lift.psi(Y, b))) continue;
                std::size_t mediators = 0;
                for (const auto& f : mats_within(Y, X, P.base(), mat_limit))
                    if (g.then(lift.F.on_mor(f)) == f.then(nu.gamma) &&
                        P.leq(X, P.apply(f, b), value))
                        ++mediators;
                if (mediators != 1)
                    vterm = Violation{"mediating morphism not unique",
                                      "gamma=" + g.show() + ", alpha=" + P.show(Y, b) +
                                          ": " + std::to_string(mediators) + " mediators"};
            }
    }
    rep.law("fixpoint.terminal", "every lifted coalgebra has a unique map to the lift",
            budget, vterm);
    return out;
}

LiftedFixpoint lift_initial_algebra(const EndoLift& lift, const Alg& mu, std::size_t max_obj,
                                    Report& rep, std::uint64_t mat_limit) {
    require_alg_shape(lift, mu);
    if (!lift.psi_natural)
        throw PsiNotNatural("initial algebra lifting needs a natural family");
    if (!mu.gamma.is_struct_iso())
        throw StructureNotInvertible("initial algebra structure must be invertible");
    const Presheaf& P = *lift.P;
    const FinSet X = mu.X;
    LiftedFixpoint out;
    out.chi = mu.gamma;
    Elt value = iterate_to_fixpoint(
        P, X, P.bot(X), [&](Elt a) { return P.apply(mu.gamma, lift.psi(X, a)); },
        &out.iterations);
    out.obj = TotalObj{X, value};

    std::string budget = budget_str(max_obj) + " (iterations " +
                         std::to_string(out.iterations) + ")";
    std::optional<Violation> vlfp, vinit;
    for (Elt a : P.carrier(X))
        if (!vlfp && P.apply(mu.gamma, lift.psi(X, a)) == a && !P.leq(X, value, a))
            vlfp = Violation{"a smaller fixed point exists", P.show(X, a)};
    rep.law("fixpoint.lfp", "iteration from the bottom reaches the least fixed point",
            budget, vlfp);

    auto objs = check_objects(max_obj);
    for (const auto& Y : objs) {
        if (!usable(lift, Y)) continue;
        const FinSet FY = lift.F.on_obj(Y);
        for (const auto& d : mats_within(FY, Y, P.base(), mat_limit))
            for (Elt b : P.carrier(Y)) {
                if (vinit) break;
                if (!P.leq(Y, P.apply(d, lift.psi(Y, b)), b)) continue;
                std::size_t mediators = 0;
                for (const auto& f : mats_within(X, Y, P.base(), mat_limit))
                    if (mu.gamma.then(f) == lift.F.on_mor(f).then(d) &&
                        P.leq(Y, P.apply(f, value), b))
                        ++mediators;
                if (mediators != 1)
                    vinit = Violation{"mediating morphism not unique",
                                      "delta=" + d.show() + ", beta=" + P.show(Y, b) + ": " +
                                          std::to_string(mediators) + " mediators"};
            }
    }
    rep.law("fixpoint.initial", "every lifted algebra receives a unique map from the lift",
            budget, vinit);
    return out;
}

}  // namespace liftq
