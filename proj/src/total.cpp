#include "liftq/total.hpp"

namespace liftq {

namespace {

const FinSet& unit_obj() {
    static const FinSet I = FinSet::singleton();
    return I;
}

std::vector<QMat> mats_within(const FinSet& X, const FinSet& Y, const FinQuantale* q,
                              std::uint64_t limit) {
    try {
        return all_mats(X, Y, q, limit);
    } catch (const CarrierTooLarge&) {
        return {};
    }
}

bool enumerable(const Presheaf& P, const FinSet& X) {
    if (!P.supports(X)) return false;
    try {
        return P.carrier_size(X) <= P.enum_budget();
    } catch (const CarrierTooLarge&) {
        return false;
    }
}

std::string obj_budget(std::size_t max_obj) {
    return "objects of size <= " + std::to_string(max_obj) + ", all carrier elements";
}

std::string obj_budget(std::size_t max_obj, std::uint64_t mat_limit) {
    return "objects of size <= " + std::to_string(max_obj) + ", hom-sets of size <= " +
           std::to_string(mat_limit) + ", all carrier elements";
}

}  // namespace

std::optional<Violation> is_morphism(const Presheaf& P, const TotalObj& src, const QMat& f,
                                     const TotalObj& dst) {
    if (f.dom().size != src.X.size || f.cod().size != dst.X.size)
        throw ShapeMismatch("is_morphism: endpoint mismatch");
    Elt image = P.apply(f, src.alpha);
    if (P.leq(dst.X, image, dst.alpha)) return std::nullopt;
    return Violation{"hom condition fails",
                     P.show(dst.X, image) + " is not below " + P.show(dst.X, dst.alpha)};
}

std::optional<Violation> is_iso_morphism(const Presheaf& P, const TotalObj& src, const QMat& f,
                                         const TotalObj& dst) {
    if (!f.is_struct_iso()) return Violation{"not invertible in the base", f.show()};
    Elt image = P.apply(f, src.alpha);
    if (image == dst.alpha) return std::nullopt;
    return Violation{"image differs from target",
                     P.show(dst.X, image) + " != " + P.show(dst.X, dst.alpha)};
}

TotalObj lifted_tensor(const Presheaf& P, const TotalObj& a, const TotalObj& b) {
    return TotalObj{FinSet::product(a.X, b.X), P.mu(a.X, b.X, a.alpha, b.alpha)};
}

TotalObj lifted_unit(const Presheaf& P) { return TotalObj{unit_obj(), P.unit_elt()}; }

Elt pairing_oracle(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt beta) {
    return P.apply(ev_relation(X, Y, P.base()), P.mu(X, hom_obj(X, Y), alpha, beta));
}

Elt pairing(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt beta) {
    if (auto c = P.pairing_closed(X, Y, alpha, beta)) return *c;
    return pairing_oracle(P, X, Y, alpha, beta);
}

Elt iota_oracle(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt gamma) {
    const FinSet H = hom_obj(X, Y);
    Elt acc = P.bot(H);
    for (Elt beta : P.carrier(H))
        if (P.leq(Y, pairing(P, X, Y, alpha, beta), gamma)) acc = P.join2(H, acc, beta);
    return acc;
}

Elt iota(const Presheaf& P, const FinSet& X, const FinSet& Y, Elt alpha, Elt gamma) {
    if (auto c = P.iota_closed(X, Y, alpha, gamma)) return *c;
    return iota_oracle(P, X, Y, alpha, gamma);
}

Elt omega_map(const Presheaf& P, const DualCandidate& d, const FinSet& X, Elt alpha) {
    return iota(P, X, unit_obj(), alpha, d.omega);
}

Elt lneg(const Presheaf& P, const DualCandidate& d, const FinSet& X, Elt beta) {
    Elt acc = P.bot(X);
    for (Elt alpha : P.carrier(X))
        if (P.leq(unit_obj(), pairing(P, X, unit_obj(), alpha, beta), d.omega))
            acc = P.join2(X, acc, alpha);
    return acc;
}

QMat curry_mor(const FinSet& X, const FinSet& Y, const QMat& f) {
    return eta_relation(X, Y, f.quantale_ptr())
        .then(QMat::identity(X, f.quantale_ptr()).internal_hom(f));
}

QMat uncurry_mor(const FinSet& X, const FinSet& Z, const QMat& g) {
    return QMat::identity(X, g.quantale_ptr())
        .tensor(g)
        .then(ev_relation(X, Z, g.quantale_ptr()));
}

void check_total_basics(const Presheaf& P, std::size_t max_obj, Report& rep,
                        std::uint64_t mat_limit) {
    auto objs = check_objects(max_obj);
    const TotalObj I = lifted_unit(P);
    std::optional<Violation> viso, vcomp;
    for (const auto& X : objs) {
        if (!enumerable(P, X) || !P.supports(FinSet::product(unit_obj(), X))) continue;
        auto lu = structural(StructKind::left_unitor, {X}, P.base());
        auto ru = structural(StructKind::right_unitor, {X}, P.base());
        for (Elt a : P.carrier(X)) {
            TotalObj A{X, a};
            if (!viso)
                if (auto v = is_iso_morphism(P, lifted_tensor(P, I, A), lu, A))
                    viso = Violation{"left unitor: " + v->law, v->witness};
            if (!viso)
                if (auto v = is_iso_morphism(P, lifted_tensor(P, A, I), ru, A))
                    viso = Violation{"right unitor: " + v->law, v->witness};
        }
        for (const auto& Y : objs) {
            if (!enumerable(P, Y) || !P.supports(FinSet::product(X, Y))) continue;
            auto sym = structural(StructKind::symmetry, {X, Y}, P.base());
            for (Elt a : P.carrier(X))
                for (Elt b : P.carrier(Y)) {
                    TotalObj A{X, a}, B{Y, b};
                    if (!viso)
                        if (auto v = is_iso_morphism(P, lifted_tensor(P, A, B), sym,
                                                     lifted_tensor(P, B, A)))
                            viso = Violation{"symmetry: " + v->law, v->witness};
                }
            // Hom conditions compose: with beta = Q(f)(a), gamma = Q(g)(beta)
            // both squares hold by construction, so f;g must be a morphism.
            for (const auto& Z : objs) {
                if (!P.supports(Z)) continue;
                for (const auto& f : mats_within(X, Y, P.base(), mat_limit))
                    for (const auto& g : mats_within(Y, Z, P.base(), mat_limit))
                        for (Elt a : P.carrier(X)) {
                            if (vcomp) break;
                            TotalObj A{X, a};
                            TotalObj B{Y, P.apply(f, a)};
                            TotalObj C{Z, P.apply(g, B.alpha)};
                            if (auto v = is_morphism(P, A, f.then(g), C))
                                vcomp = Violation{"composite breaks hom condition: " + v->law,
                                                  "f=" + f.show() + ", g=" + g.show() +
                                                      ", alpha=" + P.show(X, a)};
                        }
            }
        }
    }
    rep.law("total.structural_isos", "lifted structural maps are isomorphisms",
            obj_budget(max_obj), viso);
    rep.law("total.hom_composition", "hom condition closed under composition",
            obj_budget(max_obj, mat_limit), vcomp);
}

void check_closed_structure(const Presheaf& P, std::size_t max_obj, Report& rep,
                            std::uint64_t mat_limit) {
    auto objs = check_objects(max_obj);
    const FinSet I = unit_obj();
    bool has_closed = false, has_pairing_closed = false;
    std::optional<Violation> vcf, vpcf, vadj, vunit, vcounit, vmudef, vcurry, vinv;
    for (const auto& X : objs) {
        if (!enumerable(P, X)) continue;
        auto cx = P.carrier(X);
        for (const auto& Y : objs) {
            const FinSet H = hom_obj(X, Y);
            if (!enumerable(P, Y) || !enumerable(P, H)) continue;
            auto cy = P.carrier(Y);
            auto ch = P.carrier(H);
            for (Elt a : cx)
                for (Elt g : cy) {
                    Elt oracle = iota_oracle(P, X, Y, a, g);
                    if (auto c = P.iota_closed(X, Y, a, g)) {
                        has_closed = true;
                        if (!vcf && *c != oracle)
                            vcf = Violation{"closed form disagrees with oracle",
                                            "alpha=" + P.show(X, a) + ", gamma=" + P.show(Y, g) +
                                                ": " + P.show(H, *c) + " vs " +
                                                P.show(H, oracle)};
                    }
                    for (Elt b : ch) {
                        if (auto pc = P.pairing_closed(X, Y, a, b)) {
                            has_pairing_closed = true;
                            if (!vpcf && *pc != pairing_oracle(P, X, Y, a, b))
                                vpcf = Violation{
                                    "closed pairing disagrees with the composite",
                                    "alpha=" + P.show(X, a) + ", beta=" + P.show(H, b)};
                        }
                        if (!vadj && (P.leq(Y, pairing(P, X, Y, a, b), g) !=
                                      P.leq(H, b, oracle)))
                            vadj = Violation{"adjunction fails",
                                             "alpha=" + P.show(X, a) + ", beta=" + P.show(H, b) +
                                                 ", gamma=" + P.show(Y, g)};
                    }
                    if (!vcounit && !P.leq(Y, pairing(P, X, Y, a, oracle), g))
                        vcounit = Violation{"counit inequality fails",
                                            "alpha=" + P.show(X, a) + ", gamma=" + P.show(Y, g)};
                }
            const FinSet XY = FinSet::product(X, Y);
            const FinSet HXY = hom_obj(X, XY);
            if (P.supports(XY) && P.supports(HXY)) {
                bool hxy_ok = enumerable(P, HXY) ||
                              P.iota_closed(X, XY, P.bot(X), P.bot(XY)).has_value();
                auto eta = eta_relation(X, Y, P.base());
                for (Elt a : cx)
                    for (Elt b : cy) {
                        Elt m = P.mu(X, Y, a, b);
                        if (hxy_ok && !vunit &&
                            !P.leq(HXY, P.apply(eta, b), iota(P, X, XY, a, m)))
                            vunit = Violation{"unit inequality fails",
                                              "x=" + P.show(X, a) + ", y=" + P.show(Y, b)};
                        if (!vmudef && m != pairing(P, X, XY, a, P.apply(eta, b)))
                            vmudef = Violation{"mu not definable from pairing",
                                               "x=" + P.show(X, a) + ", y=" + P.show(Y, b)};
                    }
            }
            // Curry bijection between hom(X (x) Y, Z) and hom(Y, X -o Z).
            for (const auto& Z : objs) {
                const FinSet HXZ = hom_obj(X, Z);
                if (!enumerable(P, Z) || !enumerable(P, HXZ) || !P.supports(XY)) continue;
                auto cz = P.carrier(Z);
                for (const auto& f : mats_within(XY, Z, P.base(), mat_limit)) {
                    QMat cf = curry_mor(X, Y, f);
                    if (!vcurry && !(uncurry_mor(X, Z, cf) == f)) {
                        vcurry = Violation{"uncurry(curry(f)) != f", "f=" + f.show()};
                        break;
                    }
                    for (Elt a : cx)
                        for (Elt b : cy) {
                            if (vcurry) break;
                            Elt m = P.mu(X, Y, a, b);
                            for (Elt g : cz) {
                                bool lhs = P.leq(Z, P.apply(f, m), g);
                                bool rhs =
                                    P.leq(HXZ, P.apply(cf, b), iota(P, X, Z, a, g));
                                if (lhs != rhs) {
                                    vcurry = Violation{
                                        "morphism transposition fails",
                                        "f=" + f.show() + ", alpha=" + P.show(X, a) +
                                            ", beta=" + P.show(Y, b) +
                                            ", gamma=" + P.show(Z, g)};
                                    break;
                                }
                            }
                        }
                }
                for (const auto& g : mats_within(Y, HXZ, P.base(), mat_limit)) {
                    if (vcurry) break;
                    if (!(curry_mor(X, Y, uncurry_mor(X, Z, g)) == g))
                        vcurry = Violation{"curry(uncurry(g)) != g", "g=" + g.show()};
                }
                // iota along invertible maps: iota(Q(f)(a), g) is the
                // transport of iota(a, g) along f^{-1} -o id.
                for (const auto& f : all_iso_mats(X, Y, P.base())) {
                    if (vinv) break;
                    auto transport = f.inverse().internal_hom(QMat::identity(Z, P.base()));
                    const FinSet HYZ = hom_obj(Y, Z);
                    if (!P.supports(HYZ)) break;
                    for (Elt a : cx)
                        for (Elt g : cz)
                            if (!vinv && iota(P, Y, Z, P.apply(f, a), g) !=
                                             P.apply(transport, iota(P, X, Z, a, g)))
                                vinv = Violation{"invertible naturality fails",
                                                 "f=" + f.show() + ", alpha=" + P.show(X, a) +
                                                     ", gamma=" + P.show(Z, g)};
                }
            }
        }
    }
    std::string budget = obj_budget(max_obj, mat_limit);
    if (has_closed) rep.law("total.iota_closed_form", "closed form matches oracle", budget, vcf);
    if (has_pairing_closed)
        rep.law("total.pairing_closed_form", "closed pairing matches the composite", budget,
                vpcf);
    rep.law("total.adjunction", "pairing and internal hom adjoint", budget, vadj);
    rep.law("total.unit_ineq", "unit of the adjunction is a morphism", budget, vunit);
    rep.law("total.counit_ineq", "evaluation is a morphism", budget, vcounit);
    rep.law("total.mu_definable", "pairing recovers the monoidal structure", budget, vmudef);
    rep.law("total.curry_bijection", "currying is a hom-set bijection", budget, vcurry);
    rep.law("total.iota_invertible_naturality", "internal hom transports along isos", budget,
            vinv);
}

void check_iota_lax(const Presheaf& P, std::size_t max_obj, Report& rep,
                    std::uint64_t mat_limit) {
    auto objs = check_objects(max_obj);
    std::optional<Violation> vlax, vadj;
    for (const auto& X : objs)
        for (const auto& X2 : objs)
            for (const auto& Y : objs)
                for (const auto& Y2 : objs) {
                    const FinSet H2 = hom_obj(X2, Y);   // X' -o Y
                    const FinSet H1 = hom_obj(X, Y2);   // X -o Y'
                    if (!enumerable(P, X) || !enumerable(P, Y) || !P.supports(X2) ||
                        !P.supports(Y2) || !enumerable(P, H2) || !enumerable(P, H1))
                        continue;
                    auto cx = P.carrier(X);
                    auto cy = P.carrier(Y);
                    for (const auto& f : mats_within(X, X2, P.base(), mat_limit))
                        for (const auto& g : mats_within(Y, Y2, P.base(), mat_limit)) {
                            if (vlax && vadj) break;
                            auto fg = f.internal_hom(g);
                            for (Elt a : cx)
                                for (Elt b : cy) {
                                    Elt lower =
                                        P.apply(fg, iota(P, X2, Y, P.apply(f, a), b));
                                    Elt upper = iota(P, X, Y2, a, P.apply(g, b));
                                    if (!vlax && !P.leq(H1, lower, upper))
                                        vlax = Violation{"semi-commutativity fails",
                                                         "f=" + f.show() + ", g=" + g.show() +
                                                             ", alpha=" + P.show(X, a) +
                                                             ", beta=" + P.show(Y, b)};
                                    // Transposed form along the right adjoint of
                                    // the transport map.
                                    if (!vadj) {
                                        Elt ra = P.bot(H2);
                                        for (Elt c : P.carrier(H2))
                                            if (P.leq(H1, P.apply(fg, c), upper))
                                                ra = P.join2(H2, ra, c);
                                        if (!P.leq(H2, iota(P, X2, Y, P.apply(f, a), b), ra))
                                            vadj = Violation{
                                                "adjoint-transposed square fails",
                                                "f=" + f.show() + ", g=" + g.show() +
                                                    ", alpha=" + P.show(X, a) +
                                                    ", beta=" + P.show(Y, b)};
                                    }
                                }
                        }
                }
    std::string budget = obj_budget(max_obj, mat_limit);
    rep.law("total.iota_lax", "internal hom family is lax extranatural", budget, vlax);
    rep.law("total.iota_lax_transposed", "transposed extranaturality square", budget, vadj);
}

bool check_dualizing(const Presheaf& P, const DualCandidate& d, std::size_t max_obj,
                     Report& rep) {
    auto objs = check_objects(max_obj);
    const FinSet I = unit_obj();
    std::optional<Violation> va, vb, vagree, vgalois, vrecover;
    bool a_holds = true;
    for (const auto& X : objs) {
        const FinSet Xs = dual_obj(X);
        const FinSet Xss = dual_obj(Xs);
        if (!enumerable(P, X) || !enumerable(P, Xs) || !P.supports(Xss)) continue;
        auto cx = P.carrier(X);
        auto cs = P.carrier(Xs);
        auto jx = structural(StructKind::double_dual_j, {X}, P.base());

        bool A = true, B = true;
        std::string wa, wb;
        for (Elt a : cx) {
            Elt w = omega_map(P, d, X, a);
            if (lneg(P, d, X, w) != a) {
                if (A) wa = "alpha=" + P.show(X, a) + ", double negation gives " +
                            P.show(X, lneg(P, d, X, w));
                A = false;
            }
            Elt lhs = P.apply(jx, a);
            Elt rhs = omega_map(P, d, Xs, w);
            if (lhs != rhs) {
                if (B) wb = "alpha=" + P.show(X, a) + ": " + P.show(Xss, lhs) + " vs " +
                            P.show(Xss, rhs);
                B = false;
            }
        }
        for (Elt b : cs) {
            Elt n = lneg(P, d, X, b);
            if (omega_map(P, d, X, n) != b) {
                if (A) wa = "beta=" + P.show(Xs, b) + ", round trip gives " +
                            P.show(Xs, omega_map(P, d, X, n));
                A = false;
            }
            for (Elt a : cx) {
                bool pair_ok = P.leq(I, pairing(P, X, I, a, b), d.omega);
                if (!vgalois && ((P.leq(X, a, n) != pair_ok) ||
                                 (pair_ok != P.leq(Xs, b, omega_map(P, d, X, a)))))
                    vgalois = Violation{"Galois chain broken",
                                        "alpha=" + P.show(X, a) + ", beta=" + P.show(Xs, b)};
            }
            if (!vrecover && !P.leq(I, pairing(P, X, I, n, b), d.omega))
                vrecover = Violation{"counit of the connection fails",
                                     "beta=" + P.show(Xs, b)};
        }
        if (!A && !va) va = Violation{"|X|=" + std::to_string(X.size), wa};
        if (!B && !vb) vb = Violation{"|X|=" + std::to_string(X.size), wb};
        if (A != B && !vagree)
            vagree = Violation{"criteria disagree", "|X|=" + std::to_string(X.size) +
                                                        ": inverse=" + (A ? "yes" : "no") +
                                                        ", double dual=" + (B ? "yes" : "no")};
        a_holds = a_holds && A;
    }
    std::string budget = obj_budget(max_obj);
    rep.law("total.galois_connection", "negation triple equivalence", budget, vgalois);
    rep.law("total.galois_counit", "negation below the dual candidate", budget, vrecover);
    rep.law("total.dualizing_inverse", "double negation is the identity", budget, va);
    rep.law("total.dualizing_double_dual", "double dual computes double negation", budget, vb);
    rep.law("total.dualizing_criteria_agree", "invertibility and double dual criteria agree",
            budget, vagree);
    return a_holds;
}

void pairing_twist_check(const Presheaf& P, const DualCandidate& d, std::size_t max_obj,
                         Report& rep) {
    auto objs = check_objects(max_obj);
    const FinSet I = unit_obj();
    std::optional<Violation> vtwist;
    for (const auto& X : objs) {
        const FinSet Xs = dual_obj(X);
        if (!enumerable(P, X) || !enumerable(P, Xs) || !P.supports(dual_obj(Xs))) continue;
        auto jx = structural(StructKind::double_dual_j, {X}, P.base());
        for (Elt a : P.carrier(X))
            for (Elt b : P.carrier(Xs))
                if (!vtwist && pairing(P, X, I, a, b) !=
                                   pairing(P, Xs, I, b, P.apply(jx, a)))
                    vtwist = Violation{"twist identity fails",
                                       "alpha=" + P.show(X, a) + ", beta=" + P.show(Xs, b)};
    }
    rep.law("total.pairing_twist", "pairing against the double dual", obj_budget(max_obj),
            vtwist);
}

}  // namespace liftq
