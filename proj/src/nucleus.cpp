#include "liftq/nucleus.hpp"

#include <algorithm>

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

std::string obj_budget(std::size_t max_obj) {
    return "objects of size <= " + std::to_string(max_obj) + ", all carrier elements";
}

}  // namespace

Elt NucleusFamily::jmath(const FinSet& X, Elt a) const {
    auto key = std::make_pair(X.size, a);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Elt r = lneg(*p_, d_, X, omega_map(*p_, d_, X, a));
    memo_.emplace(key, r);
    return r;
}

bool NucleusFamily::supports(const FinSet& X) const {
    const FinSet Xs = dual_obj(X);
    // Negations enumerate Q(X) and Q(X*) and pair through X (x) X*.
    return enumerable(*p_, X) && enumerable(*p_, Xs) &&
           p_->supports(FinSet::product(X, Xs));
}

void check_nucleus_laws(const NucleusFamily& fam, std::size_t max_obj, Report& rep,
                        std::uint64_t mat_limit) {
    const Presheaf& P = fam.presheaf();
    const DualCandidate d = fam.dual();
    auto objs = check_objects(max_obj);
    const FinSet I = FinSet::singleton();
    std::optional<Violation> vclose, vquot, vfirst, vmain, vdouble, vimpl, vfix;

    if (fam.supports(I) && fam.jmath(I, d.omega) != d.omega)
        vfix = Violation{"dual candidate not fixed", P.show(I, d.omega)};

    for (const auto& X : objs) {
        if (!fam.supports(X)) continue;
        auto cx = P.carrier(X);
        const FinSet Xs = dual_obj(X);
        bool dual_ok = fam.supports(Xs);

        // Closure laws of j_X, and fixedness of negation images.
        for (Elt a : cx) {
            Elt ja = fam.jmath(X, a);
            if (!vclose && !P.leq(X, a, ja))
                vclose = Violation{"not inflationary", "alpha=" + P.show(X, a)};
            if (!vclose && fam.jmath(X, ja) != ja)
                vclose = Violation{"not idempotent", "alpha=" + P.show(X, a)};
            for (Elt b : cx)
                if (!vclose && P.leq(X, a, b) && !P.leq(X, fam.jmath(X, a), fam.jmath(X, b)))
                    vclose = Violation{"not monotone",
                                       "alpha=" + P.show(X, a) + ", beta=" + P.show(X, b)};
            if (!vfix && dual_ok) {
                Elt w = omega_map(P, d, X, a);
                if (fam.jmath(Xs, w) != w)
                    vfix = Violation{"negation image not fixed", "alpha=" + P.show(X, a)};
            }
        }

        for (const auto& Y : objs) {
            if (!fam.supports(Y)) continue;
            auto cy = P.carrier(Y);

            // j(Q(f)(j(a))) = j(Q(f)(a)).
            for (const auto& f : mats_within(X, Y, P.base(), mat_limit))
                for (Elt a : cx) {
                    if (vquot) break;
                    if (fam.jmath(Y, P.apply(f, fam.jmath(X, a))) !=
                        fam.jmath(Y, P.apply(f, a)))
                        vquot = Violation{"quotient equality fails",
                                          "f=" + f.show() + ", alpha=" + P.show(X, a)};
                }

            const FinSet XY = FinSet::product(X, Y);
            if (fam.supports(XY)) {
                for (Elt a : cx)
                    for (Elt b : cy) {
                        Elt m = P.mu(X, Y, a, b);
                        Elt jm = fam.jmath(XY, m);
                        if (!vfirst && !P.leq(XY, P.mu(X, Y, fam.jmath(X, a), b), jm))
                            vfirst = Violation{"nucleus inequality fails",
                                               "alpha=" + P.show(X, a) +
                                                   ", beta=" + P.show(Y, b)};
                        if (!vmain &&
                            fam.jmath(XY, P.mu(X, Y, fam.jmath(X, a), fam.jmath(Y, b))) != jm)
                            vmain = Violation{"two-sided consequence fails",
                                              "alpha=" + P.show(X, a) +
                                                  ", beta=" + P.show(Y, b)};
                    }
            }

            // <mu(a,b), c> = <a, <b, Q(psi)(c)>> with the hom target the unit
            // object, psi the curry iso.
            const FinSet HXY = hom_obj(XY, I);
            const FinSet HXI = hom_obj(X, I);
            const FinSet HYH = hom_obj(Y, HXI);
            if (P.supports(XY) && enumerable(P, HXY) && P.supports(HYH) &&
                P.supports(FinSet::product(XY, HXY)) &&
                P.supports(FinSet::product(Y, HYH)) &&
                P.supports(FinSet::product(X, HXI))) {
                auto psi = structural(StructKind::curry_iso, {X, Y, I}, P.base());
                for (Elt a : cx)
                    for (Elt b : cy)
                        for (Elt c : P.carrier(HXY)) {
                            if (vdouble) break;
                            Elt lhs = pairing(P, XY, I, P.mu(X, Y, a, b), c);
                            Elt inner = pairing(P, Y, HXI, b, P.apply(psi, c));
                            Elt rhs = pairing(P, X, I, a, inner);
                            if (lhs != rhs)
                                vdouble = Violation{
                                    "curried pairing identity fails",
                                    "alpha=" + P.show(X, a) + ", beta=" + P.show(Y, b) +
                                        ", gamma=" + P.show(HXY, c)};
                        }
            }

            // j(iota(a,b)) <= iota(j(a), j(b)).
            const FinSet H = hom_obj(X, Y);
            if (fam.supports(H) && P.supports(FinSet::product(X, H))) {
                for (Elt a : cx)
                    for (Elt b : cy) {
                        if (vimpl) break;
                        Elt i = iota(P, X, Y, a, b);
                        if (!P.leq(H, fam.jmath(H, i),
                                   iota(P, X, Y, fam.jmath(X, a), fam.jmath(Y, b))))
                            vimpl = Violation{"internal hom laxity fails",
                                              "alpha=" + P.show(X, a) +
                                                  ", beta=" + P.show(Y, b)};
                    }
            }
        }
    }
    std::string budget = obj_budget(max_obj);
    rep.law("nucleus.closure", "closure operator laws per object", budget, vclose);
    rep.law("nucleus.quotient", "closure absorbs into morphism actions", budget, vquot);
    rep.law("nucleus.mu_nucleus", "closure family is a nucleus for the pairing", budget,
            vfirst);
    rep.law("nucleus.mu_two_sided", "closing both arguments changes nothing", budget, vmain);
    rep.law("nucleus.curried_pairing", "pairing factors through currying", budget, vdouble);
    rep.law("nucleus.iota_lax", "internal hom respects the closure laxly", budget, vimpl);
    rep.law("nucleus.fixed_images", "negation images and dual candidate are fixed", budget,
            vfix);
}

std::uint64_t QjPresheaf::carrier_size(const FinSet& X) const {
    std::uint64_t n = 0;
    for (Elt a : fam_.presheaf().carrier(X))
        if (fam_.jmath(X, a) == a) ++n;
    return n;
}

std::optional<Elt> QjPresheaf::next(const FinSet& X, std::optional<Elt> prev) const {
    const Presheaf& P = fam_.presheaf();
    bool passed = !prev.has_value();
    for (Elt a : P.carrier(X)) {
        if (!passed) {
            if (a == *prev) passed = true;
            continue;
        }
        if (fam_.jmath(X, a) == a) return a;
    }
    return std::nullopt;
}

std::shared_ptr<QjPresheaf> build_qj(NucleusFamily fam, std::size_t max_obj,
                                     std::uint64_t mat_limit) {
    auto qj = std::make_shared<QjPresheaf>(std::move(fam));
    Report rep;
    rep.command = "build " + qj->name();
    check_functoriality(*qj, max_obj, rep, mat_limit);
    check_sup_preservation(*qj, max_obj, rep, mat_limit);
    check_mu_laws(*qj, max_obj, rep, mat_limit);
    check_coherence(*qj, max_obj, rep);
    check_dualizing(*qj, qj->family().dual(), max_obj, rep);
    for (const auto& v : rep.verdicts)
        if (!v.pass)
            throw InternalLawViolation("law violated while building " + qj->name() + ": " +
                                       v.law + " at " + v.witness);
    return qj;
}

void girard_consistency_check(const QjPresheaf& qj, const FinQuantale& q, Elt omega,
                              Report& rep) {
    const FinSet one = FinSet::singleton();
    auto fixed = qj.carrier(one);
    auto gir = girard_quotient(q, omega);
    std::optional<Violation> v;

    std::vector<Elt> expect = gir.embedding;
    std::vector<Elt> got = fixed;
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got) {
        std::string w = "{";
        for (Elt a : got) w += q.label(a) + " ";
        v = Violation{"fixed points differ from the quantale quotient", w + "}"};
    }
    if (!v) {
        auto index_of = [&](Elt parent) {
            return static_cast<Elt>(
                std::find(gir.embedding.begin(), gir.embedding.end(), parent) -
                gir.embedding.begin());
        };
        for (Elt a : fixed)
            for (Elt b : fixed) {
                // The tensor square of the one-point object is again the
                // one-point object, so the quotient pairing is directly the
                // quotient multiplication.
                Elt prod = qj.mu(one, one, a, b);
                Elt want = gir.embedding[gir.quotient.mult(index_of(a), index_of(b))];
                if (!v && prod != want)
                    v = Violation{"multiplication disagrees with the quantale quotient",
                                  q.label(a) + " * " + q.label(b) + ": " + q.label(prod) +
                                      " vs " + q.label(want)};
            }
        Elt u = qj.unit_elt();
        if (!v && u != gir.embedding[gir.quotient.unit()])
            v = Violation{"unit disagrees with the quantale quotient", q.label(u)};
    }
    rep.law("nucleus.girard_consistency", "one-point quotient is the quantale quotient",
            "the full one-point carrier", v);
}

const std::vector<Elt>& PUQPresheaf::points(const FinSet& X) const {
    auto it = pts_.find(X.size);
    if (it != pts_.end()) return it->second;
    auto car = inner_->carrier(X);
    if (car.size() > 20)
        throw CarrierTooLarge("subset presheaf over a carrier of size " +
                              std::to_string(car.size()));
    return pts_.emplace(X.size, std::move(car)).first->second;
}

std::size_t PUQPresheaf::index_of(const FinSet& X, Elt v) const {
    const auto& p = points(X);
    auto it = std::find(p.begin(), p.end(), v);
    if (it == p.end()) throw InternalLawViolation("element escaped its carrier");
    return static_cast<std::size_t>(it - p.begin());
}

bool PUQPresheaf::supports(const FinSet& X) const {
    if (!inner_->supports(X)) return false;
    try {
        return inner_->carrier_size(X) <= 20 &&
               inner_->carrier_size(X) <= inner_->enum_budget();
    } catch (const CarrierTooLarge&) {
        return false;
    }
}

Elt PUQPresheaf::apply(const QMat& f, Elt a) const {
    const auto& dom = points(f.dom());
    Elt out = 0;
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (a & (Elt{1} << i))
            out |= Elt{1} << index_of(f.cod(), inner_->apply(f, dom[i]));
    return out;
}

Elt PUQPresheaf::unit_elt() const {
    const FinSet I = FinSet::singleton();
    return Elt{1} << index_of(I, inner_->unit_elt());
}

Elt PUQPresheaf::mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const {
    const auto& px = points(X);
    const auto& py = points(Y);
    const FinSet XY = FinSet::product(X, Y);
    Elt out = 0;
    for (std::size_t i = 0; i < px.size(); ++i) {
        if (!(a & (Elt{1} << i))) continue;
        for (std::size_t k = 0; k < py.size(); ++k)
            if (b & (Elt{1} << k))
                out |= Elt{1} << index_of(XY, inner_->mu(X, Y, px[i], py[k]));
    }
    return out;
}

std::string PUQPresheaf::show(const FinSet& X, Elt a) const {
    const auto& p = points(X);
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(a & (Elt{1} << i))) continue;
        if (!first) out += ",";
        first = false;
        out += inner_->show(X, p[i]);
    }
    return out + "}";
}

Elt PUQPresheaf::encode_set(const FinSet& X, const std::vector<Elt>& elems) const {
    Elt out = 0;
    for (Elt v : elems) out |= Elt{1} << index_of(X, v);
    return out;
}

Elt PUQPresheaf::down_set(const FinSet& X, Elt alpha) const {
    const auto& p = points(X);
    Elt out = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (inner_->leq(X, p[i], alpha)) out |= Elt{1} << i;
    return out;
}

void representation_check(std::shared_ptr<const Presheaf> inner, const DualCandidate& d,
                          std::size_t max_obj, Report& rep, std::uint64_t mat_limit) {
    auto puq = std::make_shared<PUQPresheaf>(inner);
    const FinSet I = FinSet::singleton();
    auto objs = check_objects(max_obj);
    std::optional<Violation> vfixed, viso, vnat;

    // Double negation on subsets reduces to pairings of single elements:
    // the pairing of two subsets lands below the dual candidate iff every
    // cross pairing of members does. The closure is then the double
    // orthogonal of that relation, never materializing subset carriers of
    // intermediate tensor objects.
    struct Tbl {
        std::vector<Elt> px;   // inner carrier in point order
        std::vector<Elt> row;  // bit k set iff <px[i], dual point k> <= omega
        std::size_t ndual = 0;
    };
    auto usable = [&](const FinSet& X) {
        const FinSet Xs = dual_obj(X);
        return puq->supports(X) && puq->supports(Xs) &&
               inner->supports(FinSet::product(X, Xs));
    };
    auto table = [&](const FinSet& X) {
        Tbl t;
        t.px = inner->carrier(X);
        auto pxs = inner->carrier(dual_obj(X));
        t.ndual = pxs.size();
        t.row.assign(t.px.size(), 0);
        for (std::size_t i = 0; i < t.px.size(); ++i)
            for (std::size_t k = 0; k < pxs.size(); ++k)
                if (inner->leq(I, pairing(*inner, X, I, t.px[i], pxs[k]), d.omega))
                    t.row[i] |= Elt{1} << k;
        return t;
    };
    auto jclose = [](const Tbl& t, Elt mask) {
        Elt orth = t.ndual >= 64 ? ~Elt{0} : (Elt{1} << t.ndual) - 1;
        for (std::size_t i = 0; i < t.px.size(); ++i)
            if (mask & (Elt{1} << i)) orth &= t.row[i];
        Elt out = 0;
        for (std::size_t i = 0; i < t.px.size(); ++i)
            if ((orth & ~t.row[i]) == 0) out |= Elt{1} << i;
        return out;
    };

    for (const auto& X : objs) {
        if (!usable(X)) continue;
        Tbl tx = table(X);
        const std::size_t n = tx.px.size();
        if (n > 16) continue;  // mask enumeration bound

        std::vector<Elt> downs;
        for (Elt a : tx.px) downs.push_back(puq->down_set(X, a));
        {
            std::vector<Elt> fixed;
            for (Elt m = 0; m < (Elt{1} << n); ++m)
                if (jclose(tx, m) == m) fixed.push_back(m);
            auto g = downs;
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
            std::sort(fixed.begin(), fixed.end());
            if (!vfixed && fixed != g)
                vfixed = Violation{"fixed subsets are not the principal downsets",
                                   "|X|=" + std::to_string(X.size) + ": " +
                                       std::to_string(fixed.size()) + " fixed vs " +
                                       std::to_string(g.size()) + " downsets"};
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (!viso && inner->leq(X, tx.px[i], tx.px[k]) !=
                                 puq->leq(X, downs[i], downs[k]))
                    viso = Violation{"downset map is not an order embedding",
                                     "a=" + inner->show(X, tx.px[i]) +
                                         ", b=" + inner->show(X, tx.px[k])};

        for (const auto& Y : objs) {
            if (!usable(Y)) continue;
            Tbl ty = table(Y);
            for (const auto& f : mats_within(X, Y, inner->base(), mat_limit))
                for (std::size_t i = 0; i < n; ++i) {
                    if (vnat) break;
                    Elt lhs = jclose(ty, puq->apply(f, downs[i]));
                    Elt rhs = puq->down_set(Y, inner->apply(f, tx.px[i]));
                    if (lhs != rhs)
                        vnat = Violation{"downset map not natural",
                                         "f=" + f.show() +
                                             ", a=" + inner->show(X, tx.px[i])};
                }
        }
    }
    std::string budget = obj_budget(max_obj);
    rep.law("represent.fixed_are_downsets", "fixed subsets are the principal downsets",
            budget, vfixed);
    rep.law("represent.order_iso", "downset map is an order isomorphism", budget, viso);
    rep.law("represent.natural", "downset map commutes with morphism actions", budget, vnat);
}

}  // namespace liftq
