#include "liftq/presheaf.hpp"

namespace liftq {

std::vector<Elt> Presheaf::carrier(const FinSet& X) const {
    const std::uint64_t n = carrier_size(X);
    if (n > enum_budget_)
        throw CarrierTooLarge(name() + " carrier of size " + std::to_string(n) +
                              " exceeds budget " + std::to_string(enum_budget_));
    std::vector<Elt> out;
    out.reserve(n);
    auto cur = next(X, std::nullopt);
    while (cur) {
        out.push_back(*cur);
        cur = next(X, *cur);
    }
    if (out.size() != n) throw InternalLawViolation(name() + " carrier enumeration miscount");
    return out;
}

std::optional<Elt> Presheaf::next(const FinSet& X, std::optional<Elt> prev) const {
    const std::uint64_t n = carrier_size(X);
    if (!prev) return n ? std::optional<Elt>(0) : std::nullopt;
    return *prev + 1 < n ? std::optional<Elt>(*prev + 1) : std::nullopt;
}

Elt Presheaf::join(const FinSet& X, const std::vector<Elt>& s) const {
    Elt acc = bot(X);
    for (Elt a : s) acc = join2(X, acc, a);
    return acc;
}

Elt Presheaf::meet(const FinSet& X, const std::vector<Elt>& s) const {
    Elt acc = top(X);
    for (Elt a : s) acc = meet2(X, acc, a);
    return acc;
}

// ---------------------------------------------------------------- PowQ

std::uint64_t PowQ::carrier_size(const FinSet& X) const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < X.size; ++i) {
        if (n > (std::uint64_t{1} << 62) / q_.size())
            throw CarrierTooLarge("powq carrier overflows");
        n *= q_.size();
    }
    return n;
}

std::vector<Elt> PowQ::decode(const FinSet& X, Elt a) const {
    std::vector<Elt> v(X.size);
    for (std::size_t i = 0; i < X.size; ++i) {
        v[i] = a % q_.size();
        a /= q_.size();
    }
    return v;
}

Elt PowQ::encode(const std::vector<Elt>& v) const {
    Elt a = 0;
    for (std::size_t i = v.size(); i-- > 0;) a = a * q_.size() + v[i];
    return a;
}

bool PowQ::leq(const FinSet& X, Elt a, Elt b) const {
    auto va = decode(X, a), vb = decode(X, b);
    for (std::size_t i = 0; i < X.size; ++i)
        if (!q_.leq(va[i], vb[i])) return false;
    return true;
}

Elt PowQ::join2(const FinSet& X, Elt a, Elt b) const {
    auto va = decode(X, a), vb = decode(X, b);
    for (std::size_t i = 0; i < X.size; ++i) va[i] = q_.join2(va[i], vb[i]);
    return encode(va);
}

Elt PowQ::meet2(const FinSet& X, Elt a, Elt b) const {
    auto va = decode(X, a), vb = decode(X, b);
    for (std::size_t i = 0; i < X.size; ++i) va[i] = q_.meet2(va[i], vb[i]);
    return encode(va);
}

Elt PowQ::apply(const QMat& f, Elt a) const {
    auto va = decode(f.dom(), a);
    std::vector<Elt> out(f.cod().size, q_.bot());
    for (std::size_t y = 0; y < f.cod().size; ++y)
        for (std::size_t x = 0; x < f.dom().size; ++x)
            out[y] = q_.join2(out[y], q_.mult(va[x], f.at(x, y)));
    return encode(out);
}

Elt PowQ::mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const {
    auto va = decode(X, a), vb = decode(Y, b);
    std::vector<Elt> out(X.size * Y.size);
    for (std::size_t x = 0; x < X.size; ++x)
        for (std::size_t y = 0; y < Y.size; ++y) out[x * Y.size + y] = q_.mult(va[x], vb[y]);
    return encode(out);
}

std::optional<Elt> PowQ::iota_closed(const FinSet& X, const FinSet& Y, Elt alpha,
                                     Elt gamma) const {
    auto va = decode(X, alpha), vg = decode(Y, gamma);
    std::vector<Elt> out(X.size * Y.size);
    for (std::size_t x = 0; x < X.size; ++x)
        for (std::size_t y = 0; y < Y.size; ++y)
            out[x * Y.size + y] = q_.residual(va[x], vg[y]);
    return encode(out);
}

std::optional<Elt> PowQ::pairing_closed(const FinSet& X, const FinSet& Y, Elt alpha,
                                        Elt beta) const {
    auto va = decode(X, alpha), vb = decode(hom_obj(X, Y), beta);
    std::vector<Elt> out(Y.size, q_.bot());
    for (std::size_t y = 0; y < Y.size; ++y)
        for (std::size_t x = 0; x < X.size; ++x)
            out[y] = q_.join2(out[y], q_.mult(va[x], vb[x * Y.size + y]));
    return encode(out);
}

bool PowQ::supports(const FinSet& X) const {
    try {
        carrier_size(X);
        return true;
    } catch (const CarrierTooLarge&) {
        return false;
    }
}

std::string PowQ::show(const FinSet& X, Elt a) const {
    auto v = decode(X, a);
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + q_.label(v[i]);
    return out + ")";
}

// ---------------------------------------------------------------- Nuts

namespace {

bool up_closed(Elt code, std::size_t npts) {
    for (std::uint64_t A = 0; A < (std::uint64_t{1} << npts); ++A) {
        if (!(code & (Elt{1} << A))) continue;
        for (std::size_t i = 0; i < npts; ++i)
            if (!(code & (Elt{1} << (A | (std::uint64_t{1} << i))))) return false;
    }
    return true;
}

}  // namespace

std::uint64_t Nuts::carrier_size(const FinSet& X) const {
    if (X.size > 4) throw CarrierTooLarge("nuts carrier beyond 4 points");
    std::uint64_t count = 0;
    const Elt full = (Elt{1} << (std::uint64_t{1} << X.size));
    for (Elt c = 0; c < full; ++c)
        if (up_closed(c, X.size)) ++count;
    return count;
}

std::optional<Elt> Nuts::next(const FinSet& X, std::optional<Elt> prev) const {
    if (X.size > 4) throw CarrierTooLarge("nuts carrier beyond 4 points");
    const Elt full = (Elt{1} << (std::uint64_t{1} << X.size));
    for (Elt c = prev ? *prev + 1 : 0; c < full; ++c)
        if (up_closed(c, X.size)) return c;
    return std::nullopt;
}

Elt Nuts::top(const FinSet& X) const {
    const std::uint64_t bits = std::uint64_t{1} << X.size;
    return bits >= 64 ? ~Elt{0} : (Elt{1} << bits) - 1;
}

Elt Nuts::up_close(const FinSet& X, Elt code) const {
    const std::uint64_t npts = X.size;
    Elt cur = code;
    for (;;) {
        Elt nxt = cur;
        for (std::uint64_t A = 0; A < (std::uint64_t{1} << npts); ++A) {
            if (!(cur & (Elt{1} << A))) continue;
            for (std::size_t i = 0; i < npts; ++i)
                nxt |= Elt{1} << (A | (std::uint64_t{1} << i));
        }
        if (nxt == cur) return cur;
        cur = nxt;
    }
}

Elt Nuts::apply(const QMat& f, Elt a) const {
    const std::size_t nx = f.dom().size, ny = f.cod().size;
    Elt images = 0;
    for (std::uint64_t A = 0; A < (std::uint64_t{1} << nx); ++A) {
        if (!(a & (Elt{1} << A))) continue;
        std::uint64_t img = 0;
        for (std::size_t x = 0; x < nx; ++x) {
            if (!(A & (std::uint64_t{1} << x))) continue;
            for (std::size_t y = 0; y < ny; ++y)
                if (f.at(x, y) == q_.unit()) img |= std::uint64_t{1} << y;
        }
        images |= Elt{1} << img;
    }
    return up_close(f.cod(), images);
}

Elt Nuts::mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const {
    Elt products = 0;
    for (std::uint64_t A = 0; A < (std::uint64_t{1} << X.size); ++A) {
        if (!(a & (Elt{1} << A))) continue;
        for (std::uint64_t B = 0; B < (std::uint64_t{1} << Y.size); ++B) {
            if (!(b & (Elt{1} << B))) continue;
            std::uint64_t prod = 0;
            for (std::size_t x = 0; x < X.size; ++x)
                if (A & (std::uint64_t{1} << x))
                    for (std::size_t y = 0; y < Y.size; ++y)
                        if (B & (std::uint64_t{1} << y))
                            prod |= std::uint64_t{1} << (x * Y.size + y);
            products |= Elt{1} << prod;
        }
    }
    return up_close(FinSet::product(X, Y), products);
}

std::string Nuts::show(const FinSet& X, Elt a) const {
    std::string out = "{";
    bool firstA = true;
    for (std::uint64_t A = 0; A < (std::uint64_t{1} << X.size); ++A) {
        if (!(a & (Elt{1} << A))) continue;
        if (!firstA) out += ",";
        firstA = false;
        out += "{";
        bool first = true;
        for (std::size_t x = 0; x < X.size; ++x)
            if (A & (std::uint64_t{1} << x)) {
                if (!first) out += ",";
                first = false;
                out += X.labels[x];
            }
        out += "}";
    }
    return out + "}";
}

// ---------------------------------------------------------------- Orth

bool Orth::supports(const FinSet& X) const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < X.size; ++i) {
        n *= q_.size();
        if (n > hom_bound_) return false;
    }
    return true;
}

std::uint64_t Orth::hom_count(const FinSet& X) const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < X.size; ++i) {
        n *= q_.size();
        if (n > hom_bound_)
            throw CarrierTooLarge("orth point set of size " + std::to_string(n) +
                                  " exceeds bound " + std::to_string(hom_bound_));
    }
    return n;
}

std::uint64_t Orth::carrier_size(const FinSet& X) const {
    return std::uint64_t{1} << hom_count(X);
}

Elt Orth::top(const FinSet& X) const { return (Elt{1} << hom_count(X)) - 1; }

QMat Orth::point(const FinSet& X, Elt code) const {
    QMat p(FinSet::singleton(), X, &q_);
    for (std::size_t x = 0; x < X.size; ++x) {
        p.set(0, x, code % q_.size());
        code /= q_.size();
    }
    return p;
}

Elt Orth::point_code(const QMat& p) const {
    Elt code = 0;
    for (std::size_t x = p.cod().size; x-- > 0;) code = code * q_.size() + p.at(0, x);
    return code;
}

Elt Orth::apply(const QMat& f, Elt a) const {
    const std::uint64_t hc = hom_count(f.dom());
    (void)hom_count(f.cod());
    Elt out = 0;
    for (std::uint64_t c = 0; c < hc; ++c)
        if (a & (Elt{1} << c)) out |= Elt{1} << point_code(point(f.dom(), c).then(f));
    return out;
}

Elt Orth::mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const {
    const std::uint64_t hx = hom_count(X), hy = hom_count(Y);
    (void)hom_count(FinSet::product(X, Y));
    Elt out = 0;
    for (std::uint64_t cx = 0; cx < hx; ++cx) {
        if (!(a & (Elt{1} << cx))) continue;
        QMat px = point(X, cx);
        for (std::uint64_t cy = 0; cy < hy; ++cy) {
            if (!(b & (Elt{1} << cy))) continue;
            QMat py = point(Y, cy);
            QMat prod(FinSet::singleton(), FinSet::product(X, Y), &q_);
            for (std::size_t x = 0; x < X.size; ++x)
                for (std::size_t y = 0; y < Y.size; ++y)
                    prod.set(0, x * Y.size + y, q_.mult(px.at(0, x), py.at(0, y)));
            out |= Elt{1} << point_code(prod);
        }
    }
    return out;
}

std::string Orth::show(const FinSet& X, Elt a) const {
    const std::uint64_t hc = hom_count(X);
    std::string out = "{";
    bool first = true;
    for (std::uint64_t c = 0; c < hc; ++c) {
        if (!(a & (Elt{1} << c))) continue;
        if (!first) out += ",";
        first = false;
        QMat p = point(X, c);
        out += "<";
        for (std::size_t x = 0; x < X.size; ++x)
            out += (x ? "," : "") + q_.label(p.at(0, x));
        out += ">";
    }
    return out + "}";
}

// ---------------------------------------------------------------- EndoFunctor

EndoFunctor EndoFunctor::identity() { return EndoFunctor{}; }

EndoFunctor EndoFunctor::constant(const FinSet& A, QMat mult, QMat unit) {
    return EndoFunctor{Kind::constant, A, std::move(mult), std::move(unit)};
}

EndoFunctor EndoFunctor::product_left(const FinSet& A, QMat mult, QMat unit) {
    return EndoFunctor{Kind::product_left, A, std::move(mult), std::move(unit)};
}

FinSet EndoFunctor::on_obj(const FinSet& X) const {
    switch (kind) {
        case Kind::identity: return X;
        case Kind::constant: return A;
        case Kind::product_left: return FinSet::product(A, X);
    }
    throw ShapeMismatch("unknown functor kind");
}

QMat EndoFunctor::on_mor(const QMat& f) const {
    switch (kind) {
        case Kind::identity: return f;
        case Kind::constant: return QMat::identity(A, f.quantale_ptr());
        case Kind::product_left:
            return QMat::identity(A, f.quantale_ptr()).tensor(f);
    }
    throw ShapeMismatch("unknown functor kind");
}

QMat EndoFunctor::mu_map(const FinSet& X, const FinSet& Y, const FinQuantale* q) const {
    switch (kind) {
        case Kind::identity:
            return QMat::identity(FinSet::product(X, Y), q);
        case Kind::constant:
            return monoid_mult;
        case Kind::product_left: {
            const std::size_t na = A.size, nx = X.size, ny = Y.size;
            QMat m(FinSet::product(FinSet::product(A, X), FinSet::product(A, Y)),
                   FinSet::product(A, FinSet::product(X, Y)), q);
            for (std::size_t a = 0; a < na; ++a)
                for (std::size_t x = 0; x < nx; ++x)
                    for (std::size_t a2 = 0; a2 < na; ++a2)
                        for (std::size_t y = 0; y < ny; ++y)
                            for (std::size_t a3 = 0; a3 < na; ++a3)
                                m.set((a * nx + x) * na * ny + a2 * ny + y,
                                      a3 * nx * ny + x * ny + y,
                                      monoid_mult.at(a * na + a2, a3));
            return m;
        }
    }
    throw ShapeMismatch("unknown functor kind");
}

QMat EndoFunctor::unit_map(const FinQuantale* q) const {
    switch (kind) {
        case Kind::identity:
            return QMat::identity(FinSet::singleton(), q);
        case Kind::constant:
            return monoid_unit;
        case Kind::product_left: {
            QMat m(FinSet::singleton(), FinSet::product(A, FinSet::singleton()), q);
            for (std::size_t a = 0; a < A.size; ++a) m.set(0, a, monoid_unit.at(0, a));
            return m;
        }
    }
    throw ShapeMismatch("unknown functor kind");
}

std::string EndoFunctor::show() const {
    switch (kind) {
        case Kind::identity: return "id";
        case Kind::constant: return "const" + std::to_string(A.size);
        case Kind::product_left: return "prod" + std::to_string(A.size);
    }
    return "?";
}

// ---------------------------------------------------------------- checkers

std::vector<FinSet> check_objects(std::size_t max_size) {
    std::vector<FinSet> out;
    for (std::size_t k = 0; k <= max_size; ++k) out.push_back(FinSet::of(k));
    return out;
}

namespace {

std::vector<QMat> mats_within(const FinSet& X, const FinSet& Y, const FinQuantale* q,
                              std::uint64_t limit) {
    try {
        return all_mats(X, Y, q, limit);
    } catch (const CarrierTooLarge&) {
        return {};
    }
}

std::string obj_budget(std::size_t max_obj, std::uint64_t mat_limit) {
    return "objects of size <= " + std::to_string(max_obj) + ", hom-sets of size <= " +
           std::to_string(mat_limit) + ", all carrier elements";
}

/// Whether the instance can both encode Q(X) and list its elements.
bool enumerable(const Presheaf& P, const FinSet& X) {
    if (!P.supports(X)) return false;
    try {
        return P.carrier_size(X) <= P.enum_budget();
    } catch (const CarrierTooLarge&) {
        return false;
    }
}

}  // namespace

void check_functoriality(const Presheaf& P, std::size_t max_obj, Report& rep,
                         std::uint64_t mat_limit) {
    auto objs = check_objects(max_obj);
    std::optional<Violation> vid, vcomp;
    for (const auto& X : objs) {
        if (!enumerable(P, X)) continue;
        auto id = QMat::identity(X, P.base());
        for (Elt a : P.carrier(X))
            if (!vid && P.apply(id, a) != a)
                vid = Violation{"Q(id) != id", "|X|=" + std::to_string(X.size) +
                                                   ", a=" + P.show(X, a)};
        for (const auto& Y : objs) {
            if (!P.supports(Y)) continue;
            auto fs = mats_within(X, Y, P.base(), mat_limit);
            for (const auto& Z : objs) {
                if (!P.supports(Z)) continue;
                auto gs = mats_within(Y, Z, P.base(), mat_limit);
                for (const auto& f : fs)
                    for (const auto& g : gs)
                        for (Elt a : P.carrier(X)) {
                            if (vcomp) break;
                            if (P.apply(f.then(g), a) != P.apply(g, P.apply(f, a)))
                                vcomp = Violation{
                                    "Q(f;g) != Q(g) o Q(f)",
                                    "f=" + f.show() + ", g=" + g.show() + ", a=" + P.show(X, a)};
                        }
            }
        }
    }
    rep.law("presheaf.identity", "functor identity law", obj_budget(max_obj, mat_limit), vid);
    rep.law("presheaf.composition", "functor composition law", obj_budget(max_obj, mat_limit),
            vcomp);
}

void check_sup_preservation(const Presheaf& P, std::size_t max_obj, Report& rep,
                            std::uint64_t mat_limit) {
    auto objs = check_objects(max_obj);
    std::optional<Violation> v;
    for (const auto& X : objs) {
        if (!enumerable(P, X)) continue;
        for (const auto& Y : objs) {
            if (!P.supports(Y)) continue;
            for (const auto& f : mats_within(X, Y, P.base(), mat_limit)) {
                if (v) break;
                if (P.apply(f, P.bot(X)) != P.bot(Y)) {
                    v = Violation{"Q(f)(bot) != bot", "f=" + f.show()};
                    break;
                }
                auto car = P.carrier(X);
                for (Elt a : car)
                    for (Elt b : car)
                        if (!v &&
                            P.apply(f, P.join2(X, a, b)) !=
                                P.join2(Y, P.apply(f, a), P.apply(f, b)))
                            v = Violation{"Q(f) not sup-preserving",
                                          "f=" + f.show() + ", a=" + P.show(X, a) +
                                              ", b=" + P.show(X, b)};
            }
        }
    }
    rep.law("presheaf.sup", "morphism actions preserve joins", obj_budget(max_obj, mat_limit),
            v);
}

bool check_mu_laws(const Presheaf& P, std::size_t max_obj, Report& rep,
                   std::uint64_t mat_limit) {
    auto objs = check_objects(max_obj);
    std::optional<Violation> vbil;
    for (const auto& X : objs)
        for (const auto& Y : objs) {
            auto XY = FinSet::product(X, Y);
            if (!enumerable(P, X) || !enumerable(P, Y) || !P.supports(XY)) continue;
            auto cx = P.carrier(X);
            auto cy = P.carrier(Y);
            for (Elt b : cy) {
                if (vbil) break;
                if (P.mu(X, Y, P.bot(X), b) != P.bot(XY)) {
                    vbil = Violation{"mu(bot, b) != bot", "b=" + P.show(Y, b)};
                    break;
                }
                for (Elt a1 : cx)
                    for (Elt a2 : cx)
                        if (!vbil && P.mu(X, Y, P.join2(X, a1, a2), b) !=
                                         P.join2(XY, P.mu(X, Y, a1, b), P.mu(X, Y, a2, b)))
                            vbil = Violation{"mu not join-preserving on the left",
                                             "a1=" + P.show(X, a1) + ", a2=" + P.show(X, a2) +
                                                 ", b=" + P.show(Y, b)};
            }
            for (Elt a : cx) {
                if (vbil) break;
                if (P.mu(X, Y, a, P.bot(Y)) != P.bot(XY)) {
                    vbil = Violation{"mu(a, bot) != bot", "a=" + P.show(X, a)};
                    break;
                }
                for (Elt b1 : cy)
                    for (Elt b2 : cy)
                        if (!vbil && P.mu(X, Y, a, P.join2(Y, b1, b2)) !=
                                         P.join2(XY, P.mu(X, Y, a, b1), P.mu(X, Y, a, b2)))
                            vbil = Violation{"mu not join-preserving on the right",
                                             "a=" + P.show(X, a) + ", b1=" + P.show(Y, b1) +
                                                 ", b2=" + P.show(Y, b2)};
            }
        }
    rep.law("presheaf.mu_bilinear", "pairing preserves joins in each argument",
            obj_budget(max_obj, mat_limit), vbil);

    std::optional<Violation> vstrict, vlax;
    for (const auto& X : objs)
        for (const auto& X2 : objs)
            for (const auto& Y : objs)
                for (const auto& Y2 : objs) {
                    auto X2Y2 = FinSet::product(X2, Y2);
                    if (!enumerable(P, X) || !enumerable(P, Y) || !P.supports(X2) ||
                        !P.supports(Y2) || !P.supports(FinSet::product(X, Y)) ||
                        !P.supports(X2Y2))
                        continue;
                    auto fs = mats_within(X, X2, P.base(), mat_limit);
                    auto gs = mats_within(Y, Y2, P.base(), mat_limit);
                    auto cx = P.carrier(X);
                    auto cy = P.carrier(Y);
                    for (const auto& f : fs)
                        for (const auto& g : gs) {
                            if (vstrict && vlax) break;
                            auto fg = f.tensor(g);
                            for (Elt a : cx)
                                for (Elt b : cy) {
                                    Elt lhs = P.apply(fg, P.mu(X, Y, a, b));
                                    Elt rhs = P.mu(X2, Y2, P.apply(f, a), P.apply(g, b));
                                    if (lhs == rhs) continue;
                                    std::string w = "f=" + f.show() + ", g=" + g.show() +
                                                    ", a=" + P.show(X, a) +
                                                    ", b=" + P.show(Y, b);
                                    if (!vstrict) vstrict = Violation{"square not strict", w};
                                    if (!vlax && !P.leq(X2Y2, lhs, rhs))
                                        vlax = Violation{"lax direction fails", w};
                                }
                        }
                }
    if (vstrict && !vlax)
        rep.pass("presheaf.mu_naturality", "lax natural transformation (strictness fails at " +
                                               vstrict->witness + ")",
                 obj_budget(max_obj, mat_limit));
    else
        rep.law("presheaf.mu_naturality",
                vstrict ? "lax natural transformation" : "natural transformation",
                obj_budget(max_obj, mat_limit), vlax);
    return !vstrict && !vlax;
}

void check_coherence(const Presheaf& P, std::size_t max_obj, Report& rep) {
    auto objs = check_objects(max_obj);
    const FinSet I = FinSet::singleton();
    const Elt u = P.unit_elt();
    std::optional<Violation> vassoc, vlu, vru, vsym;
    for (const auto& X : objs) {
        if (!enumerable(P, X) || !P.supports(FinSet::product(I, X)) ||
            !P.supports(FinSet::product(X, I)))
            continue;
        auto cx = P.carrier(X);
        auto lu = structural(StructKind::left_unitor, {X}, P.base());
        auto ru = structural(StructKind::right_unitor, {X}, P.base());
        for (Elt a : cx) {
            if (!vlu && P.apply(lu, P.mu(I, X, u, a)) != a)
                vlu = Violation{"left unit coherence fails", "a=" + P.show(X, a)};
            if (!vru && P.apply(ru, P.mu(X, I, a, u)) != a)
                vru = Violation{"right unit coherence fails", "a=" + P.show(X, a)};
        }
        for (const auto& Y : objs) {
            if (!enumerable(P, Y) || !P.supports(FinSet::product(X, Y))) continue;
            auto cy = P.carrier(Y);
            auto sym = structural(StructKind::symmetry, {X, Y}, P.base());
            for (Elt a : cx)
                for (Elt b : cy)
                    if (!vsym && P.apply(sym, P.mu(X, Y, a, b)) != P.mu(Y, X, b, a))
                        vsym = Violation{"symmetry coherence fails",
                                         "a=" + P.show(X, a) + ", b=" + P.show(Y, b)};
            for (const auto& Z : objs) {
                auto XY = FinSet::product(X, Y);
                auto YZ = FinSet::product(Y, Z);
                if (!enumerable(P, Z) || !P.supports(YZ) ||
                    !P.supports(FinSet::product(XY, Z)) ||
                    !P.supports(FinSet::product(X, YZ)))
                    continue;
                auto cz = P.carrier(Z);
                auto assoc = structural(StructKind::associator, {X, Y, Z}, P.base());
                for (Elt a : cx)
                    for (Elt b : cy)
                        for (Elt c : cz)
                            if (!vassoc &&
                                P.apply(assoc, P.mu(XY, Z, P.mu(X, Y, a, b), c)) !=
                                    P.mu(X, YZ, a, P.mu(Y, Z, b, c)))
                                vassoc = Violation{"associativity coherence fails",
                                                   "a=" + P.show(X, a) + ", b=" + P.show(Y, b) +
                                                       ", c=" + P.show(Z, c)};
            }
        }
    }
    std::string budget = "objects of size <= " + std::to_string(max_obj) +
                         ", all carrier elements";
    rep.law("presheaf.coherence_assoc", "associativity coherence", budget, vassoc);
    rep.law("presheaf.coherence_left_unit", "left unit coherence", budget, vlu);
    rep.law("presheaf.coherence_right_unit", "right unit coherence", budget, vru);
    rep.law("presheaf.coherence_symmetry", "symmetry coherence", budget, vsym);
}

}  // namespace liftq
