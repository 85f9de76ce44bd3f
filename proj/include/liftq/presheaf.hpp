#pragma once

#include <memory>

#include "liftq/relbase.hpp"
#include "liftq/report.hpp"

namespace liftq {

/// A lattice-valued lax monoidal functor on the base category. Objects of
/// the base are FinSets, morphisms are QMats over base(); each Q(X) is a
/// complete lattice of encoded elements with morphism action apply(), a
/// unit in Q(I) and a bilinear pairing mu : Q(X) x Q(Y) -> Q(X (x) Y).
class Presheaf {
public:
    virtual ~Presheaf() = default;

    virtual std::string name() const = 0;
    virtual const FinQuantale* base() const = 0;

    // Lattice structure of Q(X).
    virtual std::uint64_t carrier_size(const FinSet& X) const = 0;
    virtual bool leq(const FinSet& X, Elt a, Elt b) const = 0;
    virtual Elt join2(const FinSet& X, Elt a, Elt b) const = 0;
    virtual Elt meet2(const FinSet& X, Elt a, Elt b) const = 0;
    virtual Elt bot(const FinSet& X) const = 0;
    virtual Elt top(const FinSet& X) const = 0;

    /// All elements of Q(X); throws CarrierTooLarge above enum_budget().
    std::vector<Elt> carrier(const FinSet& X) const;

    /// Q(f)(a) for f : X -> Y in the base.
    virtual Elt apply(const QMat& f, Elt a) const = 0;

    /// u in Q(I), I the singleton.
    virtual Elt unit_elt() const = 0;

    /// mu_{X,Y}(a, b) in Q(X (x) Y), row-major pairing of points.
    virtual Elt mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const = 0;

    /// Closed form for the internal hom iota(alpha, gamma) in Q(X -o Y) when
    /// the instance has one; checked against the enumeration oracle.
    virtual std::optional<Elt> iota_closed(const FinSet& X, const FinSet& Y, Elt alpha,
                                           Elt gamma) const {
        (void)X;
        (void)Y;
        (void)alpha;
        (void)gamma;
        return std::nullopt;
    }

    /// Closed form for the pairing Q(ev)(mu(alpha, beta)) when the instance
    /// has one; lets large objects avoid materializing the tensor square.
    /// Checked against the composite definition.
    virtual std::optional<Elt> pairing_closed(const FinSet& X, const FinSet& Y, Elt alpha,
                                              Elt beta) const {
        (void)X;
        (void)Y;
        (void)alpha;
        (void)beta;
        return std::nullopt;
    }

    virtual std::string show(const FinSet& X, Elt a) const = 0;

    /// Whether the encoding can represent Q(X) at all (lattice ops and
    /// morphism actions); carrier enumeration may still be out of budget.
    virtual bool supports(const FinSet& X) const {
        (void)X;
        return true;
    }

    Elt join(const FinSet& X, const std::vector<Elt>& s) const;
    Elt meet(const FinSet& X, const std::vector<Elt>& s) const;

    std::uint64_t enum_budget() const { return enum_budget_; }
    void set_enum_budget(std::uint64_t b) { enum_budget_ = b; }

protected:
    /// Successor in a canonical enumeration order; nullopt after the last
    /// element. Default walks 0..carrier_size-1 (dense encodings).
    virtual std::optional<Elt> next(const FinSet& X, std::optional<Elt> prev) const;

    std::uint64_t enum_budget_ = 1u << 14;
};

/// Pointwise instance Q(X) = Q^X with mixed-radix encoding, little-endian in
/// the point index. Q(f)(a)(y) = join_x a(x) * f(x, y);
/// mu(a, b)(x, y) = a(x) * b(y); iota(a, c)(x, y) = a(x) -o c(y).
class PowQ : public Presheaf {
public:
    explicit PowQ(FinQuantale q) : q_(std::move(q)) {}

    std::string name() const override { return "powq[" + q_.name + "]"; }
    const FinQuantale* base() const override { return &q_; }
    std::uint64_t carrier_size(const FinSet& X) const override;
    bool leq(const FinSet& X, Elt a, Elt b) const override;
    Elt join2(const FinSet& X, Elt a, Elt b) const override;
    Elt meet2(const FinSet& X, Elt a, Elt b) const override;
    Elt bot(const FinSet& X) const override { return encode(std::vector<Elt>(X.size, q_.bot())); }
    Elt top(const FinSet& X) const override { return encode(std::vector<Elt>(X.size, q_.top())); }
    Elt apply(const QMat& f, Elt a) const override;
    Elt unit_elt() const override { return q_.unit(); }
    Elt mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const override;
    std::optional<Elt> iota_closed(const FinSet& X, const FinSet& Y, Elt alpha,
                                   Elt gamma) const override;
    std::optional<Elt> pairing_closed(const FinSet& X, const FinSet& Y, Elt alpha,
                                      Elt beta) const override;
    std::string show(const FinSet& X, Elt a) const override;
    /// False when the mixed-radix encoding overflows the element word.
    bool supports(const FinSet& X) const override;

    std::vector<Elt> decode(const FinSet& X, Elt a) const;
    Elt encode(const std::vector<Elt>& v) const;

private:
    FinQuantale q_;
};

/// Up-closed families of subsets: Q(X) = UP(P(X)) over the Boolean base.
/// Encoding: bit A of the code is set iff the subset with point-mask A is in
/// the family. Q(R)(F) is the up-closure of the direct images R[A], A in F.
class Nuts : public Presheaf {
public:
    Nuts() : q_(FinQuantale::boolean()) {}

    std::string name() const override { return "nuts"; }
    const FinQuantale* base() const override { return &q_; }
    std::uint64_t carrier_size(const FinSet& X) const override;
    bool leq(const FinSet& X, Elt a, Elt b) const override { return (a & ~b) == 0; }
    Elt join2(const FinSet& X, Elt a, Elt b) const override { return a | b; }
    Elt meet2(const FinSet& X, Elt a, Elt b) const override { return a & b; }
    Elt bot(const FinSet& X) const override { return 0; }
    Elt top(const FinSet& X) const override;
    Elt apply(const QMat& f, Elt a) const override;
    Elt unit_elt() const override { return 2; }  // the family {{*}}, up-closed in P(1)
    Elt mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const override;
    std::string show(const FinSet& X, Elt a) const override;
    bool supports(const FinSet& X) const override { return X.size <= 6; }

    /// Smallest up-closed family containing the subsets of the given code.
    Elt up_close(const FinSet& X, Elt code) const;

protected:
    std::optional<Elt> next(const FinSet& X, std::optional<Elt> prev) const override;

private:
    FinQuantale q_;
};

/// Subsets of points: Q(X) = P(hom(I, X)), a point being a 1 x |X| row over
/// the base quantale, encoded mixed-radix. Elements are bitmasks over point
/// codes; Q(f) is direct image along postcomposition with f.
class Orth : public Presheaf {
public:
    explicit Orth(FinQuantale q, std::uint64_t hom_bound = 12)
        : q_(std::move(q)), hom_bound_(hom_bound) {}

    std::string name() const override { return "orth[" + q_.name + "]"; }
    const FinQuantale* base() const override { return &q_; }
    std::uint64_t carrier_size(const FinSet& X) const override;
    bool leq(const FinSet& X, Elt a, Elt b) const override { return (a & ~b) == 0; }
    Elt join2(const FinSet& X, Elt a, Elt b) const override { return a | b; }
    Elt meet2(const FinSet& X, Elt a, Elt b) const override { return a & b; }
    Elt bot(const FinSet& X) const override { return 0; }
    Elt top(const FinSet& X) const override;
    Elt apply(const QMat& f, Elt a) const override;
    Elt unit_elt() const override { return Elt{1} << q_.unit(); }
    Elt mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const override;
    std::string show(const FinSet& X, Elt a) const override;
    bool supports(const FinSet& X) const override;

    /// Number of points of X, i.e. |Q|^|X|; throws CarrierTooLarge above the
    /// point bound.
    std::uint64_t hom_count(const FinSet& X) const;
    QMat point(const FinSet& X, Elt code) const;
    Elt point_code(const QMat& p) const;

private:
    FinQuantale q_;
    std::uint64_t hom_bound_;
};

/// Comonoidal endofunctor data on the base: identity, the constant functor
/// at A, or A x -. The last two carry a chosen multiplication and unit on A
/// so the composite below is again lax monoidal.
struct EndoFunctor {
    enum class Kind { identity, constant, product_left };
    Kind kind = Kind::identity;
    FinSet A;
    QMat monoid_mult;  // A (x) A -> A
    QMat monoid_unit;  // I -> A

    static EndoFunctor identity();
    static EndoFunctor constant(const FinSet& A, QMat mult, QMat unit);
    static EndoFunctor product_left(const FinSet& A, QMat mult, QMat unit);

    FinSet on_obj(const FinSet& X) const;
    QMat on_mor(const QMat& f) const;
    /// F(X) (x) F(Y) -> F(X (x) Y).
    QMat mu_map(const FinSet& X, const FinSet& Y, const FinQuantale* q) const;
    /// I -> F(I).
    QMat unit_map(const FinQuantale* q) const;
    std::string show() const;
};

/// The composite Q o F of a presheaf with an endofunctor; lax structure via
/// the functor's comonoidal maps. Re-validate with the checkers below.
class ComposedPresheaf : public Presheaf {
public:
    ComposedPresheaf(std::shared_ptr<const Presheaf> inner, EndoFunctor f)
        : inner_(std::move(inner)), f_(std::move(f)) {}

    std::string name() const override { return inner_->name() + " o " + f_.show(); }
    const FinQuantale* base() const override { return inner_->base(); }
    std::uint64_t carrier_size(const FinSet& X) const override {
        return inner_->carrier_size(f_.on_obj(X));
    }
    bool leq(const FinSet& X, Elt a, Elt b) const override {
        return inner_->leq(f_.on_obj(X), a, b);
    }
    Elt join2(const FinSet& X, Elt a, Elt b) const override {
        return inner_->join2(f_.on_obj(X), a, b);
    }
    Elt meet2(const FinSet& X, Elt a, Elt b) const override {
        return inner_->meet2(f_.on_obj(X), a, b);
    }
    Elt bot(const FinSet& X) const override { return inner_->bot(f_.on_obj(X)); }
    Elt top(const FinSet& X) const override { return inner_->top(f_.on_obj(X)); }
    Elt apply(const QMat& f, Elt a) const override { return inner_->apply(f_.on_mor(f), a); }
    Elt unit_elt() const override {
        return inner_->apply(f_.unit_map(base()), inner_->unit_elt());
    }
    Elt mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const override {
        return inner_->apply(f_.mu_map(X, Y, base()),
                             inner_->mu(f_.on_obj(X), f_.on_obj(Y), a, b));
    }
    std::string show(const FinSet& X, Elt a) const override {
        return inner_->show(f_.on_obj(X), a);
    }
    bool supports(const FinSet& X) const override { return inner_->supports(f_.on_obj(X)); }

private:
    std::shared_ptr<const Presheaf> inner_;
    EndoFunctor f_;
};

/// Objects the generic checkers quantify over: sizes 0..max_size plus any
/// extras (e.g. derived tensor objects).
std::vector<FinSet> check_objects(std::size_t max_size);

/// Functor laws: identity and composition, with every morphism enumerated
/// where the budget allows (mat_limit morphisms per hom-set) and every
/// carrier element.
void check_functoriality(const Presheaf& P, std::size_t max_obj, Report& rep,
                         std::uint64_t mat_limit = 1u << 12);

/// Each Q(f) preserves binary joins and bottom.
void check_sup_preservation(const Presheaf& P, std::size_t max_obj, Report& rep,
                            std::uint64_t mat_limit = 1u << 12);

/// mu bilinear in each argument; naturality squares for mu, reported as
/// strict equalities when they all hold and as lax inequalities
/// (Q(f (x) g)(mu(a, b)) <= mu(Q(f)(a), Q(g)(b))) otherwise. Returns true
/// iff the squares commute strictly.
bool check_mu_laws(const Presheaf& P, std::size_t max_obj, Report& rep,
                   std::uint64_t mat_limit = 1u << 12);

/// Associativity, unit and symmetry coherence of (u, mu) against the base
/// structural isomorphisms.
void check_coherence(const Presheaf& P, std::size_t max_obj, Report& rep);

}  // namespace liftq
