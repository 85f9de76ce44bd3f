#pragma once

#include <map>

#include "liftq/total.hpp"

namespace liftq {

/// The double negation closure family j_X = lneg o omega_X on a presheaf
/// with a dual candidate. Values are memoized per object size (objects of
/// equal size are interchangeable here).
class NucleusFamily {
public:
    NucleusFamily(std::shared_ptr<const Presheaf> p, DualCandidate d)
        : p_(std::move(p)), d_(d) {}

    Elt jmath(const FinSet& X, Elt a) const;

    const Presheaf& presheaf() const { return *p_; }
    std::shared_ptr<const Presheaf> presheaf_ptr() const { return p_; }
    DualCandidate dual() const { return d_; }

    /// Whether jmath is computable at X (negations need the carrier).
    bool supports(const FinSet& X) const;

private:
    std::shared_ptr<const Presheaf> p_;
    DualCandidate d_;
    mutable std::map<std::pair<std::size_t, Elt>, Elt> memo_;
};

/// Closure laws per object, the quotient equality j(Q(f)(j(a))) = j(Q(f)(a)),
/// the nucleus inequality for mu, its two-sided consequence, the curry
/// identity for pairings, laxity of the internal hom under j, and fixedness
/// of the negation images and of the dual candidate.
void check_nucleus_laws(const NucleusFamily& fam, std::size_t max_obj, Report& rep,
                        std::uint64_t mat_limit = 1u << 12);

/// The quotient presheaf: values are the j-fixed points, morphism action
/// j o Q(f), pairing j o mu, unit j(u). Internal homs are inherited.
class QjPresheaf : public Presheaf {
public:
    explicit QjPresheaf(NucleusFamily fam) : fam_(std::move(fam)) {}

    std::string name() const override { return fam_.presheaf().name() + "^j"; }
    const FinQuantale* base() const override { return fam_.presheaf().base(); }
    std::uint64_t carrier_size(const FinSet& X) const override;
    bool leq(const FinSet& X, Elt a, Elt b) const override {
        return fam_.presheaf().leq(X, a, b);
    }
    Elt join2(const FinSet& X, Elt a, Elt b) const override {
        return fam_.jmath(X, fam_.presheaf().join2(X, a, b));
    }
    Elt meet2(const FinSet& X, Elt a, Elt b) const override {
        return fam_.presheaf().meet2(X, a, b);
    }
    Elt bot(const FinSet& X) const override {
        return fam_.jmath(X, fam_.presheaf().bot(X));
    }
    Elt top(const FinSet& X) const override { return fam_.presheaf().top(X); }
    Elt apply(const QMat& f, Elt a) const override {
        return fam_.jmath(f.cod(), fam_.presheaf().apply(f, a));
    }
    Elt unit_elt() const override {
        return fam_.jmath(FinSet::singleton(), fam_.presheaf().unit_elt());
    }
    Elt mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const override {
        return fam_.jmath(FinSet::product(X, Y), fam_.presheaf().mu(X, Y, a, b));
    }
    std::optional<Elt> iota_closed(const FinSet& X, const FinSet& Y, Elt alpha,
                                   Elt gamma) const override {
        // Internal homs of fixed points are computed in the underlying
        // presheaf and are themselves fixed.
        return iota(fam_.presheaf(), X, Y, alpha, gamma);
    }
    std::string show(const FinSet& X, Elt a) const override {
        return fam_.presheaf().show(X, a);
    }
    bool supports(const FinSet& X) const override { return fam_.supports(X); }

    const NucleusFamily& family() const { return fam_; }

protected:
    std::optional<Elt> next(const FinSet& X, std::optional<Elt> prev) const override;

private:
    NucleusFamily fam_;
};

/// Builds the quotient and re-validates it: functor laws, sup preservation,
/// pairing laws, coherence, and the dualizing criteria all must pass (they
/// are theorems here); a failure throws InternalLawViolation.
std::shared_ptr<QjPresheaf> build_qj(NucleusFamily fam, std::size_t max_obj,
                                     std::uint64_t mat_limit = 1u << 12);

/// At the singleton object the quotient must reproduce the fixed-point
/// quantale of the base quantale's double negation, multiplication included.
void girard_consistency_check(const QjPresheaf& qj, const FinQuantale& q, Elt omega,
                              Report& rep);

/// Powerset-of-sections presheaf over an inner presheaf: values are subsets
/// of Q(X)'s carrier, morphism action and pairing by direct image.
class PUQPresheaf : public Presheaf {
public:
    explicit PUQPresheaf(std::shared_ptr<const Presheaf> inner) : inner_(std::move(inner)) {}

    std::string name() const override { return "pow[" + inner_->name() + "]"; }
    const FinQuantale* base() const override { return inner_->base(); }
    std::uint64_t carrier_size(const FinSet& X) const override {
        return std::uint64_t{1} << points(X).size();
    }
    bool leq(const FinSet& X, Elt a, Elt b) const override { return (a & ~b) == 0; }
    Elt join2(const FinSet& X, Elt a, Elt b) const override { return a | b; }
    Elt meet2(const FinSet& X, Elt a, Elt b) const override { return a & b; }
    Elt bot(const FinSet& X) const override { return 0; }
    Elt top(const FinSet& X) const override {
        return (Elt{1} << points(X).size()) - 1;
    }
    Elt apply(const QMat& f, Elt a) const override;
    Elt unit_elt() const override;
    Elt mu(const FinSet& X, const FinSet& Y, Elt a, Elt b) const override;
    std::string show(const FinSet& X, Elt a) const override;
    bool supports(const FinSet& X) const override;

    /// Encodes a subset of inner elements as a mask over the carrier order.
    Elt encode_set(const FinSet& X, const std::vector<Elt>& elems) const;
    /// The principal downset of an inner element.
    Elt down_set(const FinSet& X, Elt alpha) const;

private:
    const std::vector<Elt>& points(const FinSet& X) const;
    std::size_t index_of(const FinSet& X, Elt v) const;

    std::shared_ptr<const Presheaf> inner_;
    mutable std::map<std::size_t, std::vector<Elt>> pts_;
};

/// The fixed subsets of the powerset presheaf under double negation at
/// {x <= omega} are exactly the principal downsets, the downset map is an
/// order isomorphism, and it is natural in the base morphisms.
void representation_check(std::shared_ptr<const Presheaf> inner, const DualCandidate& d,
                          std::size_t max_obj, Report& rep,
                          std::uint64_t mat_limit = 1u << 12);

}  // namespace liftq
