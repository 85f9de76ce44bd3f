#pragma once

#include "liftq/quantale.hpp"

namespace liftq {

/// Object of the base category: a finite set with element labels.
struct FinSet {
    std::size_t size = 0;
    std::vector<std::string> labels;

    static FinSet of(std::size_t n, const std::string& prefix = "x");
    static FinSet singleton();
    static FinSet empty() { return FinSet{0, {}}; }

    /// Cartesian product with row-major pairing: (x, y) -> x*|Y| + y.
    static FinSet product(const FinSet& X, const FinSet& Y);

    bool operator==(const FinSet& o) const { return size == o.size; }
};

/// Morphism of Rel(Q): a Q-valued dom x cod matrix. With Q = B2 these are
/// ordinary relations.
class QMat {
public:
    QMat() = default;
    QMat(FinSet dom, FinSet cod, const FinQuantale* q)
        : dom_(std::move(dom)), cod_(std::move(cod)), q_(q),
          entries_(dom_.size * cod_.size, q->bot()) {}

    static QMat identity(const FinSet& X, const FinQuantale* q);

    const FinSet& dom() const { return dom_; }
    const FinSet& cod() const { return cod_; }
    const FinQuantale& quantale() const { return *q_; }
    const FinQuantale* quantale_ptr() const { return q_; }

    Elt at(std::size_t x, std::size_t y) const { return entries_[x * cod_.size + y]; }
    void set(std::size_t x, std::size_t y, Elt v) { entries_[x * cod_.size + y] = v; }
    const std::vector<Elt>& entries() const { return entries_; }

    bool operator==(const QMat& o) const {
        return dom_.size == o.dom_.size && cod_.size == o.cod_.size && entries_ == o.entries_;
    }

    /// (this ; g)(x, z) = join_y this(x, y) * g(y, z).
    QMat then(const QMat& g) const;

    /// Entry transpose.
    QMat converse() const;

    /// (f (x) g)((x,y),(x',y')) = f(x,x') * g(y,y').
    QMat tensor(const QMat& g) const;

    /// f -o g : (X' -o Y) -> (X -o Y') for f : X -> X', g : Y -> Y';
    /// in the compact closed base this is converse(f) (x) g.
    QMat internal_hom(const QMat& g) const;

    /// True iff the matrix is the graph of a bijection with unit entries.
    bool is_struct_iso() const;

    /// Inverse of a struct iso (its converse).
    QMat inverse() const;

    std::string show() const;

private:
    FinSet dom_, cod_;
    const FinQuantale* q_ = nullptr;
    std::vector<Elt> entries_;
};

enum class StructKind {
    associator,    // (X (x) Y) (x) Z -> X (x) (Y (x) Z)
    left_unitor,   // I (x) X -> X
    right_unitor,  // X (x) I -> X
    symmetry,      // X (x) Y -> Y (x) X
    double_dual_j, // X -> (X (x) 1) (x) 1
    curry_iso,     // (X (x) Y) -o Z -> Y -o (X -o Z)
};

/// Graph of the canonical bijection on index tuples, as a first-class
/// morphism.
QMat structural(StructKind kind, const std::vector<FinSet>& objs, const FinQuantale* q);

/// ev : X (x) (X -o Y) -> Y, graph of ((x,(x,y)), y).
QMat ev_relation(const FinSet& X, const FinSet& Y, const FinQuantale* q);

/// eta : Y -> X -o (X (x) Y), graph of (y, (x,(x,y))).
QMat eta_relation(const FinSet& X, const FinSet& Y, const FinQuantale* q);

/// Internal hom object X -o Y = X x Y (compact closure).
inline FinSet hom_obj(const FinSet& X, const FinSet& Y) { return FinSet::product(X, Y); }

/// X* = X -o 1 = X x 1.
inline FinSet dual_obj(const FinSet& X) { return FinSet::product(X, FinSet::singleton()); }

/// All morphisms X -> Y over q, enumerated in entry-lexicographic order.
/// Throws CarrierTooLarge if their number exceeds limit.
std::vector<QMat> all_mats(const FinSet& X, const FinSet& Y, const FinQuantale* q,
                           std::uint64_t limit = 1u << 16);

/// All bijective struct-iso morphisms X -> Y (permutation graphs).
std::vector<QMat> all_iso_mats(const FinSet& X, const FinSet& Y, const FinQuantale* q);

}  // namespace liftq
