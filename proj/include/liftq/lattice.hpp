#pragma once

#include <span>
#include <variant>

#include "liftq/util.hpp"

namespace liftq {

/// Finite complete lattice over carrier {0, .., n-1} with a Boolean order
/// matrix and precomputed binary join/meet tables.
class FinLattice {
public:
    /// Validates a candidate order matrix. Returns the lattice or the first
    /// violated axiom with its witness. Empty carriers are rejected.
    static std::variant<FinLattice, Violation> make(
        const std::vector<std::vector<bool>>& leq,
        std::vector<std::string> labels = {});

    /// Same as make() but throws ValidationError on failure.
    static FinLattice make_or_throw(const std::vector<std::vector<bool>>& leq,
                                    std::vector<std::string> labels = {});

    /// Chain 0 < 1 < ... < n-1.
    static FinLattice chain(std::size_t n);

    std::size_t size() const { return n_; }
    bool leq(Elt a, Elt b) const { return leq_[a * n_ + b]; }
    Elt join2(Elt a, Elt b) const { return join_[a * n_ + b]; }
    Elt meet2(Elt a, Elt b) const { return meet_[a * n_ + b]; }
    Elt bot() const { return bot_; }
    Elt top() const { return top_; }

    Elt join(std::span<const Elt> s) const;
    Elt meet(std::span<const Elt> s) const;

    const std::string& label(Elt a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Transposed order; involutive.
    FinLattice opposite() const;

    /// Empty placeholder; only make() produces usable lattices.
    FinLattice() = default;

private:
    std::size_t n_ = 0;
    std::vector<bool> leq_;  // n*n, row-major
    std::vector<Elt> join_;
    std::vector<Elt> meet_;
    Elt bot_ = 0, top_ = 0;
    std::vector<std::string> labels_;
};

/// Order-preserving map between finite lattices, given by a full table.
struct MonoMap {
    FinLattice dom;
    FinLattice cod;
    std::vector<Elt> table;

    Elt operator()(Elt a) const { return table[a]; }

    /// First monotonicity violation, if any.
    std::optional<Violation> check_monotone() const;
};

/// A MonoMap that preserves all joins, including the empty one.
struct SupMap {
    MonoMap map;

    Elt operator()(Elt a) const { return map(a); }

    /// Checks preservation of joins: exhaustive over subsets for dom size
    /// <= 8, pairs plus bottom otherwise.
    std::optional<Violation> check_sup_preserving() const;
};

/// Endomap with x <= j(x) and j(j(x)) = j(x).
struct ClosureOp {
    MonoMap map;
    Elt operator()(Elt a) const { return map(a); }
};

/// Right adjoint of a sup-preserving map: f*(y) = join{x | f(x) <= y}.
/// Throws ValidationError if f is not sup-preserving; the adjunction
/// f(x) <= y  iff  x <= f*(y) is verified exhaustively after construction.
MonoMap right_adjoint(const SupMap& f);

/// Verdict on the two closure laws, with the first witness on failure.
std::optional<Violation> is_closure_operator(const MonoMap& j);

/// Greatest fixed point of a monotone endomap, by iteration from top.
/// Stationary in at most dom.size() steps (Knaster-Tarski). If iterations
/// is non-null, receives the iteration count.
Elt greatest_fixpoint(const MonoMap& f, std::size_t* iterations = nullptr);

/// Least fixed point, by iteration from bottom.
Elt least_fixpoint(const MonoMap& f, std::size_t* iterations = nullptr);

}  // namespace liftq
