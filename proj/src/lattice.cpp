#include "liftq/lattice.hpp"

#include <algorithm>

namespace liftq {

namespace {

std::string pair_witness(const std::vector<std::string>& lbl, Elt a, Elt b) {
    return "(" + lbl[a] + ", " + lbl[b] + ")";
}

std::string set_witness(const std::vector<std::string>& lbl, const std::vector<Elt>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += lbl[s[i]];
    }
    return out + "}";
}

// Least upper bound of S by scanning all upper bounds; nullopt if none or
// if the set of upper bounds has no least element.
std::optional<Elt> lub(const std::vector<bool>& leq, std::size_t n, const std::vector<Elt>& s) {
    std::vector<Elt> ubs;
    for (Elt u = 0; u < n; ++u) {
        bool ok = true;
        for (Elt x : s) ok = ok && leq[x * n + u];
        if (ok) ubs.push_back(u);
    }
    for (Elt u : ubs) {
        bool least = true;
        for (Elt v : ubs) least = least && leq[u * n + v];
        if (least) return u;
    }
    return std::nullopt;
}

std::optional<Elt> glb(const std::vector<bool>& leq, std::size_t n, const std::vector<Elt>& s) {
    std::vector<Elt> lbs;
    for (Elt l = 0; l < n; ++l) {
        bool ok = true;
        for (Elt x : s) ok = ok && leq[l * n + x];
        if (ok) lbs.push_back(l);
    }
    for (Elt l : lbs) {
        bool greatest = true;
        for (Elt m : lbs) greatest = greatest && leq[m * n + l];
        if (greatest) return l;
    }
    return std::nullopt;
}

}  // namespace

std::variant<FinLattice, Violation> FinLattice::make(
    const std::vector<std::vector<bool>>& leq, std::vector<std::string> labels) {
    const std::size_t n = leq.size();
    if (n == 0) return Violation{"NotAPoset", "empty carrier"};
    for (const auto& row : leq)
        if (row.size() != n) return Violation{"NotAPoset", "order matrix not square"};
    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    }
    std::vector<bool> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = leq[i][j];

    for (Elt a = 0; a < n; ++a)
        if (!m[a * n + a]) return Violation{"NotAPoset", "not reflexive at " + labels[a]};
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            if (a != b && m[a * n + b] && m[b * n + a])
                return Violation{"NotAPoset", "not antisymmetric at " + pair_witness(labels, a, b)};
            if (m[a * n + b])
                for (Elt c = 0; c < n; ++c)
                    if (m[b * n + c] && !m[a * n + c])
                        return Violation{"NotAPoset",
                                         "not transitive at " + pair_witness(labels, a, b) +
                                             " <= " + labels[c]};
        }

    // All binary joins/meets plus the empty join/meet must exist; for n <= 8
    // every subset is checked directly.
    FinLattice L;
    L.n_ = n;
    L.leq_ = std::move(m);
    L.labels_ = std::move(labels);
    L.join_.assign(n * n, 0);
    L.meet_.assign(n * n, 0);
    auto bot = lub(L.leq_, n, {});
    if (!bot) return Violation{"NoJoin", "{} (no bottom)"};
    auto top = glb(L.leq_, n, {});
    if (!top) return Violation{"NoMeet", "{} (no top)"};
    L.bot_ = *bot;
    L.top_ = *top;
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            auto j = lub(L.leq_, n, {a, b});
            if (!j) return Violation{"NoJoin", set_witness(L.labels_, {a, b})};
            auto k = glb(L.leq_, n, {a, b});
            if (!k) return Violation{"NoMeet", set_witness(L.labels_, {a, b})};
            L.join_[a * n + b] = *j;
            L.meet_[a * n + b] = *k;
        }
    if (n <= 8) {
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            std::vector<Elt> s;
            for (Elt i = 0; i < n; ++i)
                if (mask & (1ull << i)) s.push_back(i);
            if (!lub(L.leq_, n, s)) return Violation{"NoJoin", set_witness(L.labels_, s)};
            if (!glb(L.leq_, n, s)) return Violation{"NoMeet", set_witness(L.labels_, s)};
        }
    }
    return L;
}

FinLattice FinLattice::make_or_throw(const std::vector<std::vector<bool>>& leq,
                                     std::vector<std::string> labels) {
    auto r = make(leq, std::move(labels));
    if (auto* v = std::get_if<Violation>(&r)) throw ValidationError(*v);
    return std::get<FinLattice>(std::move(r));
}

FinLattice FinLattice::chain(std::size_t n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
    return make_or_throw(leq);
}

Elt FinLattice::join(std::span<const Elt> s) const {
    Elt acc = bot_;
    for (Elt x : s) acc = join2(acc, x);
    return acc;
}

Elt FinLattice::meet(std::span<const Elt> s) const {
    Elt acc = top_;
    for (Elt x : s) acc = meet2(acc, x);
    return acc;
}

FinLattice FinLattice::opposite() const {
    std::vector<std::vector<bool>> t(n_, std::vector<bool>(n_));
    for (Elt a = 0; a < n_; ++a)
        for (Elt b = 0; b < n_; ++b) t[a][b] = leq_[b * n_ + a];
    return make_or_throw(t, labels_);
}

std::optional<Violation> MonoMap::check_monotone() const {
    for (Elt a = 0; a < dom.size(); ++a)
        for (Elt b = 0; b < dom.size(); ++b)
            if (dom.leq(a, b) && !cod.leq(table[a], table[b]))
                return Violation{"NotMonotone",
                                 dom.label(a) + " <= " + dom.label(b) + " but f(a) !<= f(b)"};
    return std::nullopt;
}

std::optional<Violation> SupMap::check_sup_preserving() const {
    const auto& dom = map.dom;
    const auto& cod = map.cod;
    if (auto v = map.check_monotone()) return v;
    if (map(dom.bot()) != cod.bot())
        return Violation{"NotSupPreserving", "{} (bottom not preserved)"};
    auto check_set = [&](const std::vector<Elt>& s) -> bool {
        std::vector<Elt> im;
        for (Elt x : s) im.push_back(map(x));
        return map(dom.join(s)) == cod.join(im);
    };
    if (dom.size() <= 8) {
        for (std::uint64_t mask = 0; mask < (1ull << dom.size()); ++mask) {
            std::vector<Elt> s;
            for (Elt i = 0; i < dom.size(); ++i)
                if (mask & (1ull << i)) s.push_back(i);
            if (!check_set(s)) {
                std::string w = "{";
                for (std::size_t i = 0; i < s.size(); ++i)
                    w += (i ? ", " : "") + dom.label(s[i]);
                return Violation{"NotSupPreserving", w + "}"};
            }
        }
    } else {
        for (Elt a = 0; a < dom.size(); ++a)
            for (Elt b = 0; b < dom.size(); ++b)
                if (!check_set({a, b}))
                    return Violation{"NotSupPreserving",
                                     "{" + dom.label(a) + ", " + dom.label(b) + "}"};
    }
    return std::nullopt;
}

MonoMap right_adjoint(const SupMap& f) {
    if (auto v = f.check_sup_preserving()) throw ValidationError(*v);
    const auto& dom = f.map.dom;
    const auto& cod = f.map.cod;
    MonoMap adj{cod, dom, std::vector<Elt>(cod.size())};
    for (Elt y = 0; y < cod.size(); ++y) {
        std::vector<Elt> s;
        for (Elt x = 0; x < dom.size(); ++x)
            if (cod.leq(f(x), y)) s.push_back(x);
        adj.table[y] = dom.join(s);
    }
    for (Elt x = 0; x < dom.size(); ++x)
        for (Elt y = 0; y < cod.size(); ++y)
            if (cod.leq(f(x), y) != dom.leq(x, adj(y)))
                throw InternalLawViolation("adjunction law failed at (" + dom.label(x) + ", " +
                                           cod.label(y) + ")");
    return adj;
}

std::optional<Violation> is_closure_operator(const MonoMap& j) {
    if (j.dom.size() != j.cod.size())
        return Violation{"NotAnEndomap", "dom and cod differ"};
    if (auto v = j.check_monotone()) return v;
    for (Elt x = 0; x < j.dom.size(); ++x) {
        if (!j.dom.leq(x, j(x)))
            return Violation{"NotInflationary", j.dom.label(x)};
        if (j(j(x)) != j(x))
            return Violation{"NotIdempotent", j.dom.label(x)};
    }
    return std::nullopt;
}

Elt greatest_fixpoint(const MonoMap& f, std::size_t* iterations) {
    Elt x = f.dom.top();
    std::size_t it = 0;
    for (;;) {
        Elt y = f(x);
        ++it;
        if (y == x) break;
        x = y;
    }
    if (iterations) *iterations = it;
    return x;
}

Elt least_fixpoint(const MonoMap& f, std::size_t* iterations) {
    Elt x = f.dom.bot();
    std::size_t it = 0;
    for (;;) {
        Elt y = f(x);
        ++it;
        if (y == x) break;
        x = y;
    }
    if (iterations) *iterations = it;
    return x;
}

}  // namespace liftq
