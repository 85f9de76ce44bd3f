#include "liftq/quantale.hpp"

#include <algorithm>

namespace liftq {

std::variant<FinQuantale, Violation> FinQuantale::make(FinLattice lat, Elt unit,
                                                       const std::vector<Elt>& mult) {
    const std::size_t n = lat.size();
    if (mult.size() != n * n) return Violation{"BadTable", "mult table size mismatch"};
    for (Elt v : mult)
        if (v >= n) return Violation{"BadTable", "mult entry out of range"};
    auto lbl = [&](Elt a) { return lat.label(a); };
    auto m = [&](Elt a, Elt b) { return mult[a * n + b]; };

    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            if (m(a, b) != m(b, a))
                return Violation{"NotCommutative", "(" + lbl(a) + ", " + lbl(b) + ")"};
            for (Elt c = 0; c < n; ++c)
                if (m(m(a, b), c) != m(a, m(b, c)))
                    return Violation{"NotAssociative",
                                     "(" + lbl(a) + ", " + lbl(b) + ", " + lbl(c) + ")"};
        }
    for (Elt a = 0; a < n; ++a)
        if (m(unit, a) != a) return Violation{"UnitFails", lbl(a)};

    // Sup-preservation in each variable: all subsets for n <= 8, pairs plus
    // the empty join for larger carriers.
    auto bilinear_on = [&](Elt a, const std::vector<Elt>& s) -> bool {
        std::vector<Elt> im;
        for (Elt x : s) im.push_back(m(a, x));
        return m(a, lat.join(s)) == lat.join(im);
    };
    if (n <= 8) {
        for (Elt a = 0; a < n; ++a)
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                std::vector<Elt> s;
                for (Elt i = 0; i < n; ++i)
                    if (mask & (1ull << i)) s.push_back(i);
                if (!bilinear_on(a, s)) {
                    std::string w = lbl(a) + " * join{";
                    for (std::size_t i = 0; i < s.size(); ++i) w += (i ? ", " : "") + lbl(s[i]);
                    return Violation{"NotBilinear", w + "}"};
                }
            }
    } else {
        for (Elt a = 0; a < n; ++a) {
            if (!bilinear_on(a, {}))
                return Violation{"NotBilinear", lbl(a) + " * bottom"};
            for (Elt b = 0; b < n; ++b)
                for (Elt c = 0; c < n; ++c)
                    if (!bilinear_on(a, {b, c}))
                        return Violation{"NotBilinear",
                                         lbl(a) + " * join{" + lbl(b) + ", " + lbl(c) + "}"};
        }
    }

    FinQuantale q;
    q.lat_ = std::move(lat);
    q.unit_ = unit;
    q.mult_ = mult;
    q.res_.assign(n * n, 0);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            std::vector<Elt> s;
            for (Elt c = 0; c < n; ++c)
                if (q.lat_.leq(m(a, c), b)) s.push_back(c);
            q.res_[a * n + b] = q.lat_.join(s);
        }
    // Residuation adjunction is a theorem given bilinearity; verify anyway.
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c)
                if (q.lat_.leq(m(a, c), b) != q.lat_.leq(c, q.res_[a * n + b]))
                    throw InternalLawViolation("residuation adjunction failed at (" + lbl(a) +
                                               ", " + lbl(b) + ", " + lbl(c) + ")");
    return q;
}

FinQuantale FinQuantale::make_or_throw(FinLattice lat, Elt unit, const std::vector<Elt>& mult) {
    auto r = make(std::move(lat), unit, mult);
    if (auto* v = std::get_if<Violation>(&r)) throw ValidationError(*v);
    return std::get<FinQuantale>(std::move(r));
}

FinQuantale FinQuantale::boolean() {
    auto lat = FinLattice::make_or_throw({{true, true}, {false, true}}, {"0", "1"});
    auto q = make_or_throw(std::move(lat), 1, {0, 0, 0, 1});
    q.name = "b2";
    return q;
}

std::optional<Elt> FinQuantale::is_dualizing(Elt omega) const {
    for (Elt a = 0; a < size(); ++a)
        if (residual(residual(a, omega), omega) != a) return a;
    return std::nullopt;
}

ClosureOp FinQuantale::double_negation_nucleus(Elt omega) const {
    MonoMap j{lat_, lat_, std::vector<Elt>(size())};
    for (Elt a = 0; a < size(); ++a) j.table[a] = residual(residual(a, omega), omega);
    if (auto v = is_closure_operator(j))
        throw InternalLawViolation("double negation not a closure operator: " + v->law + " at " +
                                   v->witness);
    for (Elt a = 0; a < size(); ++a)
        for (Elt b = 0; b < size(); ++b)
            if (!leq(mult(j.table[a], j.table[b]), j.table[mult(a, b)]))
                throw InternalLawViolation("nucleus law failed at (" + label(a) + ", " + label(b) +
                                           ")");
    return ClosureOp{std::move(j)};
}

GirardQuotient girard_quotient(const FinQuantale& q, Elt omega) {
    auto j = q.double_negation_nucleus(omega);
    std::vector<Elt> fixed;
    for (Elt a = 0; a < q.size(); ++a)
        if (j(a) == a) fixed.push_back(a);

    const std::size_t m = fixed.size();
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back(q.label(fixed[i]));
        for (std::size_t k = 0; k < m; ++k) leq[i][k] = q.leq(fixed[i], fixed[k]);
    }
    auto lat = FinLattice::make_or_throw(leq, labels);

    auto index_of = [&](Elt parent) {
        auto it = std::find(fixed.begin(), fixed.end(), parent);
        if (it == fixed.end())
            throw InternalLawViolation("nucleus image escaped its fixed points");
        return static_cast<Elt>(it - fixed.begin());
    };
    std::vector<Elt> mult(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            mult[i * m + k] = index_of(j(q.mult(fixed[i], fixed[k])));

    auto quot = FinQuantale::make(std::move(lat), index_of(j(q.unit())), mult);
    if (auto* v = std::get_if<Violation>(&quot))
        throw InternalLawViolation("quotient fails quantale laws: " + v->law + " at " +
                                   v->witness);
    GirardQuotient out{std::get<FinQuantale>(std::move(quot)), fixed, index_of(omega)};
    out.quotient.name = q.name + "_girard";
    if (auto w = out.quotient.is_dualizing(out.omega_in_quotient))
        throw InternalLawViolation("quotient not dualizing at omega, witness " +
                                   out.quotient.label(*w));
    return out;
}

}  // namespace liftq
