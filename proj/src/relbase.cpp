#include "liftq/relbase.hpp"

#include <algorithm>
#include <numeric>

namespace liftq {

FinSet FinSet::of(std::size_t n, const std::string& prefix) {
    FinSet s;
    s.size = n;
    for (std::size_t i = 0; i < n; ++i) s.labels.push_back(prefix + std::to_string(i + 1));
    return s;
}

FinSet FinSet::singleton() { return FinSet{1, {"*"}}; }

FinSet FinSet::product(const FinSet& X, const FinSet& Y) {
    FinSet s;
    s.size = X.size * Y.size;
    s.labels.reserve(s.size);
    for (std::size_t x = 0; x < X.size; ++x)
        for (std::size_t y = 0; y < Y.size; ++y)
            s.labels.push_back("(" + X.labels[x] + "," + Y.labels[y] + ")");
    return s;
}

QMat QMat::identity(const FinSet& X, const FinQuantale* q) {
    QMat m(X, X, q);
    for (std::size_t x = 0; x < X.size; ++x) m.set(x, x, q->unit());
    return m;
}

QMat QMat::then(const QMat& g) const {
    if (cod_.size != g.dom_.size || q_ != g.q_)
        throw ShapeMismatch("compose: middle object or quantale mismatch");
    QMat out(dom_, g.cod_, q_);
    for (std::size_t x = 0; x < dom_.size; ++x)
        for (std::size_t z = 0; z < g.cod_.size; ++z) {
            Elt acc = q_->bot();
            for (std::size_t y = 0; y < cod_.size; ++y)
                acc = q_->join2(acc, q_->mult(at(x, y), g.at(y, z)));
            out.set(x, z, acc);
        }
    return out;
}

QMat QMat::converse() const {
    QMat out(cod_, dom_, q_);
    for (std::size_t x = 0; x < dom_.size; ++x)
        for (std::size_t y = 0; y < cod_.size; ++y) out.set(y, x, at(x, y));
    return out;
}

QMat QMat::tensor(const QMat& g) const {
    if (q_ != g.q_) throw ShapeMismatch("tensor: quantale mismatch");
    QMat out(FinSet::product(dom_, g.dom_), FinSet::product(cod_, g.cod_), q_);
    for (std::size_t x = 0; x < dom_.size; ++x)
        for (std::size_t u = 0; u < g.dom_.size; ++u)
            for (std::size_t y = 0; y < cod_.size; ++y)
                for (std::size_t v = 0; v < g.cod_.size; ++v)
                    out.set(x * g.dom_.size + u, y * g.cod_.size + v,
                            q_->mult(at(x, y), g.at(u, v)));
    return out;
}

QMat QMat::internal_hom(const QMat& g) const { return converse().tensor(g); }

bool QMat::is_struct_iso() const {
    if (dom_.size != cod_.size) return false;
    std::vector<bool> hit(cod_.size, false);
    for (std::size_t x = 0; x < dom_.size; ++x) {
        std::size_t units = 0, target = 0;
        for (std::size_t y = 0; y < cod_.size; ++y) {
            if (at(x, y) == q_->unit()) {
                ++units;
                target = y;
            } else if (at(x, y) != q_->bot()) {
                return false;
            }
        }
        if (units != 1 || hit[target]) return false;
        hit[target] = true;
    }
    return true;
}

QMat QMat::inverse() const {
    if (!is_struct_iso()) throw ShapeMismatch("inverse: not a structural bijection");
    return converse();
}

std::string QMat::show() const {
    std::string out = "[";
    for (std::size_t x = 0; x < dom_.size; ++x) {
        if (x) out += "; ";
        for (std::size_t y = 0; y < cod_.size; ++y) {
            if (y) out += " ";
            out += q_->label(at(x, y));
        }
    }
    return out + "]";
}

QMat structural(StructKind kind, const std::vector<FinSet>& o, const FinQuantale* q) {
    const Elt e = q->unit();
    switch (kind) {
        case StructKind::associator: {
            const FinSet &X = o.at(0), &Y = o.at(1), &Z = o.at(2);
            QMat m(FinSet::product(FinSet::product(X, Y), Z),
                   FinSet::product(X, FinSet::product(Y, Z)), q);
            for (std::size_t x = 0; x < X.size; ++x)
                for (std::size_t y = 0; y < Y.size; ++y)
                    for (std::size_t z = 0; z < Z.size; ++z)
                        m.set((x * Y.size + y) * Z.size + z, x * Y.size * Z.size + y * Z.size + z,
                              e);
            return m;
        }
        case StructKind::left_unitor: {
            const FinSet& X = o.at(0);
            QMat m(FinSet::product(FinSet::singleton(), X), X, q);
            for (std::size_t x = 0; x < X.size; ++x) m.set(x, x, e);
            return m;
        }
        case StructKind::right_unitor: {
            const FinSet& X = o.at(0);
            QMat m(FinSet::product(X, FinSet::singleton()), X, q);
            for (std::size_t x = 0; x < X.size; ++x) m.set(x, x, e);
            return m;
        }
        case StructKind::symmetry: {
            const FinSet &X = o.at(0), &Y = o.at(1);
            QMat m(FinSet::product(X, Y), FinSet::product(Y, X), q);
            for (std::size_t x = 0; x < X.size; ++x)
                for (std::size_t y = 0; y < Y.size; ++y)
                    m.set(x * Y.size + y, y * X.size + x, e);
            return m;
        }
        case StructKind::double_dual_j: {
            // x -> ((x,*),*) in (X x 1) x 1.
            const FinSet& X = o.at(0);
            QMat m(X, dual_obj(dual_obj(X)), q);
            for (std::size_t x = 0; x < X.size; ++x) m.set(x, x, e);
            return m;
        }
        case StructKind::curry_iso: {
            // ((x,y),z) -> (y,(x,z)).
            const FinSet &X = o.at(0), &Y = o.at(1), &Z = o.at(2);
            QMat m(hom_obj(FinSet::product(X, Y), Z), hom_obj(Y, hom_obj(X, Z)), q);
            for (std::size_t x = 0; x < X.size; ++x)
                for (std::size_t y = 0; y < Y.size; ++y)
                    for (std::size_t z = 0; z < Z.size; ++z)
                        m.set((x * Y.size + y) * Z.size + z,
                              y * X.size * Z.size + x * Z.size + z, e);
            return m;
        }
    }
    throw ShapeMismatch("unknown structural kind");
}

QMat ev_relation(const FinSet& X, const FinSet& Y, const FinQuantale* q) {
    QMat m(FinSet::product(X, hom_obj(X, Y)), Y, q);
    for (std::size_t x = 0; x < X.size; ++x)
        for (std::size_t y = 0; y < Y.size; ++y)
            m.set(x * X.size * Y.size + x * Y.size + y, y, q->unit());
    return m;
}

QMat eta_relation(const FinSet& X, const FinSet& Y, const FinQuantale* q) {
    QMat m(Y, hom_obj(X, FinSet::product(X, Y)), q);
    for (std::size_t x = 0; x < X.size; ++x)
        for (std::size_t y = 0; y < Y.size; ++y)
            m.set(y, x * X.size * Y.size + x * Y.size + y, q->unit());
    return m;
}

std::vector<QMat> all_mats(const FinSet& X, const FinSet& Y, const FinQuantale* q,
                           std::uint64_t limit) {
    const std::size_t cells = X.size * Y.size;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        count *= q->size();
        if (count > limit)
            throw CarrierTooLarge("morphism enumeration exceeds limit " + std::to_string(limit));
    }
    std::vector<QMat> out;
    out.reserve(count);
    std::vector<Elt> digits(cells, 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        QMat m(X, Y, q);
        for (std::size_t x = 0; x < X.size; ++x)
            for (std::size_t y = 0; y < Y.size; ++y) m.set(x, y, digits[x * Y.size + y]);
        out.push_back(std::move(m));
        for (std::size_t i = 0; i < cells; ++i) {
            if (++digits[i] < q->size()) break;
            digits[i] = 0;
        }
    }
    return out;
}

std::vector<QMat> all_iso_mats(const FinSet& X, const FinSet& Y, const FinQuantale* q) {
    std::vector<QMat> out;
    if (X.size != Y.size) return out;
    std::vector<std::size_t> perm(X.size);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        QMat m(X, Y, q);
        for (std::size_t x = 0; x < X.size; ++x) m.set(x, perm[x], q->unit());
        out.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace liftq
