#include "liftq/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace liftq {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

std::size_t index_of_label(const std::vector<std::string>& labels, const std::string& l,
                           std::size_t line) {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw ParseError(line, "unknown element label '" + l + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

FinQuantale build_quantale(const std::string& name, const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& leq_pairs,
                           const std::string& unit_label,
                           const std::vector<std::vector<std::string>>& mult_rows,
                           std::size_t line) {
    const std::size_t n = labels.size();
    if (n == 0) throw ParseError(line, "quantale '" + name + "' has no elements");
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (const auto& [a, b] : leq_pairs)
        leq[index_of_label(labels, a, line)][index_of_label(labels, b, line)] = true;
    // Transitive closure so hand-written files may list covers only.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    if (mult_rows.size() != n)
        throw ParseError(line, "quantale '" + name + "' needs " + std::to_string(n) +
                                   " multiplication rows");
    std::vector<Elt> mult(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mult_rows[i].size() != n)
            throw ParseError(line, "multiplication row of wrong width in '" + name + "'");
        for (std::size_t j = 0; j < n; ++j)
            mult[i * n + j] = index_of_label(labels, mult_rows[i][j], line);
    }
    FinLattice lat = FinLattice::make_or_throw(leq, labels);
    Elt unit = index_of_label(labels, unit_label, line);
    FinQuantale q = FinQuantale::make_or_throw(std::move(lat), unit, mult);
    q.name = name;
    return q;
}

}  // namespace

CorpusFile parse_corpus_text(const std::string& text) {
    CorpusFile out;
    std::istringstream in(text);
    std::string line;
    std::size_t ln = 0;
    bool any = false;

    while (std::getline(in, line)) {
        ++ln;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.resize(pos);
        auto tks = tokens(line);
        if (tks.empty()) continue;
        any = true;
        const std::string& head = tks[0];

        if (head == "quantale") {
            if (tks.size() != 2) throw ParseError(ln, "quantale block needs a name");
            std::string name = tks[1];
            std::vector<std::string> labels;
            std::vector<std::pair<std::string, std::string>> leq_pairs;
            std::string unit_label;
            std::vector<std::vector<std::string>> mult_rows;
            bool closed = false;
            while (std::getline(in, line)) {
                ++ln;
                pos = line.find('#');
                if (pos != std::string::npos) line.resize(pos);
                auto t = tokens(line);
                if (t.empty()) continue;
                if (t[0] == "end") {
                    closed = true;
                    break;
                } else if (t[0] == "elements") {
                    labels.assign(t.begin() + 1, t.end());
                } else if (t[0] == "leq") {
                    if (t.size() != 3) throw ParseError(ln, "leq needs two labels");
                    leq_pairs.emplace_back(t[1], t[2]);
                } else if (t[0] == "unit") {
                    if (t.size() != 2) throw ParseError(ln, "unit needs one label");
                    unit_label = t[1];
                } else if (t[0] == "mult") {
                    mult_rows.emplace_back(t.begin() + 1, t.end());
                } else {
                    throw ParseError(ln, "unknown directive '" + t[0] + "' in quantale block");
                }
            }
            if (!closed) throw ParseError(ln, "unterminated quantale block '" + name + "'");
            if (unit_label.empty()) throw ParseError(ln, "quantale '" + name + "' has no unit");
            out.quantales.push_back(build_quantale(name, labels, leq_pairs, unit_label,
                                                   mult_rows, ln));
        } else if (head == "relation") {
            if (tks.size() != 2) throw ParseError(ln, "relation block needs a name");
            RelationDef r;
            r.name = tks[1];
            bool closed = false;
            std::size_t rows = 0;
            while (std::getline(in, line)) {
                ++ln;
                pos = line.find('#');
                if (pos != std::string::npos) line.resize(pos);
                auto t = tokens(line);
                if (t.empty()) continue;
                if (t[0] == "end") {
                    closed = true;
                    break;
                } else if (t[0] == "quantale" && t.size() == 2) {
                    r.quantale = t[1];
                } else if (t[0] == "dom" && t.size() == 2) {
                    r.dom = std::stoul(t[1]);
                } else if (t[0] == "cod" && t.size() == 2) {
                    r.cod = std::stoul(t[1]);
                } else if (t[0] == "row") {
                    r.entries.insert(r.entries.end(), t.begin() + 1, t.end());
                    ++rows;
                } else {
                    throw ParseError(ln, "unknown directive '" + t[0] + "' in relation block");
                }
            }
            if (!closed) throw ParseError(ln, "unterminated relation block '" + r.name + "'");
            if (rows != r.dom || r.entries.size() != r.dom * r.cod)
                throw ParseError(ln, "relation '" + r.name + "' shape mismatch");
            out.relations.push_back(std::move(r));
        } else if (head == "functor") {
            if (tks.size() != 2) throw ParseError(ln, "functor block needs a name");
            FunctorDef f;
            f.name = tks[1];
            bool closed = false;
            while (std::getline(in, line)) {
                ++ln;
                pos = line.find('#');
                if (pos != std::string::npos) line.resize(pos);
                auto t = tokens(line);
                if (t.empty()) continue;
                if (t[0] == "end") {
                    closed = true;
                    break;
                } else if (t[0] == "kind" && t.size() == 2) {
                    f.kind = t[1];
                } else if (t[0] == "carrier" && t.size() == 2) {
                    f.carrier = std::stoul(t[1]);
                } else if (t[0] == "value") {
                    f.value.assign(t.begin() + 1, t.end());
                } else {
                    throw ParseError(ln, "unknown directive '" + t[0] + "' in functor block");
                }
            }
            if (!closed) throw ParseError(ln, "unterminated functor block '" + f.name + "'");
            if (f.kind != "identity" && f.kind != "constant" && f.kind != "product")
                throw ParseError(ln, "unsupported functor kind '" + f.kind + "'");
            out.functors.push_back(std::move(f));
        } else if (head == "dual") {
            if (tks.size() != 3) throw ParseError(ln, "dual needs a quantale and a label");
            out.duals[tks[1]] = tks[2];
        } else if (head == "instance") {
            if (tks.size() != 2) throw ParseError(ln, "instance needs a name");
            out.instance = tks[1];
        } else if (head == "max-obj") {
            if (tks.size() != 2) throw ParseError(ln, "max-obj needs a number");
            out.max_obj = std::stoul(tks[1]);
        } else {
            throw ParseError(ln, "unknown directive '" + head + "'");
        }
    }
    if (!any) throw ParseError(ln, "empty corpus");

    // Cross references.
    for (const auto& r : out.relations) find_quantale(out, r.quantale);
    for (const auto& [qn, wl] : out.duals) label_index(find_quantale(out, qn), wl);
    return out;
}

CorpusFile parse_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_corpus_text(buf.str());
}

std::string serialize(const CorpusFile& c) {
    std::ostringstream out;
    for (const auto& q : c.quantales) {
        const std::size_t n = q.size();
        out << "quantale " << q.name << "\n";
        out << "elements";
        for (std::size_t i = 0; i < n; ++i) out << " " << q.label(i);
        out << "\n";
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && q.leq(i, j)) out << "leq " << q.label(i) << " " << q.label(j)
                                               << "\n";
        out << "unit " << q.label(q.unit()) << "\n";
        for (std::size_t i = 0; i < n; ++i) {
            out << "mult";
            for (std::size_t j = 0; j < n; ++j) out << " " << q.label(q.mult(i, j));
            out << "\n";
        }
        out << "end\n";
    }
    for (const auto& r : c.relations) {
        out << "relation " << r.name << "\n";
        out << "quantale " << r.quantale << "\n";
        out << "dom " << r.dom << "\n";
        out << "cod " << r.cod << "\n";
        for (std::size_t i = 0; i < r.dom; ++i) {
            out << "row";
            for (std::size_t j = 0; j < r.cod; ++j) out << " " << r.entries[i * r.cod + j];
            out << "\n";
        }
        out << "end\n";
    }
    for (const auto& f : c.functors) {
        out << "functor " << f.name << "\n";
        out << "kind " << f.kind << "\n";
        if (f.kind != "identity") {
            out << "carrier " << f.carrier << "\n";
            out << "value";
            for (const auto& v : f.value) out << " " << v;
            out << "\n";
        }
        out << "end\n";
    }
    for (const auto& [qn, wl] : c.duals) out << "dual " << qn << " " << wl << "\n";
    if (!c.instance.empty()) out << "instance " << c.instance << "\n";
    out << "max-obj " << c.max_obj << "\n";
    return out.str();
}

bool semantically_equal(const CorpusFile& a, const CorpusFile& b) {
    if (a.quantales.size() != b.quantales.size() || a.relations.size() != b.relations.size() ||
        a.functors.size() != b.functors.size() || a.duals != b.duals ||
        a.instance != b.instance || a.max_obj != b.max_obj)
        return false;
    for (std::size_t k = 0; k < a.quantales.size(); ++k) {
        const auto& p = a.quantales[k];
        const auto& q = b.quantales[k];
        if (p.name != q.name || p.size() != q.size() || p.unit() != q.unit()) return false;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p.label(i) != q.label(i)) return false;
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p.leq(i, j) != q.leq(i, j) || p.mult(i, j) != q.mult(i, j)) return false;
        }
    }
    for (std::size_t k = 0; k < a.relations.size(); ++k) {
        const auto& r = a.relations[k];
        const auto& s = b.relations[k];
        if (r.name != s.name || r.quantale != s.quantale || r.dom != s.dom ||
            r.cod != s.cod || r.entries != s.entries)
            return false;
    }
    for (std::size_t k = 0; k < a.functors.size(); ++k) {
        const auto& f = a.functors[k];
        const auto& g = b.functors[k];
        if (f.name != g.name || f.kind != g.kind || f.carrier != g.carrier ||
            f.value != g.value)
            return false;
    }
    return true;
}

CorpusFile builtin_corpus() {
    CorpusFile out;
    auto chain_quantale = [](const std::string& name, std::vector<std::string> labels,
                             Elt unit, const std::function<Elt(Elt, Elt)>& mult) {
        const std::size_t n = labels.size();
        FinLattice lat = FinLattice::chain(n);
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) leq[i][j] = i <= j;
        lat = FinLattice::make_or_throw(leq, std::move(labels));
        std::vector<Elt> table(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) table[i * n + j] = mult(i, j);
        FinQuantale q = FinQuantale::make_or_throw(std::move(lat), unit, table);
        q.name = name;
        return q;
    };

    out.quantales.push_back(
        chain_quantale("b2", {"0", "1"}, 1, [](Elt a, Elt b) { return std::min(a, b); }));
    out.quantales.push_back(chain_quantale("godel3", {"0", "1/2", "1"}, 2,
                                           [](Elt a, Elt b) { return std::min(a, b); }));
    // n-chain encodings of the unit-interval truncated sum a*b = max(0, a+b-1)
    // with top as unit.
    out.quantales.push_back(chain_quantale("lukasiewicz3", {"0", "1/2", "1"}, 2,
                                           [](Elt a, Elt b) -> Elt {
                                               return a + b >= 2 ? a + b - 2 : 0;
                                           }));
    out.quantales.push_back(chain_quantale("lukasiewicz4", {"0", "1/3", "2/3", "1"}, 3,
                                           [](Elt a, Elt b) -> Elt {
                                               return a + b >= 3 ? a + b - 3 : 0;
                                           }));
    {
        // 3-chain under max with unit 0. Multiplication by x must send the
        // empty join to itself, so 2 is the bottom and 0 the top: max is the
        // meet of this order and 0 its unit.
        std::vector<std::vector<bool>> leq(3, std::vector<bool>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) leq[i][j] = i >= j;
        std::vector<Elt> table(9);
        for (Elt a = 0; a < 3; ++a)
            for (Elt b = 0; b < 3; ++b) table[a * 3 + b] = std::max(a, b);
        FinQuantale q = FinQuantale::make_or_throw(
            FinLattice::make_or_throw(leq, {"0", "1", "2"}), 0, table);
        q.name = "maxchain3";
        out.quantales.push_back(std::move(q));
    }

    {
        // Subsets of the 2-element group; multiplication by pointwise group
        // addition, unit {0}. Element i is the bitmask of its members.
        std::vector<std::string> labels = {"{}", "{0}", "{1}", "{0,1}"};
        std::vector<std::vector<bool>> leq(4, std::vector<bool>(4));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) leq[i][j] = (i & ~j) == 0;
        std::vector<Elt> table(16, 0);
        for (Elt a = 0; a < 4; ++a)
            for (Elt b = 0; b < 4; ++b) {
                Elt r = 0;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y)
                        if ((a >> x & 1) && (b >> y & 1)) r |= Elt{1} << (x ^ y);
                table[a * 4 + b] = r;
            }
        FinQuantale q = FinQuantale::make_or_throw(
            FinLattice::make_or_throw(leq, std::move(labels)), 1, table);
        q.name = "powz2";
        out.quantales.push_back(std::move(q));
    }
    return out;
}

const FinQuantale& find_quantale(const CorpusFile& c, const std::string& name) {
    for (const auto& q : c.quantales)
        if (q.name == name) return q;
    throw DanglingReference("no quantale named '" + name + "'");
}

QMat instantiate(const RelationDef& r, const FinQuantale& q) {
    QMat m(FinSet::of(r.dom), FinSet::of(r.cod), &q);
    for (std::size_t i = 0; i < r.dom; ++i)
        for (std::size_t j = 0; j < r.cod; ++j)
            m.set(i, j, label_index(q, r.entries[i * r.cod + j]));
    return m;
}

Elt label_index(const FinQuantale& q, const std::string& label) {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q.label(i) == label) return i;
    throw DanglingReference("no element labeled '" + label + "' in " + q.name);
}

}  // namespace liftq
