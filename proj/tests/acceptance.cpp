// End-to-end acceptance suite: one verdict line per criterion, exit 0 only
// when every criterion holds.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "liftq/corpus.hpp"
#include "liftq/fixpoint.hpp"
#include "liftq/nucleus.hpp"

using namespace liftq;

namespace {

int failures = 0;

void verdict(int n, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << what;
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

const FinQuantale& builtin(const std::string& name) {
    static CorpusFile corpus = builtin_corpus();
    return find_quantale(corpus, name);
}

// 1. Every bundled quantale revalidates and satisfies the residuation
// adjunction exhaustively.
void criterion1() {
    std::string detail;
    bool ok = true;
    for (const auto& q : builtin_corpus().quantales) {
        std::vector<std::vector<bool>> leq(q.size(), std::vector<bool>(q.size()));
        std::vector<Elt> mult(q.size() * q.size());
        for (Elt a = 0; a < q.size(); ++a)
            for (Elt b = 0; b < q.size(); ++b) {
                leq[a][b] = q.leq(a, b);
                mult[a * q.size() + b] = q.mult(a, b);
            }
        try {
            FinQuantale::make_or_throw(FinLattice::make_or_throw(leq, q.lattice().labels()),
                                       q.unit(), mult);
        } catch (const CheckError& e) {
            ok = false;
            detail = q.name + ": " + e.what();
        }
        for (Elt a = 0; a < q.size() && ok; ++a)
            for (Elt b = 0; b < q.size() && ok; ++b)
                for (Elt c = 0; c < q.size() && ok; ++c)
                    if (q.leq(q.mult(a, c), b) != q.leq(c, q.residual(a, b))) {
                        ok = false;
                        detail = q.name + ": adjunction fails";
                    }
    }
    verdict(1, "quantale laws and residuation adjunction on the full corpus", ok, detail);
}

// 2. Quotienting by double negation yields a quantale that is dualizing at
// the image of omega, for every quantale and every omega.
void criterion2() {
    std::string detail;
    bool ok = true;
    for (const auto& q : builtin_corpus().quantales)
        for (Elt w = 0; w < q.size() && ok; ++w) {
            try {
                auto g = girard_quotient(q, w);
                bool contains = false;
                for (Elt e : g.embedding)
                    if (e == q.double_negation_nucleus(w)(w)) contains = true;
                if (!contains) {
                    ok = false;
                    detail = q.name + ": quotient misses omega";
                }
                if (g.quotient.is_dualizing(g.omega_in_quotient)) {
                    ok = false;
                    detail = q.name + ": quotient not dualizing";
                }
            } catch (const CheckError& e) {
                ok = false;
                detail = q.name + ": " + e.what();
            }
        }
    verdict(2, "double-negation quotient is a dualizing quantale at every omega", ok,
            detail);
}

// 3. Closed structure of the total category over the pointwise instance.
void criterion3() {
    std::string detail;
    bool ok = true;
    for (const char* name : {"b2", "godel3", "lukasiewicz3"}) {
        PowQ P(builtin(name));
        Report rep;
        check_total_basics(P, 2, rep, 1u << 8);
        check_closed_structure(P, 2, rep, 1u << 8);
        check_iota_lax(P, 2, rep, 1u << 6);
        if (!rep.all_pass()) {
            ok = false;
            for (const auto& v : rep.verdicts)
                if (!v.pass) detail = std::string(name) + ": " + v.law + " " + v.witness;
        }
    }
    verdict(3, "closed structure, coherence and internal-hom closed form", ok, detail);
}

// 4. The two dualizing criteria agree everywhere; the truncated-sum chain
// passes at bottom, the min chain fails there with the middle value.
void criterion4() {
    std::string detail;
    bool ok = true;
    for (const auto& q : builtin_corpus().quantales)
        for (Elt w = 0; w < q.size() && ok; ++w) {
            PowQ P(q);
            Report rep;
            check_dualizing(P, DualCandidate{w}, 2, rep);
            for (const auto& v : rep.verdicts)
                if (v.law == "total.dualizing_criteria_agree" && !v.pass) {
                    ok = false;
                    detail = q.name + " omega=" + q.label(w) + ": criteria disagree";
                }
        }
    {
        PowQ P(builtin("lukasiewicz3"));
        Report rep;
        if (ok && !check_dualizing(P, DualCandidate{0}, 2, rep)) {
            ok = false;
            detail = "truncated-sum chain should dualize at bottom";
        }
    }
    {
        PowQ P(builtin("godel3"));
        Report rep;
        if (ok && check_dualizing(P, DualCandidate{0}, 2, rep)) {
            ok = false;
            detail = "min chain should not dualize at bottom";
        }
        if (ok) {
            bool witnessed = false;
            for (const auto& v : rep.verdicts)
                if (v.law == "total.dualizing_inverse" && !v.pass &&
                    v.witness.find("1/2") != std::string::npos)
                    witnessed = true;
            if (!witnessed) {
                ok = false;
                detail = "missing middle-value witness for the min chain";
            }
        }
    }
    verdict(4, "invertibility and double-dual dualizing criteria agree", ok, detail);
}

// 5. The double-negation closure family is a nucleus; its quotient passes
// every lifted law, dualizes, and matches the base quotient at the unit
// object.
void criterion5() {
    std::string detail;
    bool ok = true;
    try {
        auto P = std::make_shared<PowQ>(builtin("godel3"));
        NucleusFamily fam(P, DualCandidate{0});
        Report rep;
        check_nucleus_laws(fam, 2, rep, 1u << 8);
        auto qj = build_qj(fam, 2, 1u << 8);
        if (!check_dualizing(*qj, DualCandidate{0}, 2, rep)) {
            ok = false;
            detail = "quotient not dualizing";
        }
        girard_consistency_check(*qj, builtin("godel3"), 0, rep);
        if (!rep.all_pass()) {
            ok = false;
            for (const auto& v : rep.verdicts)
                if (!v.pass) detail = v.law + " " + v.witness;
        }
    } catch (const CheckError& e) {
        ok = false;
        detail = e.what();
    }
    verdict(5, "nucleus quotient construction on the min chain", ok, detail);
}

// 6. Representation: fixed subsets are exactly the principal downsets,
// order-isomorphically and naturally.
void criterion6() {
    std::string detail;
    bool ok = true;
    for (const char* name : {"lukasiewicz3", "b2"}) {
        auto inner = std::make_shared<PowQ>(builtin(name));
        Report rep;
        representation_check(inner, DualCandidate{0}, 2, rep, 1u << 8);
        if (!rep.all_pass()) {
            ok = false;
            for (const auto& v : rep.verdicts)
                if (!v.pass) detail = std::string(name) + ": " + v.law + " " + v.witness;
        }
    }
    verdict(6, "fixed subsets are the principal downsets, naturally", ok, detail);
}

// 7. Fixed-point lifting: coalgebra category bijection, terminal/initial
// lifts, and the dual computation of the pre-fixed points.
void criterion7() {
    std::string detail;
    bool ok = true;
    try {
        auto P = std::make_shared<PowQ>(builtin("b2"));
        const auto& q = *P->base();
        auto I = FinSet::singleton();
        QMat mult(FinSet::product(I, I), I, &q);
        mult.set(0, 0, q.unit());
        QMat unit = QMat::identity(I, &q);

        std::vector<EndoLift> lifts;
        lifts.push_back(EndoLift::identity_lift(P));
        lifts.push_back(EndoLift::constant_lift(P, I, mult, unit, Elt{1}));

        for (auto& lift : lifts) {
            Report rep;
            check_lift(lift, 2, rep, 1u << 8);
            check_fixpoint_lattices(lift, 2, rep, 1u << 8);
            check_q_mu_duality(lift, 1, rep, 1u << 8);
            enumerate_coalg_category(lift, 1, rep, 1u << 8);
            if (lift.F.kind == EndoFunctor::Kind::constant) {
                auto lf = lift_terminal_coalgebra(lift, Coalg{I, QMat::identity(I, &q)}, 2,
                                                  rep, 1u << 8);
                if (lf.obj.alpha != Elt{1}) {
                    ok = false;
                    detail = "terminal value differs from the lax family constant";
                }
                lift_initial_algebra(lift, Alg{I, QMat::identity(I, &q)}, 2, rep, 1u << 8);
            } else {
                auto E = FinSet::empty();
                lift_terminal_coalgebra(lift, Coalg{E, QMat(E, E, &q)}, 2, rep, 1u << 8);
                lift_initial_algebra(lift, Alg{E, QMat(E, E, &q)}, 2, rep, 1u << 8);
            }
            if (!rep.all_pass()) {
                ok = false;
                for (const auto& v : rep.verdicts)
                    if (!v.pass) detail = lift.show() + ": " + v.law + " " + v.witness;
            }
        }
    } catch (const CheckError& e) {
        ok = false;
        detail = e.what();
    }
    verdict(7, "coalgebra category bijection and terminal/initial lifts", ok, detail);
}

// 8. The up-closed-families instance is lax monoidal and dualizes at the
// family generated by the singleton.
void criterion8() {
    std::string detail;
    bool ok = true;
    Nuts P;
    Report rep;
    check_functoriality(P, 3, rep, 1u << 8);
    check_sup_preservation(P, 3, rep, 1u << 8);
    check_mu_laws(P, 3, rep, 1u << 8);
    check_coherence(P, 3, rep);
    if (!check_dualizing(P, DualCandidate{2}, 2, rep)) {
        ok = false;
        detail = "dual candidate rejected";
    }
    if (!rep.all_pass()) {
        ok = false;
        for (const auto& v : rep.verdicts)
            if (!v.pass) detail = v.law + " " + v.witness;
    }
    verdict(8, "up-closed families instance: lifted laws and dualizing", ok, detail);
}

int run(const std::string& cmd) {
    int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return rc < 0 ? -1 : WEXITSTATUS(rc);
}

// 9. CLI contract: corpus round-trip, exit codes, witness replay.
void criterion9() {
    std::string detail;
    bool ok = true;
    const std::string cli = LIFTQ_CLI_PATH;
    const std::string corpus_dir = LIFTQ_CORPUS_DIR;

    // Round trip through the serializer is semantics-preserving.
    auto file = parse_corpus(corpus_dir + "/lukasiewicz3.q");
    if (!semantically_equal(file, parse_corpus_text(serialize(file)))) {
        ok = false;
        detail = "serialize/parse round trip changed the corpus";
    }

    if (ok && run(cli + " check-quantale " + corpus_dir + "/lukasiewicz3.q") != 0) {
        ok = false;
        detail = "clean corpus file should exit 0";
    }
    if (ok && run(cli + " check-quantale b2") != 0) {
        ok = false;
        detail = "builtin name should exit 0";
    }
    if (ok && run(cli + " check-dualizing godel3 --omega 0 --max-obj 2") != 1) {
        ok = false;
        detail = "violated law should exit 1";
    }
    if (ok && run(cli + " check-quantale nosuch") != 2) {
        ok = false;
        detail = "unusable input should exit 2";
    }
    if (ok && run(cli + " no-such-command") != 2) {
        ok = false;
        detail = "unknown command should exit 2";
    }

    // A recorded failure replays to the same violated inequality.
    const std::string rec = "/tmp/liftq_acceptance_records.json";
    if (ok) {
        run(cli + " check-dualizing godel3 --omega 0 --max-obj 2 --json " + rec);
        if (run(cli + " check-dualizing godel3 --omega 0 --max-obj 2 --replay " + rec) != 1) {
            ok = false;
            detail = "replay of a reproducible failure should exit 1";
        }
        if (ok &&
            run(cli + " check-dualizing godel3 --omega 1/2 --max-obj 2 --replay " + rec) !=
                2) {
            ok = false;
            detail = "replay against different input should exit 2";
        }
        std::remove(rec.c_str());
    }
    verdict(9, "command-line round trip, exit codes and witness replay", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 9 criteria hold\n";
    return 0;
}
