#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liftq/corpus.hpp"
#include "liftq/fixpoint.hpp"
#include "liftq/nucleus.hpp"

namespace {

using namespace liftq;

struct Options {
    std::string corpus;
    std::string instance = "powq";
    std::string omega;
    std::size_t max_obj = 2;
    unsigned parallel = 1;
    std::string json_path;
    std::string replay_path;
};

/// Resolves the positional corpus argument: an existing file is parsed, any
/// other name selects one built-in quantale.
CorpusFile load_corpus(const std::string& name) {
    if (std::filesystem::exists(name)) return parse_corpus(name);
    CorpusFile all = builtin_corpus();
    CorpusFile out;
    out.instance = all.instance;
    out.max_obj = all.max_obj;
    for (auto& q : all.quantales)
        if (q.name == name) out.quantales.push_back(std::move(q));
    if (out.quantales.empty())
        throw DanglingReference("no corpus file or built-in quantale named '" + name + "'");
    return out;
}

std::shared_ptr<const Presheaf> make_presheaf(const Options& opt, const FinQuantale& q) {
    if (opt.instance == "powq") return std::make_shared<PowQ>(q);
    if (opt.instance == "nuts") {
        if (q.size() != 2)
            throw DanglingReference("the nuts instance is defined over the two-element base");
        return std::make_shared<Nuts>();
    }
    if (opt.instance == "orth") return std::make_shared<Orth>(q);
    throw DanglingReference("unknown instance '" + opt.instance + "'");
}

/// powq takes a quantale label; the bitmask instances take a raw code and
/// default to their unit.
DualCandidate resolve_omega(const Options& opt, const Presheaf& P, const FinQuantale& q) {
    if (opt.omega.empty()) {
        if (opt.instance == "powq")
            throw DanglingReference("--omega is required for the powq instance");
        return DualCandidate{P.unit_elt()};
    }
    if (opt.instance == "powq") return DualCandidate{label_index(q, opt.omega)};
    return DualCandidate{static_cast<Elt>(std::stoull(opt.omega))};
}

void attach_meta(Report& rep, const std::string& command, const CorpusFile& corpus,
                 const Options& opt) {
    rep.command = command;
    rep.input_digest = fnv1a(serialize(corpus) + command + opt.instance + opt.omega +
                             std::to_string(opt.max_obj));
}

int finish(Report& rep, const Options& opt) {
    rep.print(std::cout);
    if (!opt.json_path.empty()) {
        std::ofstream out(opt.json_path);
        out << rep.to_json_records();
    }
    if (!opt.replay_path.empty()) {
        std::ifstream in(opt.replay_path);
        if (!in) {
            std::cerr << "cannot open replay file " << opt.replay_path << "\n";
            return 2;
        }
        std::string line;
        bool any_fail = false;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded() || !rec.contains("law")) {
                std::cerr << "malformed replay record\n";
                return 2;
            }
            if (rec.value("pass", true)) continue;
            any_fail = true;
            bool reproduced = false;
            for (const auto& v : rep.verdicts)
                if (v.law == rec["law"] && !v.pass && v.witness == rec.value("witness", ""))
                    reproduced = true;
            if (!reproduced) {
                std::cerr << "replay mismatch: " << rec["law"].get<std::string>()
                          << " did not reproduce its witness\n";
                return 2;
            }
        }
        if (any_fail) {
            std::cout << "REPLAY all recorded witnesses reproduced\n";
            return 1;
        }
    }
    return rep.all_pass() ? 0 : 1;
}

void run_check_quantale(const CorpusFile& corpus, Report& rep) {
    for (const auto& q : corpus.quantales) {
        const std::size_t n = q.size();
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
        std::vector<Elt> table(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                leq[i][j] = q.leq(i, j);
                table[i * n + j] = q.mult(i, j);
            }
        std::string budget = "all elements of " + q.name;
        auto lat = FinLattice::make(leq, q.lattice().labels());
        if (auto* viol = std::get_if<Violation>(&lat)) {
            rep.fail("quantale.laws", "lattice and quantale axioms", budget,
                     viol->law + ": " + viol->witness);
            continue;
        }
        auto made = FinQuantale::make(std::get<FinLattice>(std::move(lat)), q.unit(), table);
        if (auto* viol = std::get_if<Violation>(&made)) {
            rep.fail("quantale.laws", "lattice and quantale axioms", budget,
                     viol->law + ": " + viol->witness);
            continue;
        }
        rep.pass("quantale.laws", "lattice and quantale axioms", budget);

        std::optional<Violation> vres;
        for (Elt a = 0; a < n; ++a)
            for (Elt b = 0; b < n; ++b)
                for (Elt c = 0; c < n; ++c)
                    if (!vres &&
                        q.leq(q.mult(a, c), b) != q.leq(c, q.residual(a, b)))
                        vres = Violation{"residuation adjunction fails",
                                         q.label(a) + ", " + q.label(b) + ", " + q.label(c)};
        rep.law("quantale.residuation", "multiplication is left adjoint to the residual",
                budget, vres);
    }
}

void run_girard(const CorpusFile& corpus, const Options& opt, Report& rep) {
    for (const auto& q : corpus.quantales) {
        std::vector<Elt> omegas;
        if (opt.omega.empty())
            for (Elt w = 0; w < q.size(); ++w) omegas.push_back(w);
        else
            omegas.push_back(label_index(q, opt.omega));
        for (Elt w : omegas) {
            std::string budget = q.name + " at omega=" + q.label(w);
            try {
                auto g = girard_quotient(q, w);
                std::cout << "quotient of " << q.name << " at " << q.label(w) << ":";
                for (Elt e : g.embedding) std::cout << " " << q.label(e);
                std::cout << "\n";
                for (std::size_t i = 0; i < g.quotient.size(); ++i) {
                    std::cout << "  mult";
                    for (std::size_t j = 0; j < g.quotient.size(); ++j)
                        std::cout << " " << g.quotient.label(g.quotient.mult(i, j));
                    std::cout << "\n";
                }
                bool contains =
                    std::find(g.embedding.begin(), g.embedding.end(), w) != g.embedding.end();
                bool dualizing = !g.quotient.is_dualizing(g.omega_in_quotient).has_value();
                if (contains && dualizing)
                    rep.pass("quantale.girard", "double negation fixed points form a quantale"
                                                " with a dualizing element",
                             budget);
                else
                    rep.fail("quantale.girard", "double negation fixed points form a quantale"
                                                " with a dualizing element",
                             budget, contains ? "omega not dualizing in the quotient"
                                              : "omega missing from the quotient");
            } catch (const CheckError& e) {
                rep.fail("quantale.girard", "quotient construction", budget, e.what());
            }
        }
    }
}

EndoLift make_endolift(const FunctorDef& f, std::shared_ptr<const Presheaf> P,
                       const FinQuantale& q, const PowQ* pq) {
    if (f.kind == "identity") return EndoLift::identity_lift(std::move(P));
    FinSet A = FinSet::of(f.carrier == 0 ? 1 : f.carrier);
    // Comonoid data on A; unused by the lifting checks, which act through
    // the functor's object and morphism parts only.
    QMat mult(FinSet::product(A, A), A, &q);
    for (std::size_t a = 0; a < A.size; ++a) mult.set(a * A.size + a, a, q.unit());
    QMat unit(FinSet::singleton(), A, &q);
    for (std::size_t a = 0; a < A.size; ++a) unit.set(0, a, q.unit());
    Elt val;
    if (!f.value.empty()) {
        if (!pq || f.value.size() != A.size)
            throw DanglingReference("functor '" + f.name +
                                    "' values need the powq instance and one label per point");
        std::vector<Elt> digits;
        for (const auto& l : f.value) digits.push_back(label_index(q, l));
        val = pq->encode(digits);
    } else {
        val = P->top(A);
    }
    if (f.kind == "constant")
        return EndoLift::constant_lift(std::move(P), A, std::move(mult), std::move(unit), val);
    return EndoLift::product_lift(std::move(P), A, std::move(mult), std::move(unit), val);
}

void run_fixpoint(const CorpusFile& corpus, const Options& opt, Report& rep) {
    const FinQuantale& q = corpus.quantales.front();
    auto P = make_presheaf(opt, q);
    const auto* pq = dynamic_cast<const PowQ*>(P.get());
    std::vector<FunctorDef> specs = corpus.functors;
    if (specs.empty()) {
        specs.push_back(FunctorDef{"id", "identity", 0, {}});
        specs.push_back(FunctorDef{"const1", "constant", 1, {}});
    }
    for (const auto& spec : specs) {
        EndoLift lift = make_endolift(spec, P, q, pq);
        check_lift(lift, opt.max_obj, rep);
        check_fixpoint_lattices(lift, opt.max_obj, rep);
        check_q_mu_duality(lift, std::min<std::size_t>(opt.max_obj, 1), rep);
        enumerate_coalg_category(lift, std::min<std::size_t>(opt.max_obj, 1), rep);
        const FinQuantale* base = P->base();
        if (spec.kind == "constant") {
            FinSet A = lift.F.A;
            lift_terminal_coalgebra(lift, Coalg{A, QMat::identity(A, base)}, opt.max_obj,
                                    rep);
            if (lift.psi_natural)
                lift_initial_algebra(lift, Alg{A, QMat::identity(A, base)}, opt.max_obj, rep);
        } else {
            FinSet E = FinSet::empty();
            lift_terminal_coalgebra(lift, Coalg{E, QMat(E, lift.F.on_obj(E), base)},
                                    opt.max_obj, rep);
            if (lift.psi_natural)
                lift_initial_algebra(lift, Alg{E, QMat(lift.F.on_obj(E), E, base)},
                                     opt.max_obj, rep);
        }
    }
}

int dispatch(const std::string& cmd, const Options& opt) {
    CorpusFile corpus = load_corpus(opt.corpus);
    Report rep;
    attach_meta(rep, cmd + " " + opt.corpus, corpus, opt);

    if (cmd == "check-quantale") {
        run_check_quantale(corpus, rep);
    } else if (cmd == "girard") {
        run_girard(corpus, opt, rep);
    } else if (cmd == "check-dualizing") {
        const FinQuantale& q = corpus.quantales.front();
        auto P = make_presheaf(opt, q);
        DualCandidate d = resolve_omega(opt, *P, q);
        check_dualizing(*P, d, opt.max_obj, rep);
        pairing_twist_check(*P, d, opt.max_obj, rep);
    } else if (cmd == "check-closed") {
        const FinQuantale& q = corpus.quantales.front();
        auto P = make_presheaf(opt, q);
        check_total_basics(*P, opt.max_obj, rep);
        check_closed_structure(*P, opt.max_obj, rep);
        check_iota_lax(*P, opt.max_obj, rep);
    } else if (cmd == "lift-check") {
        const FinQuantale& q = corpus.quantales.front();
        auto P = make_presheaf(opt, q);
        check_functoriality(*P, opt.max_obj, rep);
        check_sup_preservation(*P, opt.max_obj, rep);
        check_mu_laws(*P, opt.max_obj, rep);
        check_coherence(*P, opt.max_obj, rep);
    } else if (cmd == "nucleus") {
        const FinQuantale& q = corpus.quantales.front();
        auto P = make_presheaf(opt, q);
        DualCandidate d = resolve_omega(opt, *P, q);
        NucleusFamily fam(P, d);
        check_nucleus_laws(fam, opt.max_obj, rep);
        try {
            auto qj = build_qj(fam, opt.max_obj);
            rep.pass("nucleus.quotient_valid", "quotient revalidates all lifted laws",
                     "objects of size <= " + std::to_string(opt.max_obj));
            if (opt.instance == "powq") girard_consistency_check(*qj, q, d.omega, rep);
        } catch (const InternalLawViolation& e) {
            rep.fail("nucleus.quotient_valid", "quotient revalidates all lifted laws",
                     "objects of size <= " + std::to_string(opt.max_obj), e.what());
        }
    } else if (cmd == "represent") {
        const FinQuantale& q = corpus.quantales.front();
        auto P = make_presheaf(opt, q);
        DualCandidate d = resolve_omega(opt, *P, q);
        representation_check(P, d, opt.max_obj, rep);
    } else if (cmd == "fixpoint") {
        run_fixpoint(corpus, opt, rep);
    }
    return finish(rep, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale checker for lattice-valued relational models"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> names = {"check-quantale", "girard",  "check-dualizing",
                                            "check-closed",   "nucleus", "represent",
                                            "fixpoint",       "lift-check"};
    for (const auto& n : names) {
        auto* sub = app.add_subcommand(n);
        sub->add_option("corpus", opt.corpus, "corpus file path or built-in quantale name")
            ->required();
        sub->add_option("--instance", opt.instance, "presheaf instance: powq, nuts or orth");
        sub->add_option("--omega", opt.omega, "dual candidate (label for powq, code otherwise)");
        sub->add_option("--max-obj", opt.max_obj, "largest base object size checked");
        sub->add_option("--parallel", opt.parallel, "worker thread count");
        sub->add_option("--json", opt.json_path, "write one JSON record per verdict");
        sub->add_option("--replay", opt.replay_path, "re-verify recorded failure witnesses");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt);
    } catch (const InternalLawViolation& e) {
        std::cerr << "law violation: " << e.what() << "\n";
        return 1;
    } catch (const CheckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
