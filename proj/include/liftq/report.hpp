#pragma once

#include <iosfwd>

#include "liftq/util.hpp"

namespace liftq {

/// Outcome of one universally quantified law on a declared finite universe.
struct Verdict {
    std::string law;      // stable identifier, e.g. "quantale.residuation"
    std::string ref;      // conventional name of the law being checked
    bool pass = true;
    std::string witness;  // concrete counterexample when pass is false
    std::string budget;   // the universe the quantifiers ranged over
};

/// A command run: its verdicts plus enough metadata to reproduce it.
class Report {
public:
    std::string command;
    std::uint64_t input_digest = 0;
    std::vector<Verdict> verdicts;
    double elapsed_ms = 0.0;

    void add(Verdict v) { verdicts.push_back(std::move(v)); }
    void pass(std::string law, std::string ref, std::string budget);
    void fail(std::string law, std::string ref, std::string budget, std::string witness);
    /// Appends pass or fail depending on whether a witness is present.
    void law(std::string law, std::string ref, std::string budget,
             const std::optional<Violation>& v);

    bool all_pass() const;
    void print(std::ostream& os) const;

    /// One JSON object per verdict, newline separated; timings excluded so
    /// identical inputs give byte-identical output.
    std::string to_json_records() const;
};

}  // namespace liftq
