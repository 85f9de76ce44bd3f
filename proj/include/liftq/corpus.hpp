#pragma once

#include <map>

#include "liftq/relbase.hpp"

namespace liftq {

struct ParseError : CheckError {
    std::size_t line;
    ParseError(std::size_t ln, const std::string& msg)
        : CheckError("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct DanglingReference : CheckError {
    using CheckError::CheckError;
};

/// A named matrix over one of the corpus quantales, kept symbolically so it
/// can be instantiated once the quantale is chosen.
struct RelationDef {
    std::string name;
    std::string quantale;
    std::size_t dom = 0;
    std::size_t cod = 0;
    std::vector<std::string> entries;  // row-major labels
};

/// Endofunctor plus lax-family data. value holds pointwise quantale labels:
/// the constant family's value in Q(A) for kind constant, the left tensor
/// factor's value for kind product.
struct FunctorDef {
    std::string name;
    std::string kind;  // identity | constant | product
    std::size_t carrier = 0;
    std::vector<std::string> value;
};

struct CorpusFile {
    std::vector<FinQuantale> quantales;
    std::vector<RelationDef> relations;
    std::vector<FunctorDef> functors;
    std::map<std::string, std::string> duals;  // quantale name -> omega label
    std::string instance;                      // powq | nuts | orth, may be empty
    std::size_t max_obj = 2;
};

CorpusFile parse_corpus_text(const std::string& text);
CorpusFile parse_corpus(const std::string& path);

/// Canonical text form; parse(serialize(c)) is semantically identical to c.
std::string serialize(const CorpusFile& c);

/// True when both sides define the same quantales (order, unit, labels,
/// multiplication), relations, functors, duals, instance and budget.
bool semantically_equal(const CorpusFile& a, const CorpusFile& b);

/// The six built-in quantales: b2, godel3, lukasiewicz3, lukasiewicz4,
/// maxchain3 (3-chain under max with bottom unit), powz2 (subsets of the
/// 2-element group under pointwise addition).
CorpusFile builtin_corpus();

const FinQuantale& find_quantale(const CorpusFile& c, const std::string& name);
QMat instantiate(const RelationDef& r, const FinQuantale& q);

/// Label lookup; throws DanglingReference when absent.
Elt label_index(const FinQuantale& q, const std::string& label);

}  // namespace liftq
