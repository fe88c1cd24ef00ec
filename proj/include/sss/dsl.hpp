#pragma once

#include <variant>

#include "sss/cylinders.hpp"

namespace sss {

struct ParseError {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
    std::string message;
};

/// One parsed source file: a category, a module over it, and any number of
/// functors and coalgebras.
struct SystemDocument {
    FinCategory category;
    Module module;
    std::vector<SetValuedFunctor> functors;
    std::vector<Coalgebra> coalgebras;
    bool reconstructed = false;  // `# reconstructed: true` marker

    const SetValuedFunctor* functor(const std::string& name) const;
    const Coalgebra* coalgebra(const std::string& name) const;
    SelfSimilaritySystem system() const;

    friend bool operator==(const SystemDocument&, const SystemDocument&) = default;
};

using ParseResult = std::variant<SystemDocument, std::vector<ParseError>>;

ParseResult parse_system(const std::string& text);

/// Canonical source; print(parse(text)) reparses to an identical document.
std::string print_system(const SystemDocument& doc);

/// `pre=[m1,m2,...] period=[p1,...] at OBJECT`; element names resolved
/// against the module, objects inferred from the anchor and checked.
PeriodicAddress parse_address(const Module& m, const std::string& literal);
std::string print_address(const PeriodicAddress& t);

/// Space-separated element ids; the anchor is the target of the first
/// element, or `fallback_anchor` for the empty chain.
FiniteChain parse_chain(const Module& m, const std::string& literal,
                        const std::string& fallback_anchor = "");

}  // namespace sss
