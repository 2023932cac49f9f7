#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "coord/core/label.hpp"

namespace coord {

/// Per-state set of labels that require synchronisation with the owning
/// automaton. Labels outside the predicate may fire without it. Membership
/// is decided symbolically; ε is never a member, so idle automata never
/// block anyone.
class ConcurrencyPredicate {
public:
    /// flow-based trigger: any label whose flow meets `ports`.
    struct Excl {
        PortSet ports;
    };
    /// Excl plus context dependency: labels whose no-flow set meets `watch`.
    struct Ctx {
        PortSet ports;
        PortSet watch;
    };
    /// Raw tuple-space actions and their mirrors; completed τ steps pass.
    struct TupleActions {};
    /// TupleActions plus τ steps of processes ranked at or below `pid`
    /// while this process has not terminated. `order` lists process ids in
    /// ascending rank.
    struct TuplePriority {
        std::string pid;
        bool ended = false;
        std::shared_ptr<const std::vector<std::string>> order;
    };
    struct Never {};

    using Atom = std::variant<Never, Excl, Ctx, TupleActions, TuplePriority>;

    ConcurrencyPredicate() : atoms_{Never{}} {}

    static ConcurrencyPredicate never();
    static ConcurrencyPredicate excl(PortSet ports);
    static ConcurrencyPredicate ctx(PortSet ports, PortSet watch);
    static ConcurrencyPredicate tuple_actions();
    static ConcurrencyPredicate tuple_priority(
        std::string pid, bool ended,
        std::shared_ptr<const std::vector<std::string>> order);
    static ConcurrencyPredicate unite(const ConcurrencyPredicate& a,
                                      const ConcurrencyPredicate& b);

    bool contains(const Label& l) const;

    /// True when the predicate can never select a label built over ports
    /// disjoint from `own` — the precondition for neighbour-only checks.
    bool local_to(const PortSet& own) const;

    const std::vector<Atom>& atoms() const { return atoms_; }
    std::string render() const;

private:
    explicit ConcurrencyPredicate(std::vector<Atom> atoms)
        : atoms_(std::move(atoms)) {}

    std::vector<Atom> atoms_; // disjunction
};

} // namespace coord
