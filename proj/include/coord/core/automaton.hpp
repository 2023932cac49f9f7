#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coord/core/algebra.hpp"
#include "coord/core/predicate.hpp"

namespace coord {

/// States are identified by canonical names; composite automata keep their
/// own registries from name to structure.
struct State {
    std::string name;

    State() = default;
    State(std::string n) : name(std::move(n)) {}
    State(const char* n) : name(n) {}

    auto operator<=>(const State&) const = default;
};

/// How a transition of a composed automaton was justified.
enum class StepOrigin { direct, joint, left, right };

struct Transition {
    State source;
    Label label;
    State target;
    StepOrigin origin = StepOrigin::direct;

    std::string key() const { return label.key() + "->" + target.name; }
};

/// A possibly-lazy labelled transition system with a per-state concurrency
/// predicate. The state space is implicit: `enabled` yields the outgoing
/// transitions on demand and `cp` the predicate, both pure functions of the
/// state. Transitions come back deterministically ordered.
struct BehaviouralAutomaton {
    std::string name = "ba";
    PortSet ports;
    std::vector<State> initial;
    std::function<std::vector<Transition>(const State&)> enabled;
    std::function<ConcurrencyPredicate(const State&)> cp;
    AlgebraPtr algebra;
};

/// Sorts by (label key, target) and drops duplicates; every `enabled`
/// implementation funnels through this for reproducibility.
std::vector<Transition> canonical_transitions(std::vector<Transition> ts);

} // namespace coord
