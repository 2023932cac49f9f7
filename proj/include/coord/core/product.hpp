#pragma once

#include <vector>

#include "coord/core/automaton.hpp"

namespace coord {

/// Synchronous product of two behavioural automata. At a pair state the
/// result enables:
///   - joint moves labelled by the composition of both factors' labels,
///     whenever that composition is defined;
///   - a move of one factor alone, whenever its label restricted to the
///     other's ports is outside the other's current predicate.
/// The pair predicate is the union of the factor predicates, and labels are
/// widened to the united port scope. Throws "algebra" when the factors
/// disagree on their label algebra.
BehaviouralAutomaton product(const BehaviouralAutomaton& b1,
                             const BehaviouralAutomaton& b2);

/// Simultaneous product of n automata: a transition picks a nonempty subset
/// of factors, one enabled transition each, whose labels compose to a
/// defined composite that no outsider's predicate selects. For two factors
/// this coincides with `product`; it is the form under which a shared
/// tuple-space automaton meets each of its processes directly.
BehaviouralAutomaton product_n(std::vector<BehaviouralAutomaton> factors);

/// State name of a product_n automaton given factor state names.
std::string joint_state_name(const std::vector<State>& states);

} // namespace coord
