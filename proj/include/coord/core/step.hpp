#pragma once

#include <map>
#include <optional>
#include <string>

#include "coord/core/ports.hpp"

namespace coord {

using DataMap = std::map<Port, DataValue>;

/// The observable content of one coordination round: which ports are in
/// scope, which synchronise (flow), which of those are data-relevant inputs
/// and outputs, and the values flowing through them.
///
/// Well-formedness: flow ⊆ scope, inputs/outputs ⊆ flow and disjoint,
/// data defined exactly on inputs ∪ outputs.
struct AtomicStep {
    PortSet scope;
    PortSet flow;
    PortSet inputs;
    PortSet outputs;
    DataMap data;

    bool valid() const;
    std::string render() const;

    auto operator<=>(const AtomicStep&) const = default;
};

/// The no-flow step over `scope`.
AtomicStep identity_step(PortSet scope = {});

/// Composes two atomic steps into the maximal step permitted by the subset
/// conditions: scope/flow/outputs unite, inputs that met a matching output
/// are dropped (inputs = (I1 ∪ I2) \ (O1 ∪ O2)), data maps unite. Undefined
/// (nullopt) when the data maps disagree on a shared port.
std::optional<AtomicStep> compose_atomic_steps(const AtomicStep& s1,
                                               const AtomicStep& s2);

/// True when the maps assign equal values to every shared key.
bool data_agrees(const DataMap& d1, const DataMap& d2);

std::string render_data(const DataMap& data);

} // namespace coord
