#pragma once

#include <optional>
#include <string>

#include "coord/core/step.hpp"

namespace coord {

/// Synchronisation class of a label, used by concurrency predicates that
/// select labels by their constructor rather than by port flow.
enum class LabelKind {
    identity, ///< the no-op label
    step,     ///< ordinary dataflow label (constraint-automaton steps etc.)
    act,      ///< a tuple-space action performed by a process
    dual_act, ///< the tuple-space mirror of an action
    tau,      ///< a completed action/mirror synchronisation
};

std::string_view render_kind(LabelKind k);

/// A transition label: a constructor name, the atomic step it describes,
/// the ports it requires to be silent (context dependency), and an optional
/// owning-process tag (priority).
struct Label {
    LabelKind kind = LabelKind::step;
    std::string head;
    AtomicStep step;
    PortSet noflow;
    std::optional<std::string> tag;

    /// ε: no flow, no silence requirement. The scope is irrelevant to
    /// composition and predicates.
    static Label identity(PortSet scope = {});

    bool is_identity() const { return step.flow.empty() && noflow.empty(); }

    /// Canonical string; labels compare and deduplicate by it.
    std::string key() const;
    /// Head plus data parameters, for diagrams and traces.
    std::string display() const;

    bool operator==(const Label& other) const { return key() == other.key(); }
    bool operator<(const Label& other) const { return key() < other.key(); }
};

/// Componentwise restriction of a label to a port set: every step component
/// and the no-flow set are intersected with `ports`. Collapses to ε when
/// nothing (flow or silence requirement) is left.
Label restrict_label(const Label& l, const PortSet& ports);

/// Returns the same label with its scope widened by `ports`; composition
/// into a larger system keeps labels comparable across automata.
Label widen_scope(Label l, const PortSet& ports);

/// Canonical head of a composition: the "·"-joined sorted multiset of both
/// sides' head atoms, so that composing in any order names the same label.
std::string merge_heads(const std::string& h1, const std::string& h2);

} // namespace coord
