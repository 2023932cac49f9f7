#include "coord/core/label.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace coord {

std::string_view render_kind(LabelKind k) {
    switch (k) {
        case LabelKind::identity: return "identity";
        case LabelKind::step: return "step";
        case LabelKind::act: return "act";
        case LabelKind::dual_act: return "dual";
        case LabelKind::tau: return "tau";
    }
    return "step";
}

Label Label::identity(PortSet scope) {
    Label l;
    l.kind = LabelKind::identity;
    l.head = "id";
    l.step = identity_step(std::move(scope));
    return l;
}

std::string Label::key() const {
    std::ostringstream os;
    os << head << '|' << render_kind(kind) << '|' << step.render() << '|'
       << noflow.render() << '|' << (tag ? *tag : std::string());
    return os.str();
}

std::string Label::display() const {
    if (step.data.empty()) return head;
    std::ostringstream os;
    os << head << '(';
    bool first = true;
    for (const auto& [port, value] : step.data) {
        if (!first) os << ',';
        os << port.name << '=' << value.value;
        first = false;
    }
    os << ')';
    return os.str();
}

Label restrict_label(const Label& l, const PortSet& ports) {
    Label out = l;
    out.step.scope = l.step.scope.intersect(ports);
    out.step.flow = l.step.flow.intersect(ports);
    out.step.inputs = l.step.inputs.intersect(ports);
    out.step.outputs = l.step.outputs.intersect(ports);
    out.noflow = l.noflow.intersect(ports);
    PortSet relevant = out.step.inputs.unite(out.step.outputs);
    DataMap data;
    for (const auto& [port, value] : l.step.data)
        if (relevant.contains(port)) data[port] = value;
    out.step.data = std::move(data);
    if (out.is_identity()) return Label::identity(out.step.scope);
    return out;
}

Label widen_scope(Label l, const PortSet& ports) {
    l.step.scope = l.step.scope.unite(ports);
    return l;
}

std::string merge_heads(const std::string& h1, const std::string& h2) {
    std::vector<std::string> atoms;
    auto split = [&atoms](const std::string& h) {
        std::size_t start = 0;
        while (start <= h.size()) {
            auto pos = h.find("\xc2\xb7", start); // '·'
            if (pos == std::string::npos) {
                atoms.push_back(h.substr(start));
                break;
            }
            atoms.push_back(h.substr(start, pos - start));
            start = pos + 2;
        }
    };
    split(h1);
    split(h2);
    std::sort(atoms.begin(), atoms.end());
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty()) out += "\xc2\xb7";
        out += a;
    }
    return out;
}

} // namespace coord
