#include "coord/core/step.hpp"

#include <sstream>

namespace coord {

bool AtomicStep::valid() const {
    if (!flow.subset_of(scope)) return false;
    if (!inputs.subset_of(flow) || !outputs.subset_of(flow)) return false;
    if (inputs.intersects(outputs)) return false;
    PortSet relevant = inputs.unite(outputs);
    if (relevant.universal()) return false;
    if (data.size() != relevant.size()) return false;
    for (const auto& [port, value] : data) {
        (void)value;
        if (!relevant.contains(port)) return false;
    }
    return true;
}

std::string render_data(const DataMap& data) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [port, value] : data) {
        if (!first) os << ',';
        os << port.name << ':' << value.value;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string AtomicStep::render() const {
    std::ostringstream os;
    os << '<' << scope.render() << ',' << flow.render() << ',' << inputs.render()
       << ',' << outputs.render() << ',' << render_data(data) << '>';
    return os.str();
}

AtomicStep identity_step(PortSet scope) {
    AtomicStep s;
    s.scope = std::move(scope);
    return s;
}

bool data_agrees(const DataMap& d1, const DataMap& d2) {
    const DataMap& small = d1.size() <= d2.size() ? d1 : d2;
    const DataMap& big = d1.size() <= d2.size() ? d2 : d1;
    for (const auto& [port, value] : small) {
        auto it = big.find(port);
        if (it != big.end() && it->second != value) return false;
    }
    return true;
}

std::optional<AtomicStep> compose_atomic_steps(const AtomicStep& s1,
                                               const AtomicStep& s2) {
    if (!data_agrees(s1.data, s2.data)) return std::nullopt;
    AtomicStep out;
    out.scope = s1.scope.unite(s2.scope);
    out.flow = s1.flow.unite(s2.flow);
    out.outputs = s1.outputs.unite(s2.outputs);
    out.inputs = s1.inputs.unite(s2.inputs).subtract(out.outputs);
    PortSet relevant = out.inputs.unite(out.outputs);
    for (const auto& [port, value] : s1.data)
        if (relevant.contains(port)) out.data[port] = value;
    for (const auto& [port, value] : s2.data)
        if (relevant.contains(port)) out.data[port] = value;
    return out;
}

} // namespace coord
