#include "coord/core/ports.hpp"

#include <algorithm>
#include <sstream>

#include "coord/core/error.hpp"

namespace coord {

Domain::Domain(std::vector<DataValue> vs) : values(std::move(vs)) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

Domain Domain::of(std::initializer_list<int> vs) {
    std::vector<DataValue> out;
    for (int v : vs) out.push_back(DataValue{v});
    return Domain(std::move(out));
}

bool Domain::contains(const DataValue& v) const {
    return std::binary_search(values.begin(), values.end(), v);
}

PortSet PortSet::all() {
    PortSet s;
    s.universal_ = true;
    return s;
}

PortSet PortSet::of(std::initializer_list<std::string> names) {
    PortSet s;
    for (const auto& n : names) s.elems_.insert(Port{n});
    return s;
}

bool PortSet::contains(const Port& p) const {
    return universal_ || elems_.count(p) > 0;
}

PortSet PortSet::unite(const PortSet& other) const {
    if (universal_ || other.universal_) return all();
    PortSet out = *this;
    out.elems_.insert(other.elems_.begin(), other.elems_.end());
    return out;
}

PortSet PortSet::intersect(const PortSet& other) const {
    if (universal_) return other;
    if (other.universal_) return *this;
    PortSet out;
    std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                          other.elems_.end(),
                          std::inserter(out.elems_, out.elems_.end()));
    return out;
}

PortSet PortSet::subtract(const PortSet& other) const {
    if (universal_) throw error("portset", "difference on the universal set");
    if (other.universal_) return PortSet{};
    PortSet out;
    std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(),
                        std::inserter(out.elems_, out.elems_.end()));
    return out;
}

bool PortSet::intersects(const PortSet& other) const {
    if (universal_) return !other.empty();
    if (other.universal_) return !empty();
    const auto& small = elems_.size() <= other.elems_.size() ? elems_ : other.elems_;
    const auto& big = elems_.size() <= other.elems_.size() ? other.elems_ : elems_;
    return std::any_of(small.begin(), small.end(),
                       [&](const Port& p) { return big.count(p) > 0; });
}

bool PortSet::subset_of(const PortSet& other) const {
    if (other.universal_) return true;
    if (universal_) return false;
    return std::includes(other.elems_.begin(), other.elems_.end(),
                         elems_.begin(), elems_.end());
}

void PortSet::insert(Port p) {
    if (!universal_) elems_.insert(std::move(p));
}

const std::set<Port>& PortSet::elements() const {
    if (universal_) throw error("portset", "enumerating the universal set");
    return elems_;
}

std::size_t PortSet::size() const {
    if (universal_) throw error("portset", "size of the universal set");
    return elems_.size();
}

std::string PortSet::render() const {
    if (universal_) return "*";
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& p : elems_) {
        if (!first) os << ',';
        os << p.name;
        first = false;
    }
    os << '}';
    return os.str();
}

} // namespace coord
