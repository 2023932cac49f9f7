#pragma once

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace coord {

/// A named point through which one datum flows per round.
struct Port {
    std::string name;

    Port() = default;
    Port(std::string n) : name(std::move(n)) {}
    Port(const char* n) : name(n) {}

    auto operator<=>(const Port&) const = default;
};

/// Element of the finite data domain.
struct DataValue {
    int value = 0;

    DataValue() = default;
    DataValue(int v) : value(v) {}

    auto operator<=>(const DataValue&) const = default;
};

/// The finite data domain shared by a network configuration.
struct Domain {
    std::vector<DataValue> values;

    Domain() : values{DataValue{0}, DataValue{1}} {}
    explicit Domain(std::vector<DataValue> vs);
    static Domain of(std::initializer_list<int> vs);

    bool contains(const DataValue& v) const;
    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    auto operator<=>(const Domain&) const = default;
};

/// A set of ports. Linda automata range over every action port, so the set
/// can also be the universal one; set algebra treats it as the top element.
class PortSet {
public:
    PortSet() = default;
    PortSet(std::initializer_list<Port> ports) : elems_(ports) {}
    explicit PortSet(std::set<Port> ports) : elems_(std::move(ports)) {}

    static PortSet all();
    static PortSet of(std::initializer_list<std::string> names);

    bool universal() const { return universal_; }
    bool empty() const { return !universal_ && elems_.empty(); }
    bool contains(const Port& p) const;

    PortSet unite(const PortSet& other) const;
    PortSet intersect(const PortSet& other) const;
    /// Set difference. The left side must be finite.
    PortSet subtract(const PortSet& other) const;
    bool intersects(const PortSet& other) const;
    bool subset_of(const PortSet& other) const;

    void insert(Port p);

    /// Finite element access; throws on the universal set.
    const std::set<Port>& elements() const;
    std::size_t size() const;

    std::string render() const;

    auto operator<=>(const PortSet&) const = default;

private:
    bool universal_ = false;
    std::set<Port> elems_;
};

} // namespace coord
