#include "coord/core/predicate.hpp"

#include <algorithm>
#include <sstream>

namespace coord {

ConcurrencyPredicate ConcurrencyPredicate::never() {
    return ConcurrencyPredicate(std::vector<Atom>{Never{}});
}

ConcurrencyPredicate ConcurrencyPredicate::excl(PortSet ports) {
    return ConcurrencyPredicate({Excl{std::move(ports)}});
}

ConcurrencyPredicate ConcurrencyPredicate::ctx(PortSet ports, PortSet watch) {
    return ConcurrencyPredicate({Ctx{std::move(ports), std::move(watch)}});
}

ConcurrencyPredicate ConcurrencyPredicate::tuple_actions() {
    return ConcurrencyPredicate({TupleActions{}});
}

ConcurrencyPredicate ConcurrencyPredicate::tuple_priority(
    std::string pid, bool ended,
    std::shared_ptr<const std::vector<std::string>> order) {
    return ConcurrencyPredicate(
        {TuplePriority{std::move(pid), ended, std::move(order)}});
}

ConcurrencyPredicate ConcurrencyPredicate::unite(const ConcurrencyPredicate& a,
                                                 const ConcurrencyPredicate& b) {
    std::vector<Atom> atoms = a.atoms_;
    atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
    return ConcurrencyPredicate(std::move(atoms));
}

namespace {

bool raw_tuple_action(const Label& l) {
    return l.kind == LabelKind::act || l.kind == LabelKind::dual_act;
}

// ascending rank; ids absent from the order rank lowest
bool ranked_at_most(const std::vector<std::string>& order, const std::string& x,
                    const std::string& p) {
    auto rank = [&order](const std::string& id) -> long {
        auto it = std::find(order.begin(), order.end(), id);
        return it == order.end() ? -1 : it - order.begin();
    };
    return rank(x) <= rank(p);
}

} // namespace

bool ConcurrencyPredicate::contains(const Label& l) const {
    if (l.is_identity()) return false;
    for (const auto& atom : atoms_) {
        bool hit = std::visit(
            [&l](const auto& a) -> bool {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, Never>) {
                    return false;
                } else if constexpr (std::is_same_v<T, Excl>) {
                    return l.step.flow.intersects(a.ports);
                } else if constexpr (std::is_same_v<T, Ctx>) {
                    return l.step.flow.intersects(a.ports) ||
                           l.noflow.intersects(a.watch);
                } else if constexpr (std::is_same_v<T, TupleActions>) {
                    return raw_tuple_action(l);
                } else {
                    static_assert(std::is_same_v<T, TuplePriority>);
                    if (raw_tuple_action(l)) return true;
                    return l.kind == LabelKind::tau && l.tag && !a.ended &&
                           a.order && ranked_at_most(*a.order, *l.tag, a.pid);
                }
            },
            atom);
        if (hit) return true;
    }
    return false;
}

bool ConcurrencyPredicate::local_to(const PortSet& own) const {
    for (const auto& atom : atoms_) {
        bool ok = std::visit(
            [&own](const auto& a) -> bool {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, Never>) {
                    return true;
                } else if constexpr (std::is_same_v<T, Excl>) {
                    return a.ports.subset_of(own);
                } else if constexpr (std::is_same_v<T, Ctx>) {
                    return a.ports.subset_of(own) && a.watch.subset_of(own);
                } else {
                    // tuple-space predicates live over the universal port
                    // set, where no disjoint foreign label exists
                    return true;
                }
            },
            atom);
        if (!ok) return false;
    }
    return true;
}

std::string ConcurrencyPredicate::render() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& atom : atoms_) {
        if (!first) os << " u ";
        first = false;
        std::visit(
            [&os](const auto& a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, Never>) {
                    os << "never";
                } else if constexpr (std::is_same_v<T, Excl>) {
                    os << "excl" << a.ports.render();
                } else if constexpr (std::is_same_v<T, Ctx>) {
                    os << "ctx(" << a.ports.render() << ';' << a.watch.render()
                       << ')';
                } else if constexpr (std::is_same_v<T, TupleActions>) {
                    os << "acts";
                } else {
                    static_assert(std::is_same_v<T, TuplePriority>);
                    os << "acts+tau<=" << a.pid << (a.ended ? "[ended]" : "");
                }
            },
            atom);
    }
    return os.str();
}

} // namespace coord
