#include "coord/core/automaton.hpp"

#include <algorithm>

namespace coord {

std::vector<Transition> canonical_transitions(std::vector<Transition> ts) {
    std::sort(ts.begin(), ts.end(), [](const Transition& a, const Transition& b) {
        return a.key() < b.key();
    });
    ts.erase(std::unique(ts.begin(), ts.end(),
                         [](const Transition& a, const Transition& b) {
                             return a.key() == b.key();
                         }),
             ts.end());
    return ts;
}

} // namespace coord
