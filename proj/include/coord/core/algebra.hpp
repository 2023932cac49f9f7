#pragma once

#include <memory>
#include <optional>
#include <string>

#include "coord/core/label.hpp"

namespace coord {

/// Partial commutative monoid of labels. ε is a unit for every algebra;
/// instantiations only decide how two non-identity labels combine.
class LabelAlgebra {
public:
    virtual ~LabelAlgebra() = default;

    virtual std::string_view name() const = 0;

    std::optional<Label> compose(const Label& a, const Label& b) const {
        if (a.is_identity()) return b;
        if (b.is_identity()) return a;
        return compose_impl(a, b);
    }

protected:
    virtual std::optional<Label> compose_impl(const Label& a,
                                              const Label& b) const = 0;
};

using AlgebraPtr = std::shared_ptr<const LabelAlgebra>;

} // namespace coord
