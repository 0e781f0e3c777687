#pragma once

#include <cstdint>
#include <vector>

#include "hyperlogic/lasso.hpp"

namespace hyperlogic {

/// Partial map from variable indices to lassos, in binding order.
///
/// Shifting is applied eagerly: every bound lasso is replaced by the canonical
/// form of its suffix, and `offset()` records the total shift since the
/// assignment was created. The last binding is the most recent one.
template <class S>
class Assignment {
public:
    struct Binding {
        std::uint32_t var;
        Lasso<S> value;

        friend bool operator==(const Binding&, const Binding&) = default;
        friend auto operator<=>(const Binding&, const Binding&) = default;
    };

    const std::vector<Binding>& bindings() const { return bindings_; }
    bool empty() const { return bindings_.empty(); }
    std::size_t offset() const { return offset_; }

    const Lasso<S>* find(std::uint32_t var) const {
        for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
            if (it->var == var) return &it->value;
        }
        return nullptr;
    }

    const Binding* most_recent() const { return bindings_.empty() ? nullptr : &bindings_.back(); }

    Assignment bind(std::uint32_t var, Lasso<S> value) const {
        Assignment out = *this;
        out.bindings_.push_back({var, value.canonical()});
        return out;
    }

    Assignment shifted(std::size_t j) const {
        if (j == 0) return *this;
        Assignment out;
        out.offset_ = offset_ + j;
        out.bindings_.reserve(bindings_.size());
        for (const auto& b : bindings_) out.bindings_.push_back({b.var, b.value.suffix(j).canonical()});
        return out;
    }

    Alignment alignment() const {
        std::vector<const Lasso<S>*> ptrs;
        for (const auto& b : bindings_) ptrs.push_back(&b.value);
        return align<S>(std::span<const Lasso<S>* const>(ptrs));
    }

    /// Equality ignores the offset: two assignments with the same bound
    /// suffixes behave identically from here on.
    friend bool operator==(const Assignment& a, const Assignment& b) { return a.bindings_ == b.bindings_; }
    friend bool operator<(const Assignment& a, const Assignment& b) { return a.bindings_ < b.bindings_; }

private:
    std::vector<Binding> bindings_;
    std::size_t offset_ = 0;
};

}  // namespace hyperlogic
