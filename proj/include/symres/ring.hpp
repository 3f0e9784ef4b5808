#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <symres/errors.hpp>

namespace symres {

/// Ordered list of distinct variable names. Every monomial and ideal
/// refers to exactly one context; the order fixes exponent positions and
/// the canonical output order. Immutable once constructed.
class RingContext {
public:
    explicit RingContext(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw domain_error("ring context needs at least one variable");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw domain_error("ring context variable names must be non-empty");
            if (!index_.emplace(names_[i], i).second)
                throw domain_error("duplicate variable name '" + names_[i] + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool operator==(const RingContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const RingContext>(std::move(names));
}

/// Contexts are compared by value; separately built rings with the same
/// variable list are interoperable.
inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b))
        throw ring_mismatch_error("values live in different ring contexts");
}

} // namespace symres
