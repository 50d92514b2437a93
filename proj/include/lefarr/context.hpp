#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefarr {

// Ordered list of variable names; position 0 is the largest variable.
struct VariableContext {
    std::vector<std::string> names;

    VariableContext() = default;
    explicit VariableContext(std::vector<std::string> ns) : names(std::move(ns)) {
        if (names.empty())
            throw std::invalid_argument("variable context needs at least one variable");
        for (const auto& n : names)
            if (n.empty())
                throw std::invalid_argument("empty variable name");
        auto sorted = names;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate variable name");
    }

    std::size_t size() const { return names.size(); }

    // -1 if unknown
    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
};

}  // namespace lefarr
