#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lampclock/codec.hpp"

namespace lampclock {

// Named schemes: the two built-ins (plus short aliases) and anything added
// at runtime. Only valid schemes are admitted.
class SchemeCatalog {
public:
    SchemeCatalog() {
        add(triangular_scheme());
        add(berlin_scheme());
        aliases_.emplace("triangular", "triangular-12h");
        aliases_.emplace("berlin", "berlin-24h");
    }

    void add(RowScheme scheme) {
        require_valid(scheme);
        if (scheme.name.empty()) throw invalid_scheme("scheme name is empty");
        if (contains(scheme.name)) throw invalid_scheme("scheme '" + scheme.name + "' already registered");
        std::string key = scheme.name;
        schemes_.emplace(std::move(key), std::move(scheme));
    }

    bool contains(std::string_view name) const { return find(name) != nullptr; }

    const RowScheme* find(std::string_view name) const {
        std::string key(name);
        if (auto a = aliases_.find(key); a != aliases_.end()) key = a->second;
        auto it = schemes_.find(key);
        return it == schemes_.end() ? nullptr : &it->second;
    }

    const RowScheme& at(std::string_view name) const {
        if (const auto* s = find(name)) return *s;
        throw invalid_scheme("unknown scheme '" + std::string(name) + "'");
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [name, _] : schemes_) out.push_back(name);
        return out;
    }

private:
    std::map<std::string, RowScheme, std::less<>> schemes_;
    std::map<std::string, std::string, std::less<>> aliases_;
};

} // namespace lampclock
