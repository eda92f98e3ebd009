#include "birweyl/variables.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace birweyl {

std::shared_ptr<const VariableTable> VariableTable::create(
    std::vector<std::string> lambda_names,
    std::vector<std::pair<std::string, int>> generators) {
    auto table = std::make_shared<VariableTable>();
    std::set<std::string> seen;
    int i = 0;
    for (auto& n : lambda_names) {
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
        table->vars_.push_back({std::move(n), VarKind::Lambda, i++, 0});
    }
    table->lambda_count_ = i;
    // Stable sort keeps the declaration order among generators of equal height.
    std::stable_sort(generators.begin(), generators.end(),
                     [](const auto& a, const auto& b) { return a.second < b.second; });
    int k = 0;
    for (auto& [n, h] : generators) {
        if (h <= 0) throw std::invalid_argument("generator height must be positive: " + n);
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: " + n);
        table->vars_.push_back({std::move(n), VarKind::Generator, k++, h});
    }
    return table;
}

std::optional<int> VariableTable::find(std::string_view name) const {
    for (int id = 0; id < size(); ++id)
        if (vars_[static_cast<std::size_t>(id)].name == name) return id;
    return std::nullopt;
}

}  // namespace birweyl
