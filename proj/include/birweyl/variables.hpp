#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace birweyl {

enum class VarKind { Lambda, Generator };

struct VariableInfo {
    std::string name;
    VarKind kind;
    // Lambda: the index i in I. Generator: position among the generators.
    int index = 0;
    // Generators only: positive height (sum of the root coordinates).
    int height = 0;
};

// Immutable ordered set of variables for one session. Lambda variables come
// first, ordered by index; generator variables follow, ordered by
// (height, index). This order is the one the graded-lex term order refines.
class VariableTable {
public:
    static std::shared_ptr<const VariableTable> create(
        std::vector<std::string> lambda_names,
        std::vector<std::pair<std::string, int>> generators /* (name, height) */);

    int size() const { return static_cast<int>(vars_.size()); }
    int lambda_count() const { return lambda_count_; }
    int generator_count() const { return size() - lambda_count_; }
    const VariableInfo& info(int id) const { return vars_[static_cast<std::size_t>(id)]; }
    const std::string& name(int id) const { return info(id).name; }
    bool is_lambda(int id) const { return info(id).kind == VarKind::Lambda; }

    // Variable id of lambda_i / of the k-th generator.
    int lambda_id(int i) const { return i; }
    int generator_id(int k) const { return lambda_count_ + k; }

    std::optional<int> find(std::string_view name) const;

private:
    std::vector<VariableInfo> vars_;
    int lambda_count_ = 0;
};

using VariableTablePtr = std::shared_ptr<const VariableTable>;

// True when both polynomials live over the same table object.
inline bool same_table(const VariableTablePtr& a, const VariableTablePtr& b) {
    return a.get() == b.get();
}

}  // namespace birweyl
