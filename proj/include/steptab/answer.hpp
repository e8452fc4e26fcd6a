#pragma once

#include <string>
#include <vector>

namespace steptab {

/// The denotation of an executed program (or a dataset gold): an ordered
/// list of scalar values carried in their canonical string rendering.
/// May be empty — an empty filter result is an answer, not an error.
struct AnswerValue {
    std::vector<std::string> values;

    bool operator==(const AnswerValue&) const = default;
    bool empty() const { return values.empty(); }
    std::size_t size() const { return values.size(); }
};

}  // namespace steptab
