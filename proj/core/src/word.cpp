#include "hyperlogic/word.hpp"

namespace hyperlogic {

StretchSpec StretchSpec::uniform(std::size_t factor) {
    if (factor == 0) throw EvalError("stretch factor must be positive");
    StretchSpec s;
    s.factor_ = factor;
    return s;
}

StretchSpec StretchSpec::table(std::vector<std::size_t> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0 || (i > 0 && values[i] <= values[i - 1])) {
            throw EvalError("stretch table must be positive and strictly increasing");
        }
    }
    StretchSpec s;
    s.factor_ = 0;
    s.table_ = std::move(values);
    return s;
}

std::size_t StretchSpec::operator()(std::size_t n) const {
    if (factor_ != 0) return factor_ * (n + 1);
    if (n >= table_.size()) throw EvalError("stretch table has no value for position " + std::to_string(n));
    return table_[n];
}

}  // namespace hyperlogic
