#include "kronlab/tensor.hpp"

namespace kronlab {

std::string_view criterion_name(Criterion c) {
    switch (c) {
    case Criterion::none: return "none";
    case Criterion::span: return "span";
    case Criterion::dimension: return "dimension";
    }
    return "?";
}

Regrouping::Regrouping(const Shape& shape, std::size_t p) : whole_(shape) {
    if (p < 1 || p >= shape.arity())
        throw RangeError("tensor", "split point " + std::to_string(p) + " outside 1.." +
                                       std::to_string(shape.arity() == 0 ? 0 : shape.arity() - 1));
    auto d = shape.dims();
    left_ = Shape(std::vector<std::size_t>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(p)));
    right_ = Shape(std::vector<std::size_t>(d.begin() + static_cast<std::ptrdiff_t>(p), d.end()));
}

std::pair<MultiIndex, MultiIndex> Regrouping::split(const MultiIndex& g) const {
    require_contains(whole_, g);
    auto e = g.entries();
    std::size_t p = left_.arity();
    return {MultiIndex(std::vector<std::size_t>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(p))),
            MultiIndex(std::vector<std::size_t>(e.begin() + static_cast<std::ptrdiff_t>(p), e.end()))};
}

MultiIndex Regrouping::join(const MultiIndex& a, const MultiIndex& b) const {
    require_contains(left_, a);
    require_contains(right_, b);
    return concat(a, b);
}

} // namespace kronlab
