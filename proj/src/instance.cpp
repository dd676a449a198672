#include "extcover/instance.hpp"

namespace extcover {

static void check_forced(const Graph& g, const VertexSet& u) {
    if (u.universe() != g.n())
        throw std::invalid_argument("ExtInstance: forced set universe must match graph");
}

ExtInstance ExtInstance::ext_vc(Graph g, VertexSet u) {
    check_forced(g, u);
    return {std::move(g), std::move(u), ProblemKind::ExtVC, std::nullopt};
}

ExtInstance ExtInstance::ext_is(Graph g, VertexSet u) {
    check_forced(g, u);
    return {std::move(g), std::move(u), ProblemKind::ExtIS, std::nullopt};
}

ExtInstance ExtInstance::ext_hcover(Graph g, VertexSet u, Pattern h) {
    check_forced(g, u);
    return {std::move(g), std::move(u), ProblemKind::ExtHCover, std::move(h)};
}

}  // namespace extcover
