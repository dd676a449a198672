#pragma once

#include <functional>
#include <optional>

#include "extcover/certify.hpp"
#include "extcover/errors.hpp"
#include "extcover/instance.hpp"

namespace extcover {

// Brute-force reference layer: ground truth at desk scale, guarded by hard
// size bounds that refuse instead of crawling.

inline constexpr int kDefaultOracleBound = 20;
inline constexpr int kDefaultHCoverOracleBound = 12;

struct Decision {
    bool yes = false;
    std::optional<Certificate> certificate;
};

struct OptValue {
    int value = 0;
    VertexSet witness;  // minimal vertex cover attaining the value
};

// Emits exactly the maximal independent sets, each once, by include/exclude
// recursion with a final maximality filter. Stops early if emit returns true.
void enumerate_maximal_is(const Graph& g,
                          const std::function<bool(const VertexSet&)>& emit,
                          int bound = kDefaultOracleBound);
std::vector<VertexSet> maximal_independent_sets(const Graph& g,
                                                int bound = kDefaultOracleBound);

Decision decide_ext_vc_bf(const ExtInstance& inst, int bound = kDefaultOracleBound);
Decision decide_ext_is_bf(const ExtInstance& inst, int bound = kDefaultOracleBound);

// Maximum of |S ∩ U| over minimal vertex covers S.
OptValue max_ext_vc_opt_bf(const Graph& g, const VertexSet& u,
                           int bound = kDefaultOracleBound);

// Minimum total weight over independent dominating sets.
long long min_wisds_bf(const Graph& g, const std::vector<long long>& weights,
                       int bound = kDefaultOracleBound);

bool decide_ext_hcover_bf(const Graph& g, const Pattern& h, const VertexSet& u,
                          int bound = kDefaultHCoverOracleBound);

int independence_number_bf(const Graph& g, int bound = kDefaultOracleBound);

}  // namespace extcover
