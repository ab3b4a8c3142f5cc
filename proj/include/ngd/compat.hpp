#pragma once

#include <utility>
#include <vector>

#include "ngd/graph.hpp"
#include "ngd/matrix.hpp"
#include "ngd/metrics.hpp"
#include "ngd/nonlocal.hpp"

namespace ngd {

struct CompatWitness {
    int anchor = 0;  // x_i
    int j = 0;       // neighbor whose ratio deviates
    int k = 0;       // reference neighbor (anchor's first)
    double base_ratio = 0.0;
    double super_ratio = 0.0;
    double deviation = 0.0;  // |r - r'| / max(r, r')
};

struct CompatReport {
    bool compatible = true;
    double worst_deviation = 0.0;
    double tolerance = 0.0;
    std::vector<CompatWitness> witnesses;  // empty iff compatible
};

// Does the random walk on `sup` conditioned to base edges reproduce the walk
// on `base`? Checked through weight ratios: for each anchor i, every base
// neighbor's w(i, j)/w(i, k0) must match the mapped ratio in `sup`, where k0
// is the anchor's first neighbor. Transitivity makes the anchored scan
// equivalent to the full triple scan; reported deviations are relative.
// `mapping` is a node bijection (empty means identity). Every base edge must
// map to a positive weight in `sup`, else EdgeNotPreserved.
CompatReport check_compatibility(const Graph& base, const Graph& sup,
                                 const std::vector<int>& mapping = {},
                                 double tolerance = 1e-9);

// Specialization when the supergraph is a path graph: the supergraph ratio
// h(d(i,j))/h(d(i,k)) comes from the kernel directly, no graph build needed.
CompatReport check_path_compatibility(const Graph& base, const KernelSpec& kernel,
                                      const DistanceTables& dist,
                                      double tolerance = 1e-9);

namespace serial {
CompatReport check_compatibility(const Graph& base, const Graph& sup,
                                 const std::vector<int>& mapping = {},
                                 double tolerance = 1e-9);
}

// Symmetric edge mask with empty diagonal. Unlike Graph it may be
// disconnected, so conditioning errors stay testable.
class EdgeSet {
public:
    explicit EdgeSet(const Graph& g);
    EdgeSet(int n, const std::vector<std::pair<int, int>>& pairs);

    int nodes() const { return n_; }
    bool contains(int i, int j) const { return mask_[static_cast<std::size_t>(i) * n_ + j] != 0; }

private:
    int n_;
    std::vector<char> mask_;
};

// Row-stochastic transition of the walk on `sup` restricted to mask edges:
// off-mask weights are zeroed, rows renormalized by the masked degree.
// Throws EmptyRow if a node keeps no edge, MaskDisconnects if the masked
// support is disconnected.
Matrix conditioned_transition(const Graph& sup, const EdgeSet& mask);

}  // namespace ngd
