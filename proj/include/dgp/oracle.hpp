#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dgp/model.hpp"
#include "dgp/rational.hpp"
#include "dgp/real.hpp"

namespace dgp {
namespace oracle {

constexpr int kMaxN = 6;

// Multiplicity-matrix digraph on up to kMaxN vertices; mult[u][v] counts
// edges u -> v (loops on the diagonal).
struct SmallDigraph {
    int n = 0;
    std::array<std::array<long, kMaxN>, kMaxN> mult{};
    long edges() const {
        long m = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) m += mult[u][v];
        return m;
    }
};

struct SccProfile {
    struct Component {
        int size;
        long edges;  // intra-component edge count, multiplicities included
        long excess; // edges - size
    };
    struct ComplexInfo {
        long excess;
        int kernel_vertices;
        long kernel_edges;
        long deficiency; // 2 excess - kernel_vertices
    };
    std::vector<Component> components;
    std::vector<ComplexInfo> complex_list;
    bool is_acyclic = false;    // every component a single loopless vertex
    bool is_elementary = false; // every component a vertex or a cycle
};

// SCC decomposition (iterative Tarjan), kernel reduction by suppressing
// in-degree-1/out-degree-1 vertices inside each complex component.
SccProfile classify(const SmallDigraph& g);

bool in_family(const SccProfile& p, const FamilySpec& f);

// Exhaustive per-edge-count classification counts for the simple-digraph
// models. counts[m] = number of digraphs with m edges in the family.
struct DigraphCensus {
    int n = 0;
    ModelKind model = ModelKind::D2;
    int max_edges = 0;
    std::vector<long> total, acyclic, elementary, one_bicyclic, strongly_connected;
};

DigraphCensus census(int n, ModelKind model); // model in {D2, SD}, n <= 5

// Exact probability polynomial in p for the simple models:
//   D2: sum_g p^{m(g)} (1-p)^{n(n-1)-m(g)} over family members
//   SD: sum_g p^{m(g)} (1-2p)^{binom(n,2)-m(g)}
// Coefficient vector of the polynomial in p.
std::vector<Rat> exact_poly(int n, ModelKind model, const FamilySpec& family);

// Number of strongly connected kernel multidigraphs (labelled vertices and
// edges, min degree type (1,2)/(2,1)) of excess r and deficiency d.
long count_kernels(int r, int d);

// Multidigraph-model probability mass of the family restricted to
// configurations with at most max_edges total edges, plus a rigorous
// Poisson tail bound; value <= P <= value + tail. Families limited to
// acyclic / elementary / bicyclic; n <= 3.
std::pair<Real, Real> md_probability_capped(int n, const Real& p, const FamilySpec& family,
                                            int max_edges);

} // namespace oracle
} // namespace dgp
