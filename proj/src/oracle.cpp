#include "dgp/oracle.hpp"

#include <algorithm>

namespace dgp {
namespace oracle {

namespace {

// iterative Tarjan over the support digraph
std::vector<int> scc_ids(const SmallDigraph& g, int& count) {
    int n = g.n;
    std::array<int, kMaxN> index{}, low{}, on_stack{};
    std::array<int, kMaxN> ids{};
    index.fill(-1);
    ids.fill(-1);
    int next_index = 0;
    count = 0;
    std::vector<int> stack, call_v, call_w;
    for (int s = 0; s < n; ++s) {
        if (index[s] != -1) continue;
        call_v.push_back(s);
        call_w.push_back(0);
        while (!call_v.empty()) {
            int v = call_v.back();
            int& w = call_w.back();
            if (w == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (w < n) {
                int u = w++;
                if (g.mult[v][u] == 0 || u == v) continue;
                if (index[u] == -1) {
                    call_v.push_back(u);
                    call_w.push_back(0);
                    descended = true;
                    break;
                }
                if (on_stack[u]) low[v] = std::min(low[v], index[u]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                while (true) {
                    int u = stack.back();
                    stack.pop_back();
                    on_stack[u] = 0;
                    ids[u] = count;
                    if (u == v) break;
                }
                ++count;
            }
            call_v.pop_back();
            call_w.pop_back();
            if (!call_v.empty()) {
                int parent = call_v.back();
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    std::vector<int> out(ids.begin(), ids.begin() + n);
    return out;
}

// kernel of a strongly connected multidigraph given by a multiplicity
// matrix: repeatedly suppress vertices with in-degree = out-degree = 1
// (counting multiplicity), splicing their unique in/out arcs together
std::pair<int, long> kernel_of(std::vector<std::vector<long>> m) {
    int n = static_cast<int>(m.size());
    std::vector<bool> alive(static_cast<size_t>(n), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            long din = 0, dout = 0;
            for (int u = 0; u < n; ++u) {
                if (!alive[u]) continue;
                din += m[static_cast<size_t>(u)][static_cast<size_t>(v)];
                dout += m[static_cast<size_t>(v)][static_cast<size_t>(u)];
            }
            if (din != 1 || dout != 1) continue;
            if (m[static_cast<size_t>(v)][static_cast<size_t>(v)] == 1) continue; // lone loop
            int from = -1, to = -1;
            for (int u = 0; u < n; ++u) {
                if (!alive[u]) continue;
                if (m[static_cast<size_t>(u)][static_cast<size_t>(v)] > 0) from = u;
                if (m[static_cast<size_t>(v)][static_cast<size_t>(u)] > 0) to = u;
            }
            m[static_cast<size_t>(from)][static_cast<size_t>(v)] = 0;
            m[static_cast<size_t>(v)][static_cast<size_t>(to)] = 0;
            m[static_cast<size_t>(from)][static_cast<size_t>(to)] += 1;
            alive[v] = false;
            changed = true;
        }
    }
    int kv = 0;
    long ke = 0;
    for (int u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        ++kv;
        for (int v = 0; v < n; ++v)
            if (alive[v]) ke += m[static_cast<size_t>(u)][static_cast<size_t>(v)];
    }
    return {kv, ke};
}

} // namespace

SccProfile classify(const SmallDigraph& g) {
    SccProfile out;
    int count = 0;
    std::vector<int> id = scc_ids(g, count);
    std::vector<int> size(static_cast<size_t>(count), 0);
    std::vector<long> edges(static_cast<size_t>(count), 0);
    for (int v = 0; v < g.n; ++v) ++size[static_cast<size_t>(id[v])];
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.mult[u][v] > 0 && id[u] == id[v]) edges[static_cast<size_t>(id[u])] += g.mult[u][v];

    out.is_acyclic = true;
    out.is_elementary = true;
    for (int c = 0; c < count; ++c) {
        long exc = edges[static_cast<size_t>(c)] - size[static_cast<size_t>(c)];
        out.components.push_back({size[static_cast<size_t>(c)], edges[static_cast<size_t>(c)], exc});
        if (!(size[static_cast<size_t>(c)] == 1 && edges[static_cast<size_t>(c)] == 0))
            out.is_acyclic = false;
        if (exc > 0) {
            out.is_elementary = false;
            // kernel reduction on the component's multiplicity submatrix
            std::vector<int> verts;
            for (int v = 0; v < g.n; ++v)
                if (id[v] == c) verts.push_back(v);
            std::vector<std::vector<long>> sub(verts.size(),
                                               std::vector<long>(verts.size(), 0));
            for (size_t a = 0; a < verts.size(); ++a)
                for (size_t b = 0; b < verts.size(); ++b)
                    sub[a][b] = g.mult[verts[a]][verts[b]];
            auto [kv, ke] = kernel_of(std::move(sub));
            out.complex_list.push_back({exc, kv, ke, 2 * exc - kv});
        }
    }
    return out;
}

bool in_family(const SccProfile& p, const FamilySpec& f) {
    switch (f.tag) {
        case FamilySpec::Tag::Acyclic:
            return p.is_acyclic;
        case FamilySpec::Tag::Elementary:
            return p.is_elementary;
        case FamilySpec::Tag::Bicyclic:
            return p.complex_list.size() == 1 && p.complex_list[0].excess == 1;
        case FamilySpec::Tag::OneComplexExcess:
            return p.complex_list.size() == 1 && p.complex_list[0].excess == f.r;
        case FamilySpec::Tag::OneComplexKernel:
            return p.complex_list.size() == 1 && p.complex_list[0].excess == f.r &&
                   p.complex_list[0].deficiency == f.d;
    }
    return false;
}

DigraphCensus census(int n, ModelKind model) {
    if (model == ModelKind::MD) throw domain_error("census: exhaustive census covers D2/SD only");
    if (n < 0 || n > 5) throw domain_error("census: n <= 5");
    DigraphCensus out;
    out.n = n;
    out.model = model;
    out.max_edges = model == ModelKind::D2 ? n * (n - 1) : n * (n - 1) / 2;
    auto init = [&](std::vector<long>& v) { v.assign(static_cast<size_t>(out.max_edges) + 1, 0); };
    init(out.total);
    init(out.acyclic);
    init(out.elementary);
    init(out.one_bicyclic);
    init(out.strongly_connected);

    std::vector<std::pair<int, int>> pairs;
    if (model == ModelKind::D2) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) pairs.emplace_back(u, v);
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }

    long states = 1;
    int base = model == ModelKind::D2 ? 2 : 3;
    for (size_t i = 0; i < pairs.size(); ++i) states *= base;

    for (long code = 0; code < states; ++code) {
        SmallDigraph g;
        g.n = n;
        long c = code;
        int m = 0;
        for (auto& [u, v] : pairs) {
            int s = static_cast<int>(c % base);
            c /= base;
            if (model == ModelKind::D2) {
                if (s == 1) {
                    g.mult[u][v] = 1;
                    ++m;
                }
            } else {
                if (s == 1) {
                    g.mult[u][v] = 1;
                    ++m;
                } else if (s == 2) {
                    g.mult[v][u] = 1;
                    ++m;
                }
            }
        }
        SccProfile p = classify(g);
        ++out.total[static_cast<size_t>(m)];
        if (p.is_acyclic) ++out.acyclic[static_cast<size_t>(m)];
        if (p.is_elementary) ++out.elementary[static_cast<size_t>(m)];
        if (p.complex_list.size() == 1 && p.complex_list[0].excess == 1)
            ++out.one_bicyclic[static_cast<size_t>(m)];
        if (p.components.size() == 1 && n >= 1) ++out.strongly_connected[static_cast<size_t>(m)];
    }
    return out;
}

std::vector<Rat> exact_poly(int n, ModelKind model, const FamilySpec& family) {
    if (model == ModelKind::MD)
        throw domain_error("exact_poly: transcendental in p for the multidigraph model");
    if (n < 0 || n > 5) throw domain_error("exact_poly: n <= 5");
    int max_m = model == ModelKind::D2 ? n * (n - 1) : n * (n - 1) / 2;
    std::vector<long> counts(static_cast<size_t>(max_m) + 1, 0);

    std::vector<std::pair<int, int>> pairs;
    if (model == ModelKind::D2) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) pairs.emplace_back(u, v);
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    long states = 1;
    int base = model == ModelKind::D2 ? 2 : 3;
    for (size_t i = 0; i < pairs.size(); ++i) states *= base;
    for (long code = 0; code < states; ++code) {
        SmallDigraph g;
        g.n = n;
        long c = code;
        int m = 0;
        for (auto& [u, v] : pairs) {
            int s = static_cast<int>(c % base);
            c /= base;
            if (s == 1) {
                g.mult[u][v] = 1;
                ++m;
            } else if (s == 2 && model == ModelKind::SD) {
                g.mult[v][u] = 1;
                ++m;
            }
        }
        if (in_family(classify(g), family)) ++counts[static_cast<size_t>(m)];
    }

    // D2: sum counts[m] p^m (1-p)^{n(n-1)-m};  SD: sum counts[m] p^m (1-2p)^{binom-m}
    int deg_base = model == ModelKind::D2 ? max_m : max_m; // exponent budget of the (1-ap) factor
    long a = model == ModelKind::D2 ? 1 : 2;
    std::vector<Rat> poly(static_cast<size_t>(2 * max_m) + 1, Rat(0));
    for (int m = 0; m <= max_m; ++m) {
        if (counts[static_cast<size_t>(m)] == 0) continue;
        int e = deg_base - m;
        // (1 - a p)^e expanded
        for (int j = 0; j <= e; ++j) {
            Rat term = Rat(counts[static_cast<size_t>(m)]) *
                       Rat::binomial(static_cast<unsigned long>(e), static_cast<unsigned long>(j)) *
                       Rat::pow_int(Rat(-a), j);
            poly[static_cast<size_t>(m + j)] += term;
        }
    }
    while (poly.size() > 1 && poly.back().is_zero()) poly.pop_back();
    return poly;
}

long count_kernels(int r, int d) {
    if (r < 1 || d < 0 || d > 2 * r - 1) throw domain_error("count_kernels: bad (r, d)");
    int nv = 2 * r - d;
    int ne = 3 * r - d;
    if (nv > kMaxN) throw domain_error("count_kernels: kernel too large");
    // enumerate maps from labelled edges to ordered vertex pairs
    long states = 1;
    for (int i = 0; i < ne; ++i) states *= static_cast<long>(nv) * nv;
    long count = 0;
    for (long code = 0; code < states; ++code) {
        SmallDigraph g;
        g.n = nv;
        long c = code;
        for (int i = 0; i < ne; ++i) {
            int pair = static_cast<int>(c % (nv * nv));
            c /= nv * nv;
            g.mult[pair / nv][pair % nv] += 1;
        }
        int comp_count = 0;
        std::vector<int> id = scc_ids(g, comp_count);
        if (comp_count != 1) continue;
        // kernel condition: no suppressible (in 1, out 1) vertex
        bool kernel = true;
        for (int v = 0; v < nv && kernel; ++v) {
            long din = 0, dout = 0;
            for (int u = 0; u < nv; ++u) {
                din += g.mult[u][v];
                dout += g.mult[v][u];
            }
            if (din == 1 && dout == 1) kernel = false;
            if (din == 0 || dout == 0) kernel = false;
        }
        if (kernel) ++count;
    }
    return count;
}

std::pair<Real, Real> md_probability_capped(int n, const Real& p, const FamilySpec& family,
                                            int max_edges) {
    if (n < 1 || n > 3) throw domain_error("md_probability_capped: n <= 3");
    if (family.tag != FamilySpec::Tag::Acyclic && family.tag != FamilySpec::Tag::Elementary &&
        family.tag != FamilySpec::Tag::Bicyclic)
        throw domain_error("md_probability_capped: family must be acyclic/elementary/bicyclic");
    mpfr_prec_t prec = p.prec();
    int M = max_edges;

    // weights of zero-truncated multiplicities: q[k] = p^k/k!, k >= 1
    std::vector<Real> q(static_cast<size_t>(M) + 1, Real(prec));
    Real pk(1L, prec);
    for (int k = 1; k <= M; ++k) {
        pk = pk * p / k;
        q[static_cast<size_t>(k)] = pk;
    }

    // N(t, e) = sum over (m_1..m_e >= 1, sum = t) of prod p^{m_i}/m_i!
    std::vector<std::vector<Real>> ntab(static_cast<size_t>(M) + 1,
                                        std::vector<Real>(static_cast<size_t>(M) + 1, Real(prec)));
    ntab[0][0] = Real(1L, prec);
    for (int e = 1; e <= M; ++e)
        for (int t = e; t <= M; ++t) {
            Real acc(prec);
            for (int k = 1; k <= t - e + 1; ++k)
                acc += q[static_cast<size_t>(k)] * ntab[static_cast<size_t>(t - k)][static_cast<size_t>(e - 1)];
            ntab[static_cast<size_t>(t)][static_cast<size_t>(e)] = acc;
        }

    Real value(prec);
    int npairs = n * n;
    for (long code = 0; code < (1L << npairs); ++code) {
        SmallDigraph g;
        g.n = n;
        int support_edges = 0;
        for (int i = 0; i < npairs; ++i)
            if (code & (1L << i)) {
                g.mult[i / n][i % n] = 1;
                ++support_edges;
            }
        if (support_edges > M) continue;
        SccProfile prof = classify(g);

        // per-component eligible excess set and intra-edge counts
        // dist over (budget, used-complex-slot) after processing components
        // and inter-SCC edges
        int comp_count = static_cast<int>(prof.components.size());
        // recover per-component intra support edge counts: prof edges are
        // multiplicity sums over the support graph (all 1 here)
        std::vector<std::pair<int, long>> comps; // (size, support intra edges)
        for (auto& c : prof.components) comps.emplace_back(c.size, c.edges);
        long inter = support_edges;
        for (auto& c : comps) inter -= c.second;

        bool need_one_complex = family.tag == FamilySpec::Tag::Bicyclic;
        // DP over components: state = (total intra budget, complex used 0/1)
        std::vector<std::vector<Real>> dp(2, std::vector<Real>(static_cast<size_t>(M) + 1, Real(prec)));
        dp[0][0] = Real(1L, prec);
        bool feasible = true;
        for (auto& [sz, se] : comps) {
            if (family.tag == FamilySpec::Tag::Acyclic) {
                if (!(sz == 1 && se == 0)) { feasible = false; break; }
                continue;
            }
            // eligible totals for a non-complex component: excess <= 0,
            // i.e. total = size if strongly connected with cycles, or 0 for
            // a bare vertex; support forces total >= se and >= sz when se>0
            std::vector<std::pair<int, Real>> options; // (intra total, weight)
            if (se == 0) {
                options.emplace_back(0, Real(1L, prec));
            } else {
                // component is strongly connected with se >= sz support edges
                if (se == sz) // cycle support; all multiplicities 1 keeps excess 0
                    options.emplace_back(static_cast<int>(se), ntab[static_cast<size_t>(se)][static_cast<size_t>(se)]);
                // excess-1 option for the bicyclic family
                if (need_one_complex && se + (se == sz ? 1 : 0) <= M) {
                    long t1 = sz + 1; // total giving excess exactly 1
                    if (t1 >= se && t1 <= M)
                        options.emplace_back(static_cast<int>(t1),
                                             ntab[static_cast<size_t>(t1)][static_cast<size_t>(se)]);
                }
            }
            if (options.empty()) { feasible = false; break; }
            std::vector<std::vector<Real>> nx(2, std::vector<Real>(static_cast<size_t>(M) + 1, Real(prec)));
            for (int used = 0; used < 2; ++used)
                for (int b = 0; b <= M; ++b) {
                    if (dp[static_cast<size_t>(used)][static_cast<size_t>(b)].is_zero()) continue;
                    const Real& w0 = dp[static_cast<size_t>(used)][static_cast<size_t>(b)];
                    for (auto& [t, wt] : options) {
                        if (b + t > M) continue;
                        bool complex_opt = (t == sz + 1) && se > 0;
                        if (complex_opt && used == 1) continue;
                        nx[static_cast<size_t>(used || complex_opt)][static_cast<size_t>(b + t)] += w0 * wt;
                    }
                }
            dp = std::move(nx);
        }
        if (!feasible) continue;

        // inter-SCC edges: each multiplicity >= 1 unconstrained; convolve
        for (long e = 0; e < inter; ++e) {
            std::vector<std::vector<Real>> nx(2, std::vector<Real>(static_cast<size_t>(M) + 1, Real(prec)));
            for (int used = 0; used < 2; ++used)
                for (int b = 0; b <= M; ++b) {
                    if (dp[static_cast<size_t>(used)][static_cast<size_t>(b)].is_zero()) continue;
                    for (int k = 1; b + k <= M; ++k)
                        nx[static_cast<size_t>(used)][static_cast<size_t>(b + k)] +=
                            dp[static_cast<size_t>(used)][static_cast<size_t>(b)] * q[static_cast<size_t>(k)];
                }
            dp = std::move(nx);
        }

        int want_used = need_one_complex ? 1 : 0;
        for (int b = 0; b <= M; ++b) value += dp[static_cast<size_t>(want_used)][static_cast<size_t>(b)];
    }
    value = value * exp(-(p * (n * n)));

    // tail: P(Poisson(n^2 p) > M)
    Real lam = p * (n * n);
    Real cdf(prec), term(1L, prec);
    for (int k = 0; k <= M; ++k) {
        cdf += term;
        term = term * lam / (k + 1);
    }
    Real tail = Real(1L, prec) - cdf * exp(-lam);
    if (tail.sign() < 0) tail = Real(prec);
    return {value, tail};
}

} // namespace oracle
} // namespace dgp
