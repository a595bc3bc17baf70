#include "gbh/fi_family.hpp"

#include <algorithm>

#include "gbh/parallel.hpp"

namespace gbh {

namespace {

std::string copy_name(int i, const std::string& id) { return "copy" + std::to_string(i) + ":" + id; }

}  // namespace

FIGraphFamily make_family(Graph base, Graph copy, Graph overlap,
                          std::map<std::string, std::string> embed_base,
                          std::map<std::string, std::string> embed_copy, int n_min) {
  GraphHom hb = compose_or_check_hom(embed_base, overlap, base);
  GraphHom hc = compose_or_check_hom(embed_copy, overlap, copy);
  if (!hb.injective || !hc.injective)
    fail(Errc::NotInjective, "overlap embeddings must be injective");
  FIGraphFamily f;
  f.base = std::move(base);
  f.copy = std::move(copy);
  f.overlap = std::move(overlap);
  f.embed_base = std::move(embed_base);
  f.embed_copy = std::move(embed_copy);
  f.n_min = n_min;
  return f;
}

Graph evaluate(const FIGraphFamily& family, int n) {
  if (n < family.n_min)
    fail(Errc::NBelowTail, "n = " + std::to_string(n) + " below the family tail n_min = " +
                               std::to_string(family.n_min));
  GraphHom hb = compose_or_check_hom(family.embed_base, family.overlap, family.base);
  GraphHom hc = compose_or_check_hom(family.embed_copy, family.overlap, family.copy);

  // copy vertices in the overlap image are glued onto their base image
  std::vector<std::string> glued(family.copy.vertex_count());
  std::vector<bool> is_overlap_vertex(family.copy.vertex_count(), false);
  for (int h = 0; h < family.overlap.vertex_count(); ++h) {
    is_overlap_vertex[hc.vertex_map[h]] = true;
    glued[hc.vertex_map[h]] = family.base.vertex_id(hb.vertex_map[h]);
  }
  std::vector<bool> is_overlap_edge(family.copy.edge_count(), false);
  for (int e = 0; e < family.overlap.edge_count(); ++e) is_overlap_edge[hc.edge_map[e]] = true;

  std::vector<std::string> verts = family.base.vertex_ids();
  std::vector<EdgeSpec> edges;
  for (const auto& e : family.base.edges())
    edges.push_back({e.id, {family.base.vertex_id(e.u), family.base.vertex_id(e.v)}});

  for (int i = 1; i <= n; ++i) {
    for (int v = 0; v < family.copy.vertex_count(); ++v)
      if (!is_overlap_vertex[v]) verts.push_back(copy_name(i, family.copy.vertex_id(v)));
    for (int e = 0; e < family.copy.edge_count(); ++e) {
      if (is_overlap_edge[e]) continue;  // identified with its base image
      const auto& edge = family.copy.edge(e);
      auto endpoint = [&](int v) {
        return is_overlap_vertex[v] ? glued[v] : copy_name(i, family.copy.vertex_id(v));
      };
      edges.push_back({copy_name(i, edge.id), {endpoint(edge.u), endpoint(edge.v)}});
    }
  }
  return build_graph(verts, edges);
}

Transition transition(const FIGraphFamily& family, const std::vector<int>& f, int r) {
  int n = static_cast<int>(f.size());
  std::vector<bool> hit(r + 1, false);
  for (int img : f) {
    if (img < 1 || img > r || hit[img]) fail(Errc::NotInjective, "transition map is not an injection");
    hit[img] = true;
  }
  Transition t;
  t.source = std::make_shared<Graph>(evaluate(family, n));
  t.target = std::make_shared<Graph>(evaluate(family, r));

  std::map<std::string, std::string> vm;
  for (const auto& id : family.base.vertex_ids()) vm[id] = id;
  for (int i = 1; i <= n; ++i)
    for (const auto& id : family.copy.vertex_ids()) {
      std::string from = copy_name(i, id);
      if (t.source->vertex_index(from) >= 0) vm[from] = copy_name(f[i - 1], id);
    }
  t.hom = compose_or_check_hom(vm, *t.source, *t.target);
  return t;
}

LinearPolynomial edge_count_check(const FIGraphFamily& family, const std::vector<int>& window) {
  if (window.size() < 3) fail(Errc::WindowTooSmall, "edge-linearity check needs >= 3 points");
  std::vector<long> counts;
  for (int n : window) counts.push_back(evaluate(family, n).edge_count());
  long dn = window[1] - window[0];
  long de = counts[1] - counts[0];
  if (dn == 0 || de % dn != 0) fail(Errc::NotEdgeLinear, "no integer linear fit through the window");
  LinearPolynomial p{de / dn, counts[0] - (de / dn) * window[0]};
  for (size_t i = 0; i < window.size(); ++i)
    if (p.a * window[i] + p.b != counts[i])
      fail(Errc::NotEdgeLinear, "edge count deviates from the linear fit at n = " +
                                    std::to_string(window[i]));
  return p;
}

namespace {

template <typename F>
std::vector<long> betti_sequence_impl(const FIGraphFamily& family, int q, int p, int j,
                                      const std::vector<int>& ns, const F& field, unsigned jobs) {
  std::vector<long> out(ns.size(), 0);
  parallel_for(ns.size(), jobs, [&](std::size_t i) {
    Graph g = evaluate(family, ns[i]);
    auto m = truncated_module(g, q, j, /*reduced=*/true, field);
    out[i] = koszul_betti(m, p, j);
  });
  return out;
}

template <typename F>
std::vector<std::set<int>> support_rows(const FIGraphFamily& family, int q, int p,
                                        const std::vector<int>& ns, int j_max, const F& field,
                                        unsigned jobs) {
  std::vector<std::set<int>> out(ns.size());
  parallel_for(ns.size(), jobs, [&](std::size_t i) {
    Graph g = evaluate(family, ns[i]);
    auto m = truncated_module(g, q, j_max, /*reduced=*/true, field);
    for (int j = 0; j <= j_max; ++j)
      if (koszul_betti(m, p, j) != 0) out[i].insert(j);
  });
  return out;
}

}  // namespace

std::vector<long> betti_sequence(const FIGraphFamily& family, int q, int p, int j,
                                 const std::vector<int>& ns, const FieldTag& field, unsigned jobs) {
  if (field.rational) return betti_sequence_impl(family, q, p, j, ns, RationalField{}, jobs);
  return betti_sequence_impl(family, q, p, j, ns, PrimeField(field.prime), jobs);
}

mpq_class evaluate_polynomial(const std::vector<mpq_class>& coeffs, long x) {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

StabilizationReport detect_polynomial(const std::vector<long>& seq, const std::vector<int>& ns,
                                      int max_degree) {
  if (seq.size() != ns.size()) fail(Errc::DimensionMismatch, "sequence and window lengths differ");
  if (static_cast<int>(seq.size()) < max_degree + 3)
    fail(Errc::WindowTooSmall, "need at least max_degree + 3 points");

  StabilizationReport rep;
  rep.target = "polynomial";
  rep.n_values = ns;
  rep.values = seq;

  // Newton interpolation through the max_degree+1 trailing points that
  // precede the two holdouts.
  std::size_t fit_end = seq.size() - 2;
  std::size_t fit_begin = fit_end - static_cast<std::size_t>(max_degree + 1);
  std::vector<mpq_class> xs, divided;
  for (std::size_t i = fit_begin; i < fit_end; ++i) {
    xs.emplace_back(ns[i]);
    divided.emplace_back(seq[i]);
  }
  for (std::size_t level = 1; level < divided.size(); ++level)
    for (std::size_t i = divided.size() - 1; i >= level; --i)
      divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);

  // expand Newton form into monomial coefficients
  std::vector<mpq_class> poly{divided.empty() ? mpq_class(0) : divided[0]};
  std::vector<mpq_class> basis{1};
  for (std::size_t k = 1; k < divided.size(); ++k) {
    // basis *= (x - xs[k-1])
    std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * xs[k - 1];
    }
    basis = std::move(next);
    poly.resize(std::max(poly.size(), basis.size()), mpq_class(0));
    for (std::size_t i = 0; i < basis.size(); ++i) poly[i] += divided[k] * basis[i];
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();

  bool ok = true;
  for (std::size_t i = fit_end; i < seq.size(); ++i) {
    bool match = evaluate_polynomial(poly, ns[i]) == seq[i];
    rep.holdouts.push_back({ns[i], match});
    ok = ok && match;
  }
  rep.stabilized = ok;
  if (ok) rep.polynomial = std::move(poly);
  return rep;
}

StabilizationReport support_stabilization(const FIGraphFamily& family, int q, int p,
                                          const std::vector<int>& ns, int j_max,
                                          const FieldTag& field, unsigned jobs) {
  StabilizationReport rep;
  rep.target = "support(q=" + std::to_string(q) + ",p=" + std::to_string(p) + ")";
  rep.n_values = ns;
  if (field.rational)
    rep.supports = support_rows(family, q, p, ns, j_max, RationalField{}, jobs);
  else
    rep.supports = support_rows(family, q, p, ns, j_max, PrimeField(field.prime), jobs);

  if (!rep.supports.empty()) {
    rep.stable_support = rep.supports.back();
    int run = 0;
    for (auto it = rep.supports.rbegin(); it != rep.supports.rend() && *it == rep.stable_support; ++it)
      ++run;
    rep.stable_run = run;
    int needed = std::max(2, static_cast<int>((rep.supports.size() + 1) / 2));
    rep.stabilized = run >= needed;
  }
  return rep;
}

}  // namespace gbh
