#include "lpwr/sampling.hpp"

namespace lpwr {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

} // namespace

Path sample_path(const Graph& g, std::mt19937_64& rng, int max_len) {
  Path p = Path::at(static_cast<int>(pick(rng, static_cast<std::size_t>(g.vertex_count()))));
  int len = max_len <= 0 ? 0 : static_cast<int>(pick(rng, static_cast<std::size_t>(max_len) + 1));
  for (int i = 0; i < len; ++i) {
    const auto& outs = g.out_edges(path_range(g, p));
    if (outs.empty()) break;
    p.edges.push_back(outs[pick(rng, outs.size())]);
  }
  return p;
}

Mono sample_mono(const Graph& g, std::mt19937_64& rng, int max_len) {
  Path p = sample_path(g, rng, max_len);
  // backward walk from r(p) so that r(q) = r(p)
  int range = path_range(g, p);
  int len = max_len <= 0 ? 0 : static_cast<int>(pick(rng, static_cast<std::size_t>(max_len) + 1));
  std::vector<int> rev;
  int at = range;
  for (int i = 0; i < len; ++i) {
    const auto& ins = g.in_edges(at);
    if (ins.empty()) break;
    int e = ins[pick(rng, ins.size())];
    rev.push_back(e);
    at = g.edge(e).src;
  }
  Path q{at, {rev.rbegin(), rev.rend()}};
  return Mono{std::move(p), std::move(q)};
}

CohnElement sample_cohn(const GraphPtr& g, Field f, std::mt19937_64& rng,
                        int max_terms, int max_len) {
  CohnElement x = CohnElement::zero(g, f);
  int terms = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(max_terms)));
  for (int i = 0; i < terms; ++i) {
    long c = static_cast<long>(pick(rng, 7)) - 3;
    x.add_term(sample_mono(*g, rng, max_len), f.integer(c));
  }
  return x;
}

BridgePath sample_bridge_path(const ExtendedGraph& eg, std::mt19937_64& rng,
                              int max_len) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    Path p = sample_path(*eg.base(), rng, max_len - 1);
    const auto& outs = eg.out_bridges(path_range(*eg.base(), p));
    if (outs.empty()) continue;
    return BridgePath{p, outs[pick(rng, outs.size())]};
  }
  return BridgePath::x0();
}

ActionElement sample_action_element(const ExtendedGraphPtr& eg, std::mt19937_64& rng) {
  ActionElement r = ActionElement::of_sg(eg, sample_cohn(eg->base(), eg->field(), rng, 2, 3));
  int units = static_cast<int>(pick(rng, 3));
  for (int i = 0; i < units; ++i) {
    // x0 rows/columns are legitimate indices (annihilated by S)
    BridgePath x = pick(rng, 5) == 0 ? BridgePath::x0() : sample_bridge_path(*eg, rng, 3);
    BridgePath y = pick(rng, 5) == 0 ? BridgePath::x0() : sample_bridge_path(*eg, rng, 3);
    r.mat.add_entry(x, y, eg->coeff()->sample(rng));
  }
  return r;
}

} // namespace lpwr
