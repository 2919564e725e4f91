#include "lpwr/wreath.hpp"

#include <algorithm>
#include <cassert>

#include "lpwr/sampling.hpp"

namespace lpwr {

namespace {

Path convert_path(const Graph& from, const Graph& to, const Path& p) {
  Path r = Path::at(to.vertex(from.vertex_name(p.src)));
  for (int e : p.edges)
    r.edges.push_back(to.edge_by_name(from.edge(e).name));
  return r;
}

std::string mono_key(const Graph& g, const Mono& m) {
  return path_str(g, m.p) + "|" + path_str(g, m.q);
}

} // namespace

WreathElement::WreathElement(CohnElement lp, MatrixPart mat)
    : lp_(std::move(lp)), mat_(std::move(mat)) {}

WreathElement WreathElement::normal_form(ActionElement raw, const RewriteOptions& opt) {
  const ExtendedGraphPtr eg = raw.mat.extended();
  if (!corner_valid(*eg, raw.mat))
    throw std::invalid_argument("wreath element: corner violation");
  const CoeffAlgebra& alg = *eg->coeff();
  MatrixPart mat = std::move(raw.mat);
  CohnElement lp = rewrite_normal_form(
      std::move(raw.sg), opt,
      [&](int v, const Path& p0, const Path& q0, const Scalar& alpha) {
        for (int b : eg->out_bridges(v))
          mat.add_entry(BridgePath{p0, b}, BridgePath{q0, b},
                        alg.scale(-alpha, eg->bridge_range(b)));
      });
  return WreathElement(std::move(lp), std::move(mat));
}

WreathElement WreathElement::zero(const ExtendedGraphPtr& eg) {
  return WreathElement(CohnElement::zero(eg->base(), eg->field()), MatrixPart(eg));
}

WreathElement WreathElement::from_cohn(const ExtendedGraphPtr& eg, CohnElement c) {
  return normal_form(ActionElement::of_sg(eg, std::move(c)));
}

WreathElement WreathElement::from_leavitt(const ExtendedGraphPtr& eg,
                                          const LeavittElement& x) {
  if (x.graph() != eg->base())
    throw std::invalid_argument("from_leavitt: element over a different graph");
  return WreathElement(x.cohn(), MatrixPart(eg));
}

WreathElement WreathElement::matrix_unit(const ExtendedGraphPtr& eg, const AlgElem& a,
                                         const BridgePath& x, const BridgePath& y) {
  const CoeffAlgebra& alg = *eg->coeff();
  if (!alg.equal(a, corner_project(*eg, x, y, a)))
    throw std::invalid_argument("matrix unit: corner violation");
  MatrixPart mat(eg);
  mat.add_entry(x, y, a);
  return WreathElement(CohnElement::zero(eg->base(), eg->field()), std::move(mat));
}

LeavittElement WreathElement::leavitt_part() const { return LeavittElement(lp_); }

WreathElement WreathElement::operator+(const WreathElement& o) const {
  return WreathElement(lp_ + o.lp_, mat_ + o.mat_);
}
WreathElement WreathElement::operator-(const WreathElement& o) const {
  return *this + (-o);
}
WreathElement WreathElement::operator-() const {
  return WreathElement(-lp_, -mat_);
}
WreathElement WreathElement::scaled(const Scalar& s) const {
  return WreathElement(lp_.scaled(s), mat_.scaled(s));
}
bool WreathElement::operator==(const WreathElement& o) const {
  return lp_ == o.lp_ && mat_ == o.mat_;
}

std::string WreathElement::str() const {
  if (is_zero()) return "0";
  if (mat_.is_zero()) return lp_.str();
  if (lp_.is_zero()) return mat_.str();
  return lp_.str() + " + " + mat_.str();
}

WreathElement wreath_mul(const WreathElement& x, const WreathElement& y) {
  const ExtendedGraphPtr& eg = x.extended();
  if (eg != y.extended())
    throw std::invalid_argument("wreath_mul: elements over different extended graphs");
  ActionElement prod = action_mul(x.raw(), y.raw(), bridge_biset(eg));
  WreathElement r = WreathElement::normal_form(std::move(prod));
  assert(corner_valid(*eg, r.matrix_part()));
  return r;
}

ActionElement ck_full(const ExtendedGraphPtr& eg, int v) {
  ActionElement r =
      ActionElement::of_sg(eg, ck_prime(eg->base(), eg->field(), v));
  for (int b : eg->out_bridges(v)) {
    BridgePath e{Path::at(v), b};
    r.mat.add_entry(e, e, eg->coeff()->negate(eg->bridge_range(b)));
  }
  return r;
}

AlgElem corner_project(const ExtendedGraph& eg, const BridgePath& p,
                       const BridgePath& q, const AlgElem& a) {
  const CoeffAlgebra& alg = *eg.coeff();
  return alg.mul(alg.mul(bridge_path_range(eg, p), a), bridge_path_range(eg, q));
}

bool corner_valid(const ExtendedGraph& eg, const MatrixPart& m) {
  for (const auto& [k, a] : m.entries())
    if (!eg.coeff()->equal(a, corner_project(eg, k.first, k.second, a)))
      return false;
  return true;
}

WreathElement sample_wreath_element(const ExtendedGraphPtr& eg, std::mt19937_64& rng) {
  ActionElement raw = sample_action_element(eg, rng);
  MatrixPart mat(eg);
  for (const auto& [k, a] : raw.mat.entries())
    mat.add_entry(k.first, k.second, corner_project(*eg, k.first, k.second, a));
  return WreathElement::normal_form(ActionElement{std::move(raw.sg), std::move(mat)});
}

CoordVec<Scalar> wreath_coords(const WreathElement& x) {
  const ExtendedGraph& eg = *x.extended();
  CoordVec<Scalar> v;
  for (const auto& [m, c] : x.leavitt_cohn().terms())
    v.emplace("L|" + mono_key(*eg.base(), m), c);
  for (const auto& [k, a] : x.matrix_part().entries())
    for (const auto& [key, c] : eg.coeff()->coords(a))
      v.emplace("M|" + bridge_path_str(eg, k.first) + "|" +
                    bridge_path_str(eg, k.second) + "|" + key,
                c);
  return v;
}

// ------------------------------------------------------------------- prop1

std::vector<WreathElement> prop1_generators(const ExtendedGraphPtr& eg,
                                            const std::vector<AlgElem>& a_gens) {
  const GraphPtr& g = eg->base();
  const Field f = eg->field();
  std::vector<WreathElement> gens;
  for (int v = 0; v < g->vertex_count(); ++v)
    gens.push_back(WreathElement::from_cohn(eg, CohnElement::vertex(g, f, v)));
  for (int e = 0; e < g->edge_count(); ++e)
    gens.push_back(WreathElement::from_cohn(eg, CohnElement::edge(g, f, e)));
  for (int e = 0; e < g->edge_count(); ++e)
    gens.push_back(WreathElement::from_cohn(eg, CohnElement::edge_star(g, f, e)));
  BridgePath x0 = BridgePath::x0();
  for (const auto& a : a_gens)
    gens.push_back(WreathElement::matrix_unit(eg, a, x0, x0));
  for (int b = 0; b < eg->bridge_count(); ++b) {
    BridgePath e{Path::at(eg->bridge(b).src), b};
    gens.push_back(WreathElement::matrix_unit(eg, eg->bridge_range(b), e, x0));
    gens.push_back(WreathElement::matrix_unit(eg, eg->bridge_range(b), x0, e));
  }
  return gens;
}

namespace {

// witness word builder for prop1_check; words are products of library
// elements, each tagged for the report
struct Witness {
  std::vector<WreathElement> word;
  std::vector<std::string> tags;

  void push(WreathElement e, std::string tag) {
    word.push_back(std::move(e));
    tags.push_back(std::move(tag));
  }
  WreathElement eval() const {
    WreathElement r = word.front();
    for (std::size_t i = 1; i < word.size(); ++i) r = wreath_mul(r, word[i]);
    return r;
  }
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (i) s += " . ";
      s += tags[i];
    }
    return s;
  }
};

void push_left_transporter(Witness& w, const ExtendedGraphPtr& eg, const BridgePath& x) {
  if (x.is_x0()) return;
  const GraphPtr& g = eg->base();
  const Field f = eg->field();
  for (int e : x.prefix.edges)
    w.push(WreathElement::from_cohn(eg, CohnElement::edge(g, f, e)), g->edge(e).name);
  BridgePath be{Path::at(eg->bridge(x.bridge).src), x.bridge};
  w.push(WreathElement::matrix_unit(eg, eg->bridge_range(x.bridge), be, BridgePath::x0()),
         "[r(" + eg->bridge(x.bridge).name + ") @ " + eg->bridge(x.bridge).name + ", 0]");
}

void push_right_transporter(Witness& w, const ExtendedGraphPtr& eg, const BridgePath& y) {
  if (y.is_x0()) return;
  const GraphPtr& g = eg->base();
  const Field f = eg->field();
  BridgePath be{Path::at(eg->bridge(y.bridge).src), y.bridge};
  w.push(WreathElement::matrix_unit(eg, eg->bridge_range(y.bridge), BridgePath::x0(), be),
         "[r(" + eg->bridge(y.bridge).name + ") @ 0, " + eg->bridge(y.bridge).name + "]");
  for (auto it = y.prefix.edges.rbegin(); it != y.prefix.edges.rend(); ++it)
    w.push(WreathElement::from_cohn(eg, CohnElement::edge_star(g, f, *it)),
           g->edge(*it).name + "^*");
}

} // namespace

Report prop1_check(const ExtendedGraphPtr& eg, const std::vector<AlgElem>& a_gens,
                   int max_index, int max_word, int max_mono, int max_word_len) {
  Report rep;
  const GraphPtr& g = eg->base();
  const Field f = eg->field();
  const CoeffAlgebra& alg = *eg->coeff();
  int reached = 0;

  auto check_witness = [&](const Witness& w, const WreathElement& target,
                           const std::string& label) {
    if (static_cast<int>(w.word.size()) > max_word_len) {
      rep.fail("witness for " + label + " exceeds word length " +
               std::to_string(max_word_len) + ": " + w.str());
      return;
    }
    if (!(w.eval() == target)) {
      rep.fail("witness for " + label + " evaluates incorrectly: " + w.str());
      return;
    }
    ++reached;
  };

  // normal-form monomial targets pq*, total length <= max_mono
  auto paths = enumerate_paths(*g, max_mono);
  for (const auto& p : paths)
    for (const auto& q : paths) {
      if (static_cast<int>(p.length() + q.length()) > max_mono) continue;
      if (path_range(*g, p) != path_range(*g, q)) continue;
      Mono m{p, q};
      if (is_redex(*g, m)) continue;
      WreathElement target =
          WreathElement::from_cohn(eg, CohnElement::monomial(g, f, m, f.one()));
      Witness w;
      if (p.length() == 0 && q.length() == 0) {
        w.push(WreathElement::from_cohn(eg, CohnElement::vertex(g, f, p.src)),
               g->vertex_name(p.src));
      } else {
        for (int e : p.edges)
          w.push(WreathElement::from_cohn(eg, CohnElement::edge(g, f, e)),
                 g->edge(e).name);
        for (auto it = q.edges.rbegin(); it != q.edges.rend(); ++it)
          w.push(WreathElement::from_cohn(eg, CohnElement::edge_star(g, f, *it)),
                 g->edge(*it).name + "^*");
      }
      check_witness(w, target, "monomial " + mono_key(*g, m));
    }

  // matrix-unit targets (w)_{x,y}
  std::vector<BridgePath> indices = enumerate_bridge_paths(*eg, max_index);
  std::vector<std::vector<std::size_t>> words{{}};
  {
    std::vector<std::vector<std::size_t>> frontier{{}};
    for (int len = 1; len <= max_word; ++len) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& wd : frontier)
        for (std::size_t i = 0; i < a_gens.size(); ++i) {
          auto ext = wd;
          ext.push_back(i);
          next.push_back(ext);
        }
      words.insert(words.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  for (const auto& x : indices)
    for (const auto& y : indices)
      for (const auto& wd : words) {
        AlgElem entry = alg.one();
        for (std::size_t i : wd) entry = alg.mul(entry, a_gens[i]);
        if (wd.empty() && x.is_x0() && y.is_x0()) {
          // (r(e))_{0,0} via the transporter pair; one target per bridge range
          if (eg->bridge_count() == 0) continue;
          entry = eg->bridge_range(0);
        }
        entry = corner_project(*eg, x, y, entry);
        if (alg.is_zero(entry)) continue;
        WreathElement target = WreathElement::matrix_unit(eg, entry, x, y);
        Witness w;
        push_left_transporter(w, eg, x);
        if (wd.empty() && x.is_x0() && y.is_x0()) {
          BridgePath be{Path::at(eg->bridge(0).src), 0};
          w.push(WreathElement::matrix_unit(eg, eg->bridge_range(0), BridgePath::x0(), be),
                 "[r(e) @ 0, " + eg->bridge(0).name + "]");
          w.push(WreathElement::matrix_unit(eg, eg->bridge_range(0), be, BridgePath::x0()),
                 "[r(e) @ " + eg->bridge(0).name + ", 0]");
        } else {
          for (std::size_t i : wd)
            w.push(WreathElement::matrix_unit(eg, a_gens[i], BridgePath::x0(),
                                              BridgePath::x0()),
                   "[a_" + std::to_string(i) + " @ 0, 0]");
        }
        push_right_transporter(w, eg, y);
        if (w.word.empty()) continue; // x = y = x0 with nonempty word handled above
        check_witness(w, target,
                      "unit [" + alg.str(entry) + " @ " + bridge_path_str(*eg, x) +
                          ", " + bridge_path_str(*eg, y) + "]");
      }

  rep.note("targets reached from generators: " + std::to_string(reached));
  return rep;
}

// ------------------------------------------------------------------- prop2

Prop2Context prop2_context(GraphPtr g, Field f, const VertexSet& w) {
  auto hs = hereditary_saturated_check(*g, w);
  if (!hs.hereditary || !hs.saturated)
    throw std::invalid_argument("prop2: W must be hereditary and saturated");
  if (w.empty() || w.size() == static_cast<std::size_t>(g->vertex_count()))
    throw std::invalid_argument("prop2: W must be a proper nonempty subset");
  Prop2Context ctx;
  ctx.full = g;
  ctx.w = w;
  ctx.inside = std::make_shared<const Graph>(restrict_graph(*g, w));
  ctx.coeff = std::make_shared<const LeavittCoeff>(ctx.inside, f);
  auto quotient = std::make_shared<const Graph>(quotient_graph(*g, w));
  std::vector<BridgeSpec> bridges;
  for (int e = 0; e < g->edge_count(); ++e) {
    const auto& ed = g->edge(e);
    bool src_in = std::binary_search(w.begin(), w.end(), ed.src);
    bool rng_in = std::binary_search(w.begin(), w.end(), ed.rng);
    if (!src_in && rng_in)
      bridges.push_back(BridgeSpec{ed.name, g->vertex_name(ed.src), g->vertex_name(ed.rng)});
  }
  ctx.eg = extend_graph(quotient, ctx.coeff, bridges);
  return ctx;
}

namespace {

bool in_w(const Prop2Context& ctx, int v) {
  return std::binary_search(ctx.w.begin(), ctx.w.end(), v);
}

// index of the first edge whose range lies in W, or -1 when the path never
// enters W (requires s(p) outside W)
int first_entry_edge(const Prop2Context& ctx, const Path& p) {
  const Graph& g = *ctx.full;
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (in_w(ctx, g.edge(p.edges[i]).rng)) return static_cast<int>(i);
  return -1;
}

// bridge path of ctx.eg from the Gamma-prefix p.edges[0..k]
BridgePath to_bridge_path(const Prop2Context& ctx, const Path& p, int k) {
  const Graph& g = *ctx.full;
  Path prefix{p.src, {p.edges.begin(), p.edges.begin() + k}};
  Path qprefix = convert_path(g, *ctx.eg->base(), prefix);
  int b = ctx.eg->find_bridge(g.edge(p.edges[static_cast<std::size_t>(k)]).name);
  assert(b >= 0);
  return BridgePath{qprefix, b};
}

// the part of p after its first entry into W, as a path of Gamma(W)
Path inside_tail(const Prop2Context& ctx, const Path& p, int k) {
  const Graph& g = *ctx.full;
  Path tail{g.edge(p.edges[static_cast<std::size_t>(k)]).rng,
            {p.edges.begin() + k + 1, p.edges.end()}};
  // hereditary: the tail may not leave W
  for (int e : tail.edges) assert(in_w(ctx, g.edge(e).rng));
  return convert_path(g, *ctx.inside, tail);
}

} // namespace

Prop2Decomposition prop2_decompose(const Prop2Context& ctx, const LeavittElement& x) {
  const Graph& g = *ctx.full;
  const Field f = x.field();
  Prop2Decomposition dec{CohnElement::zero(ctx.full, f), {}, {}, {}, ctx.coeff->zero()};
  auto inside_mono = [&](const Path& p, const Path& q, const Scalar& c) {
    CohnElement m = CohnElement::zero(ctx.inside, f);
    m.add_term(Mono{p, q}, c);
    return LeavittCoeff::wrap(LeavittElement(std::move(m)));
  };
  for (const auto& [m, c] : x.cohn().terms()) {
    bool p_in = in_w(ctx, m.p.src);
    bool q_in = in_w(ctx, m.q.src);
    if (p_in && q_in) {
      dec.d = ctx.coeff->add(
          dec.d, inside_mono(convert_path(g, *ctx.inside, m.p),
                             convert_path(g, *ctx.inside, m.q), c));
      continue;
    }
    int kp = p_in ? -2 : first_entry_edge(ctx, m.p);
    int kq = q_in ? -2 : first_entry_edge(ctx, m.q);
    if (!p_in && !q_in && kp < 0 && kq < 0) {
      dec.a_prime.add_term(m, c); // no vertex of either path lies in W
      continue;
    }
    if (!p_in && !q_in) {
      // common range lies in W, so both paths enter
      assert(kp >= 0 && kq >= 0);
      BridgePath bp = to_bridge_path(ctx, m.p, kp);
      BridgePath bq = to_bridge_path(ctx, m.q, kq);
      std::string key = bridge_path_str(*ctx.eg, bp) + "|" + bridge_path_str(*ctx.eg, bq);
      AlgElem add = inside_mono(inside_tail(ctx, m.p, kp), inside_tail(ctx, m.q, kq), c);
      auto it = dec.a_pq.find(key);
      if (it == dec.a_pq.end())
        dec.a_pq.emplace(key, std::make_pair(std::make_pair(bp, bq), add));
      else
        it->second.second = ctx.coeff->add(it->second.second, add);
      continue;
    }
    if (!p_in) {
      // p enters W, q starts inside: b-part
      assert(kp >= 0);
      BridgePath bp = to_bridge_path(ctx, m.p, kp);
      std::string key = bridge_path_str(*ctx.eg, bp);
      AlgElem add = inside_mono(inside_tail(ctx, m.p, kp),
                                convert_path(g, *ctx.inside, m.q), c);
      auto it = dec.b_p.find(key);
      if (it == dec.b_p.end())
        dec.b_p.emplace(key, std::make_pair(bp, add));
      else
        it->second.second = ctx.coeff->add(it->second.second, add);
      continue;
    }
    // p starts inside, q enters W: c-part
    assert(kq >= 0);
    BridgePath bq = to_bridge_path(ctx, m.q, kq);
    std::string key = bridge_path_str(*ctx.eg, bq);
    AlgElem add = inside_mono(convert_path(g, *ctx.inside, m.p),
                              inside_tail(ctx, m.q, kq), c);
    auto it = dec.c_q.find(key);
    if (it == dec.c_q.end())
      dec.c_q.emplace(key, std::make_pair(bq, add));
    else
      it->second.second = ctx.coeff->add(it->second.second, add);
  }
  return dec;
}

WreathElement prop2_phi(const Prop2Context& ctx, const LeavittElement& x) {
  const Field f = x.field();
  Prop2Decomposition dec = prop2_decompose(ctx, x);
  ActionElement raw = ActionElement::zero(ctx.eg);
  // a' maps onto the quotient graph and is re-normalized by the wreath
  // rewriting, which re-emits the matrix corrections for edges into W
  CohnElement aq = CohnElement::zero(ctx.eg->base(), f);
  for (const auto& [m, c] : dec.a_prime.terms())
    aq.add_term(Mono{convert_path(*ctx.full, *ctx.eg->base(), m.p),
                     convert_path(*ctx.full, *ctx.eg->base(), m.q)},
                c);
  raw.sg = std::move(aq);
  BridgePath x0 = BridgePath::x0();
  for (const auto& [key, v] : dec.a_pq)
    raw.mat.add_entry(v.first.first, v.first.second, v.second);
  for (const auto& [key, v] : dec.b_p) raw.mat.add_entry(v.first, x0, v.second);
  for (const auto& [key, v] : dec.c_q) raw.mat.add_entry(x0, v.first, v.second);
  if (!ctx.coeff->is_zero(dec.d)) raw.mat.add_entry(x0, x0, dec.d);
  return WreathElement::normal_form(std::move(raw));
}

Report prop2_verify(GraphPtr g, Field f, const VertexSet& w, const Prop2Options& opt) {
  Report rep;
  Prop2Context ctx = prop2_context(g, f, w);
  std::mt19937_64 rng(opt.seed);
  auto phi = [&](const LeavittElement& x) { return prop2_phi(ctx, x); };
  auto sample = [&] {
    return LeavittElement(sample_cohn(g, f, rng, 3, opt.maxlen));
  };

  // (i) linearity
  {
    int bad = 0;
    for (int i = 0; i < std::max(20, opt.samples / 10); ++i) {
      LeavittElement x = sample(), y = sample();
      Scalar lam = f.integer(static_cast<long>(rng() % 7) - 3);
      if (!(phi(x + y) == phi(x) + phi(y))) ++bad;
      if (!(phi(x.scaled(lam)) == phi(x).scaled(lam))) ++bad;
    }
    if (bad) rep.fail("phi fails linearity on " + std::to_string(bad) + " samples");
    else rep.note("linearity: ok");
  }

  // (ii) multiplicativity
  {
    int bad = 0;
    for (int i = 0; i < opt.samples; ++i) {
      LeavittElement x = sample(), y = sample();
      if (!(phi(lpa_mul(x, y)) == wreath_mul(phi(x), phi(y)))) ++bad;
    }
    if (bad)
      rep.fail("phi fails multiplicativity on " + std::to_string(bad) + " of " +
               std::to_string(opt.samples) + " pairs");
    else
      rep.note("multiplicativity: ok on " + std::to_string(opt.samples) + " pairs");
  }

  // (iii) injectivity on the bounded normal-form span
  {
    std::vector<CoordVec<Scalar>> images;
    auto paths = enumerate_paths(*g, opt.maxlen);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        if (static_cast<int>(p.length() + q.length()) > opt.maxlen) continue;
        if (path_range(*g, p) != path_range(*g, q)) continue;
        Mono m{p, q};
        if (is_redex(*g, m)) continue;
        images.push_back(wreath_coords(
            phi(LeavittElement(CohnElement::monomial(g, f, m, f.one())))));
      }
    std::size_t rk = coord_rank(images, f.zero());
    if (rk != images.size())
      rep.fail("phi not injective: rank " + std::to_string(rk) + " of " +
               std::to_string(images.size()) + " basis images");
    else
      rep.note("injectivity: rank " + std::to_string(rk) + " on " +
               std::to_string(images.size()) + " monomials");
  }

  // (iv) surjectivity onto the bounded wreath basis via explicit preimages
  {
    int bad = 0, hit = 0;
    const Graph& q_graph = *ctx.eg->base();
    auto qpaths = enumerate_paths(q_graph, opt.maxlen);
    for (const auto& p : qpaths)
      for (const auto& q : qpaths) {
        if (static_cast<int>(p.length() + q.length()) > opt.maxlen) continue;
        if (path_range(q_graph, p) != path_range(q_graph, q)) continue;
        Mono m{p, q};
        if (is_redex(q_graph, m)) continue;
        WreathElement target = WreathElement::from_cohn(
            ctx.eg, CohnElement::monomial(ctx.eg->base(), f, m, f.one()));
        Mono lift{convert_path(q_graph, *g, p), convert_path(q_graph, *g, q)};
        LeavittElement pre(CohnElement::monomial(g, f, lift, f.one()));
        if (!(phi(pre) == target)) ++bad;
        else ++hit;
      }
    // matrix-unit targets (b)_{p,q} with b a normal-form monomial of L(Gamma(W))
    auto bps = enumerate_bridge_paths(*ctx.eg, std::min(opt.maxlen, 3));
    auto wpaths = enumerate_paths(*ctx.inside, 2);
    for (const auto& bp : bps)
      for (const auto& bq : bps) {
        if (bp.is_x0() || bq.is_x0()) continue;
        for (const auto& b1 : wpaths)
          for (const auto& b2 : wpaths) {
            if (path_range(*ctx.inside, b1) != path_range(*ctx.inside, b2)) continue;
            Mono bm{b1, b2};
            if (is_redex(*ctx.inside, bm)) continue;
            // corner: b must start at the bridge idempotents
            if (ctx.inside->vertex_name(b1.src) != ctx.eg->bridge(bp.bridge).idem) continue;
            if (ctx.inside->vertex_name(b2.src) != ctx.eg->bridge(bq.bridge).idem) continue;
            AlgElem entry = LeavittCoeff::wrap(
                LeavittElement(CohnElement::monomial(ctx.inside, f, bm, f.one())));
            WreathElement target = WreathElement::matrix_unit(ctx.eg, entry, bp, bq);
            // preimage: (P b1)(Q b2)* over Gamma
            Path pfull = convert_path(q_graph, *g, bp.prefix);
            pfull.edges.push_back(g->edge_by_name(ctx.eg->bridge(bp.bridge).name));
            pfull = path_concat(*g, pfull, convert_path(*ctx.inside, *g, b1));
            Path qfull = convert_path(q_graph, *g, bq.prefix);
            qfull.edges.push_back(g->edge_by_name(ctx.eg->bridge(bq.bridge).name));
            qfull = path_concat(*g, qfull, convert_path(*ctx.inside, *g, b2));
            LeavittElement pre(
                CohnElement::monomial(g, f, Mono{pfull, qfull}, f.one()));
            if (!(phi(pre) == target)) ++bad;
            else ++hit;
          }
      }
    if (bad)
      rep.fail("surjectivity: " + std::to_string(bad) + " basis targets missed");
    else
      rep.note("surjectivity: " + std::to_string(hit) + " basis targets hit");
  }
  return rep;
}

Report balloon_iso_check(GraphPtr g, Field f, int v, const Prop2Options& opt) {
  Report rep;
  if (v < 0 || v >= g->vertex_count())
    throw std::invalid_argument("balloon: unknown vertex");
  VertexSet w;
  for (int u = 0; u < g->vertex_count(); ++u)
    if (u != v) w.push_back(u);
  if (w.empty()) {
    rep.fail("balloon: W = V \\ {v} is empty");
    return rep;
  }
  if (!is_balloon(*g, v, w)) {
    rep.fail("'" + g->vertex_name(v) + "' is not a balloon over " + g->set_str(w));
    return rep;
  }
  auto hs = hereditary_saturated_check(*g, w);
  if (!hs.hereditary || !hs.saturated) {
    rep.fail("balloon complement is not hereditary saturated"); // cannot happen
    return rep;
  }
  rep.note("balloon conditions hold for '" + g->vertex_name(v) + "'");
  Graph q = quotient_graph(*g, w);
  bool is_loop = q.vertex_count() == 1 && q.edge_count() == 1 &&
                 q.edge(0).src == 0 && q.edge(0).rng == 0;
  if (!is_loop) {
    rep.fail("quotient graph is not a single loop");
    return rep;
  }
  rep.note("quotient graph is the loop at '" + q.vertex_name(0) + "'");
  rep.merge(prop2_verify(g, f, w, opt));
  return rep;
}

} // namespace lpwr
