#include "normcov/constructions.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "normcov/errors.hpp"
#include "normcov/search.hpp"

namespace normcov {

namespace {

struct RBBuilder {
  std::vector<VertexList> blue;
  std::vector<VertexList> red;

  explicit RBBuilder(std::size_t n) : blue(n), red(n) {}

  void add(Color color, Vertex u, Vertex v) {
    auto& adj = color == Color::blue ? blue : red;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  RedBlueGraph finish() { return RedBlueGraph::from_adjacency(std::move(blue), std::move(red)); }
};

VertexList sorted(VertexList set) {
  std::sort(set.begin(), set.end());
  return set;
}

std::unordered_map<std::string, Vertex> label_index(const std::vector<std::string>& labels) {
  std::unordered_map<std::string, Vertex> out;
  out.reserve(labels.size());
  for (Vertex v = 0; v < labels.size(); ++v) out.emplace(labels[v], v);
  return out;
}

bool is_binary(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch == '0' || ch == '1'; });
}

void check_gc_label(std::string_view label, std::size_t c) {
  if (!is_binary(label) || label.size() > c || (label.size() == c && label.back() != '0')) {
    throw InputError("'" + std::string(label) + "' is not a vertex label of G_" + std::to_string(c));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// G_c

std::uint64_t gc_order(std::size_t c) {
  if (c == 0 || c > 62) throw InputError("G_c order defined for 1 <= c <= 62");
  return 3 * (std::uint64_t{1} << (c - 1)) - 2;
}

LabeledRB build_gc(std::size_t c) {
  if (c < 1 || c > kMaxGcLevel) {
    throw InputError("build_gc: c must be in 1.." + std::to_string(kMaxGcLevel) + " (got " + std::to_string(c) + ")");
  }
  const auto n = static_cast<std::size_t>(gc_order(c));
  RBBuilder builder(n);
  std::vector<std::string> labels(n);
  LabeledRB out;
  out.c = c;
  out.s = c;
  out.cover.cliques.reserve(std::size_t{1} << (c - 1));
  out.cover.stables.reserve(std::size_t{1} << (c - 1));

  // One copy of G_level at `offset`. `prefix` is its label prefix; `path`
  // and `flips` hold the vertices labelled by the nonempty prefixes of it
  // and by those prefixes with the last bit flipped. Depth is at most c.
  std::string prefix;
  VertexList path;
  VertexList flips;
  auto place = [&](auto& self, Vertex offset, std::size_t level) -> void {
    if (level == 1) {
      labels[offset] = prefix + "0";
      VertexList clique = path;
      VertexList stable = flips;
      clique.push_back(offset);
      stable.push_back(offset);
      std::sort(clique.begin(), clique.end());
      std::sort(stable.begin(), stable.end());
      out.cover.cliques.push_back(std::move(clique));
      out.cover.stables.push_back(std::move(stable));
      return;
    }
    const Vertex zero = offset;
    const Vertex one = offset + 1;
    const auto inner = static_cast<Vertex>(gc_order(level - 1));
    const Vertex copy0 = offset + 2;
    const Vertex copy1 = copy0 + inner;
    labels[zero] = prefix + "0";
    labels[one] = prefix + "1";
    builder.blue[zero].reserve(builder.blue[zero].size() + inner);
    builder.red[zero].reserve(builder.red[zero].size() + inner);
    builder.blue[one].reserve(builder.blue[one].size() + inner);
    builder.red[one].reserve(builder.red[one].size() + inner);
    for (Vertex i = 0; i < inner; ++i) {
      builder.add(Color::blue, zero, copy0 + i);
      builder.add(Color::red, zero, copy1 + i);
      builder.add(Color::red, one, copy0 + i);
      builder.add(Color::blue, one, copy1 + i);
    }
    for (const char bit : {'0', '1'}) {
      prefix.push_back(bit);
      path.push_back(bit == '0' ? zero : one);
      flips.push_back(bit == '0' ? one : zero);
      self(self, bit == '0' ? copy0 : copy1, level - 1);
      prefix.pop_back();
      path.pop_back();
      flips.pop_back();
    }
  };
  place(place, 0, c);

  out.rb = builder.finish();
  out.labels = std::move(labels);
  return out;
}

Vertex gc_index(std::string_view label, std::size_t c) {
  if (c < 1 || c > kMaxGcLevel) throw InputError("gc_index: c out of range");
  check_gc_label(label, c);
  Vertex index = 0;
  std::size_t level = c;
  for (std::size_t pos = 0;; ++pos) {
    const Vertex bit = label[pos] == '1' ? 1 : 0;
    if (pos + 1 == label.size()) return index + bit;
    index += 2 + bit * static_cast<Vertex>(gc_order(level - 1));
    --level;
  }
}

Color gc_adjacency_oracle(std::string_view a, std::string_view b, std::size_t c) {
  check_gc_label(a, c);
  check_gc_label(b, c);
  if (a.size() == b.size()) return Color::none;
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t k = a.size();
  if (a.substr(0, k - 1) != b.substr(0, k - 1)) return Color::none;
  return a[k - 1] == b[k - 1] ? Color::blue : Color::red;
}

// ---------------------------------------------------------------------------
// F_c

std::uint64_t fc_order(std::size_t c) {
  if (c == 0) throw InputError("F_c order defined for c >= 1");
  if (c == 1) return 1;
  if (c == 2) return 4;
  return 5 * fc_order(c - 2) + 5;
}

LabeledRB build_fc(std::size_t c) {
  if (c < 1 || c > kMaxFcLevel) {
    throw InputError("build_fc: c must be in 1.." + std::to_string(kMaxFcLevel) + " (got " + std::to_string(c) + ")");
  }
  if (c <= 2) return build_gc(c);

  const LabeledRB inner = build_fc(c - 2);
  const auto m = static_cast<Vertex>(inner.rb.order());
  const std::size_t n = 5 + 5 * static_cast<std::size_t>(m);
  RBBuilder builder(n);
  std::vector<std::string> labels(n);
  static constexpr const char* kNames[5] = {"A", "B", "C", "D", "E"};

  for (Vertex x = 0; x < 5; ++x) {
    labels[x] = kNames[x];
    builder.add(Color::blue, x, (x + 1) % 5);
    builder.add(Color::red, x, (x + 2) % 5);
  }

  LabeledRB out;
  for (Vertex x = 0; x < 5; ++x) {
    const Vertex base = 5 + x * m;
    const Vertex blue_a = (x + 2) % 5;
    const Vertex blue_b = (x + 3) % 5;
    const Vertex red_a = (x + 1) % 5;
    const Vertex red_b = (x + 4) % 5;
    for (Vertex v = 0; v < m; ++v) {
      labels[base + v] = std::string(kNames[x]) + ":" + inner.labels[v];
      for (const Vertex w : inner.rb.blue_neighbours(v)) {
        if (v < w) builder.add(Color::blue, base + v, base + w);
      }
      for (const Vertex w : inner.rb.red_neighbours(v)) {
        if (v < w) builder.add(Color::red, base + v, base + w);
      }
      builder.add(Color::blue, base + v, blue_a);
      builder.add(Color::blue, base + v, blue_b);
      builder.add(Color::red, base + v, red_a);
      builder.add(Color::red, base + v, red_b);
    }
    auto shifted = [&](const VertexList& set, Vertex p, Vertex q) {
      VertexList out_set{std::min(p, q), std::max(p, q)};
      for (const Vertex v : set) out_set.push_back(base + v);
      return out_set;
    };
    for (const auto& k : inner.cover.cliques) out.cover.cliques.push_back(shifted(k, blue_a, blue_b));
    for (const auto& s : inner.cover.stables) out.cover.stables.push_back(shifted(s, red_a, red_b));
  }
  out.rb = builder.finish();
  out.labels = std::move(labels);
  out.c = c;
  out.s = c;
  return out;
}

// ---------------------------------------------------------------------------
// G_{r,k}

LabeledRB build_grk(std::size_t r, std::size_t k) {
  if (r < 2 || k < 1) throw InputError("build_grk requires r >= 2 and k >= 1");
  const std::size_t n = r * (k + 1);
  RBBuilder builder(n);
  std::vector<std::string> labels(n);
  auto root = [&](std::size_t i) { return static_cast<Vertex>(i * (k + 1)); };
  auto leaf = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * (k + 1) + 1 + j); };

  LabeledRB out;
  for (std::size_t i = 0; i < r; ++i) {
    labels[root(i)] = "R" + std::to_string(i);
    for (std::size_t j = 0; j < k; ++j) {
      labels[leaf(i, j)] = "L" + std::to_string(i) + "." + std::to_string(j);
      builder.add(Color::blue, root(i), leaf(i, j));
      out.cover.cliques.push_back({root(i), leaf(i, j)});
      for (std::size_t j2 = j + 1; j2 < k; ++j2) builder.add(Color::red, leaf(i, j), leaf(i, j2));
    }
    for (std::size_t other = 0; other < r; ++other) {
      if (other == i) continue;
      for (std::size_t j = 0; j < k; ++j) builder.add(Color::red, root(i), leaf(other, j));
      if (r >= 3 && other > i) builder.add(Color::red, root(i), root(other));
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    VertexList stable;
    for (std::size_t j = 0; j < k; ++j) stable.push_back(leaf(i, j));
    for (std::size_t other = 0; other < r; ++other) {
      if (other != i) stable.push_back(root(other));
    }
    out.cover.stables.push_back(sorted(std::move(stable)));
  }
  out.rb = builder.finish();
  out.labels = std::move(labels);
  out.c = 2;
  out.s = k + r - 1;
  return out;
}

// ---------------------------------------------------------------------------
// Multigraph expansion

void MultiH::validate() const {
  const auto edges = h.edges();
  if (edges.size() != multiplicity.size()) throw InputError("multiplicities must be given for exactly the edges of H");
  for (const auto& e : edges) {
    const auto it = multiplicity.find(e);
    if (it == multiplicity.end()) {
      throw InputError("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} has no multiplicity");
    }
    if (it->second == 0) throw InputError("edge multiplicities must be positive");
  }
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == 0) throw InputError("H has isolated vertex " + std::to_string(v));
  }
}

std::uint32_t MultiH::lambda(Vertex v) const {
  std::uint32_t best = 0;
  h.neighbours(v).for_each([&](std::size_t w) {
    best = std::max(best, multiplicity.at(make_edge(v, static_cast<Vertex>(w))));
  });
  return best;
}

Expansion expand_structure(const MultiH& mh) {
  mh.validate();
  Expansion out;
  out.edges = mh.h.edges();
  std::size_t n = mh.h.order();
  for (const auto& e : out.edges) n += mh.multiplicity.at(e);

  Graph g(n);
  for (const auto& [u, v] : out.edges) g.add_edge(u, v);
  auto next = static_cast<Vertex>(mh.h.order());
  for (const auto& [u, v] : out.edges) {
    VertexList privates;
    for (std::uint32_t t = 0; t < mh.multiplicity.at({u, v}); ++t) {
      const Vertex p = next++;
      g.add_edge(u, p);
      g.add_edge(v, p);
      privates.push_back(p);
      out.instance.cover.cliques.push_back({u, v, p});
    }
    out.privates.push_back(std::move(privates));
  }
  out.instance.graph = std::move(g);
  return out;
}

namespace {

// Disjoint stars K_{1,d} with every edge of multiplicity d, listed root
// first then its leaves. Returns the number of stars, or 0 if `mh` is not
// of that shape.
std::size_t uniform_star_count(const MultiH& mh, std::size_t& d) {
  const std::size_t n = mh.h.order();
  if (n == 0) return 0;
  d = mh.h.degree(0);
  if (d < 2 || n % (d + 1) != 0) return 0;
  const std::size_t q = n / (d + 1);
  for (std::size_t i = 0; i < q; ++i) {
    const auto root = static_cast<Vertex>(i * (d + 1));
    if (mh.h.degree(root) != d) return 0;
    for (std::size_t j = 1; j <= d; ++j) {
      const auto leaf = static_cast<Vertex>(root + j);
      if (mh.h.degree(leaf) != 1 || !mh.h.adjacent(root, leaf)) return 0;
      if (mh.multiplicity.at(make_edge(root, leaf)) != d) return 0;
    }
  }
  return q;
}

std::vector<VertexList> star_stables(const Expansion& ex, std::size_t q, std::size_t d) {
  std::vector<VertexList> stables;
  auto root = [&](std::size_t i) { return static_cast<Vertex>(i * (d + 1)); };
  VertexList roots;
  for (std::size_t i = 0; i < q; ++i) roots.push_back(root(i));
  stables.push_back(roots);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 1; j <= d; ++j) {
      const Edge e{root(i), static_cast<Vertex>(root(i) + j)};
      const auto pos = std::lower_bound(ex.edges.begin(), ex.edges.end(), e) - ex.edges.begin();
      VertexList stable = ex.privates[static_cast<std::size_t>(pos)];
      for (std::size_t j2 = 1; j2 <= d; ++j2) {
        if (j2 != j) stable.push_back(static_cast<Vertex>(root(i) + j2));
      }
      for (std::size_t other = 0; other < q; ++other) {
        if (other != i) stable.push_back(root(other));
      }
      stables.push_back(sorted(std::move(stable)));
    }
  }
  return stables;
}

}  // namespace

NormalInstance expand_multih(const MultiH& mh, std::size_t s) {
  mh.validate();
  for (Vertex v = 0; v < mh.h.order(); ++v) {
    const std::size_t need = mh.h.degree(v) + mh.lambda(v) - 1;
    if (need > s) {
      throw InfeasibleError("vertex " + std::to_string(v) + " needs deg + lambda - 1 = " + std::to_string(need) +
                            " > s = " + std::to_string(s));
    }
  }
  Expansion ex = expand_structure(mh);

  std::size_t d = 0;
  if (const std::size_t q = uniform_star_count(mh, d); q > 0 && q <= s && 2 * d - 1 + q - 1 <= s) {
    ex.instance.cover.stables = star_stables(ex, q, d);
    return std::move(ex.instance);
  }

  const auto side = complete_stable_side(ex.instance.graph, ex.instance.cover.cliques, s, SearchBudget::unlimited());
  if (side.status != SearchStatus::found) {
    throw InfeasibleError("no stable side with sets of size <= " + std::to_string(s) + " exists");
  }
  ex.instance.cover.stables = side.stables;
  return std::move(ex.instance);
}

MultiH multih_from_cover(const Graph& g, const Cover& cover) {
  validate_cover(cover, g.order());
  std::vector<std::size_t> clique_count(g.order(), 0);
  for (const auto& k : cover.cliques) {
    if (k.size() != 3 || !is_clique(g, k)) throw InputError("every clique of an expansion cover must be a triangle");
    for (const Vertex v : k) ++clique_count[v];
  }
  std::vector<bool> removed(g.order(), false);
  std::vector<Edge> pairs;
  for (const auto& k : cover.cliques) {
    Vertex drop = 0;
    bool found = false;
    for (const Vertex v : k) {
      if (clique_count[v] == 1) {
        drop = v;  // sets are sorted, so the last private wins
        found = true;
      }
    }
    if (!found) throw InputError("a triangle of the cover has no private vertex");
    removed[drop] = true;
    VertexList rest;
    for (const Vertex v : k) {
      if (v != drop) rest.push_back(v);
    }
    pairs.push_back(make_edge(rest[0], rest[1]));
  }
  VertexList keep;
  std::vector<Vertex> position(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[v]) {
      position[v] = static_cast<Vertex>(keep.size());
      keep.push_back(v);
    }
  }
  MultiH mh;
  mh.h = Graph(keep.size());
  for (const auto& [u, v] : pairs) {
    if (removed[u] || removed[v]) throw InputError("private vertices of distinct triangles overlap");
    const Edge e = make_edge(position[u], position[v]);
    if (!mh.h.adjacent(e.first, e.second)) mh.h.add_edge(e.first, e.second);
    ++mh.multiplicity[e];
  }
  return mh;
}

MultiH star_multih(std::size_t s) {
  if (s < 4) throw InputError("star expansion requires s >= 4");
  const std::size_t d = (s + 2) / 3;
  const std::size_t q = s - 2 * d + 2;
  MultiH mh;
  mh.h = Graph(q * (d + 1));
  for (std::size_t i = 0; i < q; ++i) {
    const auto root = static_cast<Vertex>(i * (d + 1));
    for (std::size_t j = 1; j <= d; ++j) {
      const auto leaf = static_cast<Vertex>(root + j);
      mh.h.add_edge(root, leaf);
      mh.multiplicity[{root, leaf}] = static_cast<std::uint32_t>(d);
    }
  }
  return mh;
}

std::uint64_t star_expansion_order(std::size_t s) {
  if (s < 4) throw InputError("star expansion requires s >= 4");
  const std::uint64_t d = (s + 2) / 3;
  return (s - 2 * d + 2) * (d * d + d + 1);
}

NormalInstance build_star_expansion(std::size_t s) { return expand_multih(star_multih(s), s); }

// ---------------------------------------------------------------------------
// Vertex removal and augmentation

namespace {

/// Prefixes x (length c - 2) whose leaf x00 is still present, in increasing order.
std::vector<std::string> removable_prefixes(const LabeledRB& gc) {
  std::vector<std::string> out;
  if (gc.c < 2) return out;
  for (const auto& label : gc.labels) {
    if (label.size() == gc.c && label.ends_with("00")) out.push_back(label.substr(0, gc.c - 2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t remaining_triples(const LabeledRB& gc) { return removable_prefixes(gc).size(); }

LabeledRB remove_triples(const LabeledRB& gc, std::size_t t) {
  const auto prefixes = removable_prefixes(gc);
  if (t > prefixes.size()) {
    throw InputError("cannot remove " + std::to_string(t) + " triples; only " + std::to_string(prefixes.size()) +
                     " remain");
  }
  if (t == 0) return gc;

  auto index = label_index(gc.labels);
  std::vector<bool> drop(gc.labels.size(), false);
  // Cover elements are addressed by label sets until the final re-index.
  std::vector<std::vector<std::string>> cliques;
  std::vector<std::vector<std::string>> stables;
  auto to_labels = [&](const VertexList& set) {
    std::vector<std::string> out;
    for (const Vertex v : set) out.push_back(gc.labels[v]);
    return out;
  };
  for (const auto& k : gc.cover.cliques) cliques.push_back(to_labels(k));
  for (const auto& s : gc.cover.stables) stables.push_back(to_labels(s));

  for (std::size_t i = 0; i < t; ++i) {
    const std::string& x = prefixes[i];
    const std::string leaf0 = x + "00";
    const std::string leaf1 = x + "10";
    const std::string parent = x + "1";
    const std::string survivor = x + "0";
    for (const auto* label : {&leaf0, &leaf1, &parent}) {
      const auto it = index.find(*label);
      if (it == index.end()) throw InputError("label " + *label + " missing from G_c state");
      drop[it->second] = true;
    }
    auto contains = [](const std::vector<std::string>& set, const std::string& label) {
      return std::find(set.begin(), set.end(), label) != set.end();
    };
    // The two leaves are private to their own clique and stable set.
    auto replace = [&](std::vector<std::vector<std::string>>& family, std::vector<std::string> fresh) {
      std::size_t slot = family.size();
      std::vector<std::vector<std::string>> kept;
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (contains(family[j], leaf0) || contains(family[j], leaf1)) {
          slot = std::min(slot, kept.size());
        } else {
          kept.push_back(std::move(family[j]));
        }
      }
      kept.insert(kept.begin() + static_cast<std::ptrdiff_t>(slot), std::move(fresh));
      family = std::move(kept);
    };
    std::vector<std::string> clique;
    std::vector<std::string> stable;
    for (std::size_t k = 1; k <= survivor.size(); ++k) {
      std::string prefix = survivor.substr(0, k);
      clique.push_back(prefix);
      if (k < survivor.size()) {
        prefix.back() = prefix.back() == '0' ? '1' : '0';
        stable.push_back(prefix);
      }
    }
    stable.push_back(survivor);
    replace(cliques, std::move(clique));
    replace(stables, std::move(stable));
  }

  VertexList keep;
  for (Vertex v = 0; v < gc.labels.size(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  LabeledRB out;
  out.rb = gc.rb.induced(keep);
  for (const Vertex v : keep) out.labels.push_back(gc.labels[v]);
  index = label_index(out.labels);
  auto to_set = [&](const std::vector<std::string>& names) {
    VertexList set;
    for (const auto& name : names) set.push_back(index.at(name));
    return sorted(std::move(set));
  };
  for (const auto& k : cliques) out.cover.cliques.push_back(to_set(k));
  for (const auto& s : stables) out.cover.stables.push_back(to_set(s));

  const bool leaves_left = std::any_of(out.labels.begin(), out.labels.end(),
                                       [&](const std::string& label) { return label.size() == gc.c; });
  out.c = leaves_left ? gc.c : gc.c - 1;
  out.s = out.c;
  return out;
}

NormalInstance add_universal_pair(const Graph& g, const Cover& cover) {
  try {
    if (!verify_normal_cover(g, cover).is_normal()) throw PreconditionError("add_universal_pair: cover is not normal");
  } catch (const InputError& e) {
    throw PreconditionError(std::string("add_universal_pair: ") + e.what());
  }
  const auto n = static_cast<Vertex>(g.order());
  const Vertex cv = n;
  const Vertex dv = n + 1;
  NormalInstance out{g.with_extra_vertices(2), {}};
  for (Vertex v = 0; v < n; ++v) {
    out.graph.add_edge(v, cv);
    out.graph.add_edge(v, dv);
  }
  for (const auto& k : cover.cliques) {
    VertexList grown = k;
    grown.push_back(cv);
    out.cover.cliques.push_back(std::move(grown));
  }
  if (cover.cliques.empty()) {
    out.cover.cliques.push_back({cv});
    out.cover.cliques.push_back({dv});
  } else {
    VertexList extra = cover.cliques.front();
    extra.push_back(dv);
    out.cover.cliques.push_back(std::move(extra));
  }
  out.cover.stables = cover.stables;
  out.cover.stables.push_back({cv, dv});
  return out;
}

}  // namespace normcov
