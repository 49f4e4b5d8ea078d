#include "normcov/reduction.hpp"

#include <algorithm>
#include <functional>

#include "normcov/errors.hpp"

namespace normcov {

namespace {

void require_normal(const Graph& g, const Cover& cover, const char* what) {
  if (!verify_normal_cover(g, cover).is_normal()) {
    throw PreconditionError(std::string(what) + ": cover is not a normal cover of the graph");
  }
}

const std::vector<VertexList>& side_of(const Cover& cover, ElementKind kind) {
  return kind == ElementKind::clique ? cover.cliques : cover.stables;
}

// How many elements of one side contain each vertex.
std::vector<std::size_t> multiplicities(const std::vector<VertexList>& family, std::size_t n) {
  std::vector<std::size_t> count(n, 0);
  for (const auto& set : family) {
    for (const Vertex v : set) ++count[v];
  }
  return count;
}

bool every_element_has_private(const std::vector<VertexList>& family, std::size_t n) {
  const auto count = multiplicities(family, n);
  return std::all_of(family.begin(), family.end(), [&](const VertexList& set) {
    return std::any_of(set.begin(), set.end(), [&](Vertex v) { return count[v] == 1; });
  });
}

// Drops elements in listed order while the rest still covers every vertex.
std::vector<VertexList> prune(const std::vector<VertexList>& family, std::size_t n) {
  auto count = multiplicities(family, n);
  std::vector<bool> keep(family.size(), true);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& set = family[i];
    if (std::all_of(set.begin(), set.end(), [&](Vertex v) { return count[v] > 1; })) {
      keep[i] = false;
      for (const Vertex v : set) --count[v];
    }
  }
  std::vector<VertexList> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (keep[i]) out.push_back(family[i]);
  }
  return out;
}

Vertex shift_down(Vertex x, Vertex removed) { return x > removed ? x - 1 : x; }

}  // namespace

std::string to_string(ElementKind kind) { return kind == ElementKind::clique ? "clique" : "stable"; }

PrivacyIndex privacy(const Graph& g, const Cover& cover) {
  validate_cover(cover, g.order());
  PrivacyIndex index;
  index.cliques_of.resize(g.order());
  index.stables_of.resize(g.order());
  for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
    for (const Vertex v : cover.cliques[i]) index.cliques_of[v].push_back(i);
  }
  for (std::size_t j = 0; j < cover.stables.size(); ++j) {
    for (const Vertex v : cover.stables[j]) index.stables_of[v].push_back(j);
  }
  return index;
}

VertexList private_vertices(const PrivacyIndex& index, const Cover& cover, ElementKind kind, std::size_t element) {
  const auto& family = side_of(cover, kind);
  const auto& owners = kind == ElementKind::clique ? index.cliques_of : index.stables_of;
  VertexList out;
  for (const Vertex v : family.at(element)) {
    if (owners[v].size() == 1) out.push_back(v);
  }
  return out;
}

bool is_minimal(const Graph& g, const Cover& cover) {
  require_normal(g, cover, "is_minimal");
  return every_element_has_private(cover.cliques, g.order()) && every_element_has_private(cover.stables, g.order());
}

Cover minimalize(const Graph& g, const Cover& cover) {
  require_normal(g, cover, "minimalize");
  Cover out;
  out.stables = prune(cover.stables, g.order());
  out.cliques = prune(cover.cliques, g.order());
  return out;
}

ReduceResult c_reduce(const Graph& g, const Cover& cover, std::size_t clique_index, Vertex v) {
  const PrivacyIndex index = privacy(g, cover);
  if (clique_index >= cover.cliques.size()) throw PreconditionError("c_reduce: clique index out of range");
  const VertexList& clique = cover.cliques[clique_index];
  const VertexList privates = private_vertices(index, cover, ElementKind::clique, clique_index);
  if (!std::binary_search(privates.begin(), privates.end(), v)) {
    throw PreconditionError("c_reduce: vertex " + std::to_string(v) + " is not private to clique " +
                            std::to_string(clique_index));
  }

  ReduceResult out;
  out.step.side = ElementKind::clique;
  out.step.element = clique_index;
  out.step.vertex = v;

  if (privates.size() == 1) {
    out.graph = g.without_vertex(v);
    for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
      if (i == clique_index) continue;
      VertexList set;
      for (const Vertex x : cover.cliques[i]) set.push_back(shift_down(x, v));
      out.cover.cliques.push_back(std::move(set));
    }
    for (const auto& stable : cover.stables) {
      VertexList set;
      for (const Vertex x : stable) {
        if (x != v) set.push_back(shift_down(x, v));
      }
      if (!set.empty()) out.cover.stables.push_back(std::move(set));
    }
  } else {
    const Vertex partner = privates.front() == v ? privates[1] : privates.front();
    out.step.partner = partner;
    Graph work = g;
    for (const Vertex end : {v, partner}) {
      g.neighbours(end).for_each([&](std::size_t w) {
        if (!std::binary_search(clique.begin(), clique.end(), static_cast<Vertex>(w))) {
          work.remove_edge(end, static_cast<Vertex>(w));
        }
      });
    }
    // After the cut both ends see exactly the rest of the clique, so the
    // contraction is the deletion of the higher end.
    const Vertex lo = std::min(v, partner);
    const Vertex hi = std::max(v, partner);
    out.graph = work.without_vertex(hi);
    for (const auto& k : cover.cliques) {
      VertexList set;
      for (const Vertex x : k) {
        if (x != hi) set.push_back(shift_down(x, hi));
      }
      out.cover.cliques.push_back(std::move(set));
    }
    for (const auto& stable : cover.stables) {
      VertexList set;
      for (const Vertex x : stable) set.push_back(x == hi ? lo : shift_down(x, hi));
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      out.cover.stables.push_back(std::move(set));
    }
  }
  out.step.n_after = out.graph.order();
  out.step.cliques_after = out.cover.cliques.size();
  out.step.stables_after = out.cover.stables.size();
  return out;
}

ReduceResult s_reduce(const Graph& g, const Cover& cover, std::size_t stable_index, Vertex v) {
  ReduceResult dual = c_reduce(complement(g), cover.swapped(), stable_index, v);
  ReduceResult out{complement(dual.graph), dual.cover.swapped(), dual.step};
  out.step.side = ElementKind::stable;
  out.step.cliques_after = out.cover.cliques.size();
  out.step.stables_after = out.cover.stables.size();
  return out;
}

GeneratorSet find_generators(const Graph& g, const Cover& cover, ElementKind kind) {
  const PrivacyIndex index = privacy(g, cover);
  GeneratorSet out;
  out.kind = kind;
  const auto& family = side_of(cover, kind);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const VertexList privates = private_vertices(index, cover, kind, i);
    if (privates.empty()) {
      throw PreconditionError("find_generators: " + to_string(kind) + " " + std::to_string(i) +
                              " has no private vertex (cover is not minimal)");
    }
    out.vertices.push_back(privates.back());
  }
  return out;
}

std::optional<DoubleGenerators> find_double_generators(const Graph& g, const Cover& cover) {
  const PrivacyIndex index = privacy(g, cover);
  const std::size_t t = cover.cliques.size();
  if (t != cover.stables.size()) return std::nullopt;

  // options[i]: (stable, vertex) pairs reachable from clique i through a
  // vertex private to both, highest vertex first.
  std::vector<std::vector<std::pair<std::size_t, Vertex>>> options(t);
  for (std::size_t i = 0; i < t; ++i) {
    const auto& clique = cover.cliques[i];
    for (auto it = clique.rbegin(); it != clique.rend(); ++it) {
      const Vertex v = *it;
      if (index.cliques_of[v].size() == 1 && index.stables_of[v].size() == 1) {
        options[i].emplace_back(index.stables_of[v].front(), v);
      }
    }
  }

  constexpr auto kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(t, kFree);  // stable -> clique
  std::vector<Vertex> via(t, 0);             // stable -> vertex
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (const auto& [j, v] : options[i]) {
      if (seen[j]) continue;
      seen[j] = true;
      if (owner[j] == kFree || augment(owner[j])) {
        owner[j] = i;
        via[j] = v;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < t; ++i) {
    seen.assign(t, false);
    if (!augment(i)) return std::nullopt;
  }

  DoubleGenerators out;
  out.vertices.resize(t);
  out.clique_of.resize(t);
  out.stable_of.resize(t);
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t i = owner[j];
    out.vertices[i] = via[j];
    out.clique_of[i] = i;
    out.stable_of[i] = j;
  }
  return out;
}

MattReport matt_report(const Graph& g, const Cover& cover, const DoubleGenerators& u) {
  const std::size_t n = g.order();
  if (n <= 1) throw PreconditionError("matt_check requires n > 1");
  if (!is_minimal(g, cover)) throw PreconditionError("matt_check requires a minimal cover");
  const std::size_t t = u.vertices.size();
  if (t != cover.cliques.size() || t != cover.stables.size() || u.clique_of.size() != t || u.stable_of.size() != t) {
    throw PreconditionError("matt_check: generator set size must equal both cover sides");
  }
  const PrivacyIndex index = privacy(g, cover);
  // Position of each cover element in generator order.
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> clique_row(t, kUnset);
  std::vector<std::size_t> stable_col(t, kUnset);
  std::vector<bool> is_generator(n, false);
  for (std::size_t i = 0; i < t; ++i) {
    const Vertex v = u.vertices[i];
    if (v >= n || is_generator[v]) throw PreconditionError("matt_check: generators must be distinct vertices");
    is_generator[v] = true;
    const std::size_t ci = u.clique_of[i];
    const std::size_t sj = u.stable_of[i];
    if (ci >= t || sj >= t || clique_row[ci] != kUnset || stable_col[sj] != kUnset) {
      throw PreconditionError("matt_check: generator correspondence is not a bijection");
    }
    if (index.cliques_of[v] != std::vector<std::size_t>{ci} || index.stables_of[v] != std::vector<std::size_t>{sj}) {
      throw PreconditionError("matt_check: generator " + std::to_string(v) + " is not private to its elements");
    }
    clique_row[ci] = i;
    stable_col[sj] = i;
  }

  // all[j][k] = sum over every vertex of c_v(j) s_v(k); gen likewise over U.
  std::vector<std::uint32_t> all(t * t, 0);
  std::vector<std::uint32_t> gen(t * t, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (const std::size_t ci : index.cliques_of[v]) {
      for (const std::size_t sj : index.stables_of[v]) {
        const std::size_t cell = clique_row[ci] * t + stable_col[sj];
        ++all[cell];
        if (is_generator[v]) ++gen[cell];
      }
    }
  }
  MattReport report;
  report.t = t;
  report.n = n;
  report.sum_all_is_J = std::all_of(all.begin(), all.end(), [](std::uint32_t x) { return x == 1; });
  report.sum_generators_is_I = true;
  report.sum_rest_is_J_minus_I = true;
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = 0; k < t; ++k) {
      const std::size_t cell = j * t + k;
      const std::uint32_t identity = j == k ? 1 : 0;
      if (gen[cell] != identity) report.sum_generators_is_I = false;
      if (all[cell] - gen[cell] != 1 - identity) report.sum_rest_is_J_minus_I = false;
    }
  }
  report.n_at_least_2t = n >= 2 * t;
  return report;
}

bool matt_check(const Graph& g, const Cover& cover, const DoubleGenerators& u) {
  return matt_report(g, cover, u).ok();
}

bool central_check(const Graph& g, const Cover& cover) {
  if (!is_minimal(g, cover)) throw PreconditionError("central_check requires a minimal cover");
  return cover.cliques.size() + cover.stables.size() <= g.order() + 1;
}

PipelineResult reduction_pipeline(const Graph& g, const Cover& cover, std::size_t c, std::size_t s) {
  if (c == 0 || s == 0) throw PreconditionError("reduction_pipeline requires c, s >= 1");
  if (c + s > 62) throw PreconditionError("reduction_pipeline requires c + s <= 62");
  if (!verify_cs(verify_normal_cover(g, cover), c, s)) {
    throw PreconditionError("reduction_pipeline: cover is not (" + std::to_string(c) + "," + std::to_string(s) +
                            ")-normal");
  }
  PipelineResult state{{}, g, cover, c, s};
  auto& trace = state.trace;
  auto violation = [&](std::size_t level, const std::string& what) {
    trace.violations.push_back("level " + std::to_string(level) + ": " + what);
  };

  for (std::size_t level = 0;; ++level) {
    LevelRecord rec;
    rec.level = level;
    rec.c = state.c;
    rec.s = state.s;
    rec.n = state.graph.order();

    if (state.c == 1 || state.s == 1 || rec.n == 0) {
      rec.terminal = true;
      rec.cliques = state.cover.cliques.size();
      rec.stables = state.cover.stables.size();
      rec.cover_ok = verify_cs(verify_normal_cover(state.graph, state.cover), state.c, state.s);
      rec.central_ok = true;
      rec.bound_ok = rec.n + 1 <= state.c + state.s;
      if (!rec.cover_ok) violation(level, "terminal cover is not normal");
      if (!rec.bound_ok) violation(level, "terminal graph has n > c + s - 1");
      trace.levels.push_back(rec);
      break;
    }

    state.cover = minimalize(state.graph, state.cover);
    rec.cliques = state.cover.cliques.size();
    rec.stables = state.cover.stables.size();
    rec.cover_ok = verify_cs(verify_normal_cover(state.graph, state.cover), state.c, state.s);
    rec.central_ok = rec.cliques + rec.stables <= rec.n + 1;
    rec.bound_ok = rec.n <= (std::size_t{1} << (state.c + state.s)) - 1;
    if (!rec.cover_ok) violation(level, "minimal cover fails verification");
    if (!rec.central_ok) violation(level, "|C| + |S| > n + 1");
    if (!rec.bound_ok) violation(level, "n > 2^(c+s) - 1");

    const ElementKind side = rec.cliques <= rec.stables ? ElementKind::clique : ElementKind::stable;
    rec.reduced = side;
    const std::size_t count = side == ElementKind::clique ? rec.cliques : rec.stables;
    std::size_t removed = 0;
    for (std::size_t original = 0; original < count; ++original) {
      const std::size_t element = original - removed;
      const PrivacyIndex index = privacy(state.graph, state.cover);
      const VertexList privates = private_vertices(index, state.cover, side, element);
      if (privates.empty()) {
        violation(level, to_string(side) + " " + std::to_string(original) + " lost its private vertices");
        break;
      }
      ReduceResult r = side == ElementKind::clique ? c_reduce(state.graph, state.cover, element, privates.front())
                                                   : s_reduce(state.graph, state.cover, element, privates.front());
      if (r.graph.order() + 1 != state.graph.order()) violation(level, "reduction step did not remove one vertex");
      if (!r.step.contracted()) ++removed;
      r.step.level = level;
      trace.steps.push_back(r.step);
      state.graph = std::move(r.graph);
      state.cover = std::move(r.cover);
    }

    rec.halving_ok = 2 * state.graph.order() + 1 >= rec.n;
    if (!rec.halving_ok) violation(level, "reduction kept fewer than (n - 1) / 2 vertices");
    trace.levels.push_back(rec);

    if (side == ElementKind::clique) {
      --state.c;
    } else {
      --state.s;
    }
    if (!verify_cs(verify_normal_cover(state.graph, state.cover), state.c, state.s)) {
      violation(level, "reduced cover is not (" + std::to_string(state.c) + "," + std::to_string(state.s) +
                           ")-normal");
      break;
    }
  }
  return state;
}

}  // namespace normcov
