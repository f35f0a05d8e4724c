#include "nilsys/frame.hpp"
#include "nilsys/error.hpp"

#include <algorithm>

namespace nilsys {

Vector CompatibleFrame::to_frame(const Vector &input) const { return input * inverse; }
Vector CompatibleFrame::to_input(const Vector &frame) const { return frame * change_of_basis; }

std::vector<std::size_t> CompatibleFrame::block_starts() const {
  std::vector<std::size_t> starts;
  std::size_t p = 0;
  for (auto b : blocks) {
    starts.push_back(p);
    p += b;
  }
  return starts;
}

CompatibleFrame compatible_frame(const LieAlgebra &a,
                                 const std::optional<std::vector<Subspace>> &flag) {
  const std::size_t d = a.dim();
  auto lcs = lower_central_series(a);
  std::vector<Subspace> chain = flag ? *flag : lcs;
  if (chain.empty() || !chain.front().is_full() || !chain.back().is_zero())
    throw FlagNotRefining("flag must run from the whole algebra down to zero");
  for (std::size_t j = 0; j + 1 < chain.size(); ++j)
    if (!chain[j].contains(chain[j + 1]) || chain[j] == chain[j + 1])
      throw FlagNotRefining("flag terms must strictly decrease");
  for (std::size_t i = 0; i < lcs.size(); ++i)
    if (std::find(chain.begin(), chain.end(), lcs[i]) == chain.end())
      throw FlagNotRefining("flag misses lower central term g^" + std::to_string(i + 1));

  auto weight_of = [&](const Subspace &w) {
    int weight = 0;
    while (static_cast<std::size_t>(weight) < lcs.size() && lcs[weight].contains(w))
      ++weight;
    return weight;
  };

  // Complete bottom-up: prefer input basis vectors, fall back to echelon rows.
  std::vector<std::vector<Vector>> block_vectors(chain.size() - 1);
  Subspace below = chain.back();
  for (std::size_t j = chain.size() - 1; j-- > 0;) {
    const Subspace &term = chain[j];
    Subspace reached = below;
    std::vector<Vector> chosen;
    for (std::size_t e = 0; e < d && reached.dim() < term.dim(); ++e) {
      Vector v = unit_vector(d, e);
      if (term.contains(v) && !reached.contains(v)) {
        chosen.push_back(v);
        reached = reached + Subspace::span(d, {v});
      }
    }
    for (const auto &v : term.vectors()) {
      if (reached.dim() == term.dim())
        break;
      if (!reached.contains(v)) {
        chosen.push_back(v);
        reached = reached + Subspace::span(d, {v});
      }
    }
    block_vectors[j] = std::move(chosen);
    below = term;
  }

  CompatibleFrame f;
  std::vector<Vector> rows;
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    int w = weight_of(chain[j]);
    f.blocks.push_back(block_vectors[j].size());
    for (auto &v : block_vectors[j]) {
      rows.push_back(v);
      f.weights.push_back(w);
    }
  }
  f.change_of_basis = Matrix::from_rows(rows, d);
  f.inverse = *inverse(f.change_of_basis);
  f.is_identity = f.change_of_basis.is_identity();

  // Pivot each frame vector on the first input coordinate it still carries
  // after clearing the pivots of earlier vectors.
  std::vector<Vector> reduced;
  std::vector<std::size_t> pivots;
  for (const auto &row : rows) {
    Vector v = row;
    for (std::size_t t = 0; t < reduced.size(); ++t)
      if (sgn(v[pivots[t]]) != 0)
        v = v - (v[pivots[t]] / reduced[t][pivots[t]]) * reduced[t];
    std::size_t p = 0;
    while (sgn(v[p]) == 0)
      ++p;
    pivots.push_back(p);
    reduced.push_back(v);
  }
  f.order = pivots;
  return f;
}

LieAlgebra frame_algebra(const LieAlgebra &a, const CompatibleFrame &frame) {
  if (frame.is_identity)
    return a;
  const std::size_t d = a.dim();
  StructureConstants c;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector v = frame.to_frame(
          a.bracket(frame.change_of_basis.row(i), frame.change_of_basis.row(j)));
      if (!is_zero(v))
        c[{i, j}] = v;
    }
  return LieAlgebra::validate(d, c, a.name());
}

bool GradedBracket::has_positive_exponent() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto &e) { return e.m > 0; });
}

GradedBracket dilated_bracket(const LieAlgebra &a, const CompatibleFrame &frame) {
  LieAlgebra fa = frame_algebra(a, frame);
  GradedBracket g;
  g.dim = a.dim();
  g.weights = frame.weights;
  for (const auto &[ij, v] : fa.constants()) {
    auto [i, j] = ij;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k]) == 0)
        continue;
      int m = frame.weights[k] - frame.weights[i] - frame.weights[j];
      if (m < 0)
        throw FlagNotRefining("frame is not compatible: negative exponent at (" +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      g.entries.push_back({i, j, k, v[k], m});
    }
  }
  return g;
}

LieAlgebra carnot_graded(const LieAlgebra &a, const CompatibleFrame &frame) {
  GradedBracket g = dilated_bracket(a, frame);
  StructureConstants c;
  for (const auto &e : g.entries) {
    if (e.m != 0)
      continue;
    auto &v = c[{e.i, e.j}];
    if (v.empty())
      v = zero_vector(g.dim);
    v[e.k] = e.coef;
  }
  return LieAlgebra::validate(g.dim, c, a.name().empty() ? "" : a.name() + "_carnot");
}

LieAlgebra algebra_at_scale(const GradedBracket &b, const Rational &r) {
  StructureConstants c;
  for (const auto &e : b.entries) {
    auto &v = c[{e.i, e.j}];
    if (v.empty())
      v = zero_vector(b.dim);
    v[e.k] = e.coef * pow(r, -e.m);
  }
  return LieAlgebra::validate(b.dim, c);
}

} // namespace nilsys
