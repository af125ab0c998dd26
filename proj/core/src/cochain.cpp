#include "qdouble/cochain.hpp"

#include <random>
#include <stdexcept>

namespace qdouble {

namespace {

constexpr int kMaxStoredDegree = 4;

bool contains_identity(const Groupoid& g, std::span<const int> tuple) {
  for (int m : tuple)
    if (g.is_identity(m)) return true;
  return false;
}

}  // namespace

Cochain::Cochain(const Groupoid& base, int degree)
    : base_(&base), degree_(degree), normalized_(true) {
  if (degree < 0 || degree > kMaxStoredDegree)
    throw std::invalid_argument("cochain: degree must be between 0 and 4");
  if (base.num_morphisms() > 65536)
    throw std::invalid_argument("cochain: groupoid too large for packed keys");
}

Cochain::Cochain(const Groupoid& base, int degree,
                 const std::function<Phase(std::span<const int>)>& f)
    : Cochain(base, degree) {
  for_each_composable(base, degree, [&](std::span<const int> tuple) {
    const Phase v = f(tuple);
    values_.emplace(pack(tuple), v);
    if (degree_ >= 1 && !v.is_one() && contains_identity(*base_, tuple))
      normalized_ = false;
  });
}

Cochain Cochain::trivial(const Groupoid& base, int degree) {
  return Cochain(base, degree, [](std::span<const int>) { return Phase(); });
}

std::uint64_t Cochain::pack(std::span<const int> tuple) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    key |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(tuple[i])) << (16 * i);
  return key;
}

Phase Cochain::operator()(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != std::max(degree_, 1))
    throw std::invalid_argument("cochain: tuple length does not match degree");
  const auto it = values_.find(pack(tuple));
  if (it == values_.end())
    throw std::invalid_argument("cochain: tuple is not composable");
  return it->second;
}

Phase Cochain::eval_coboundary(std::span<const int> tuple) const {
  const int n = degree_;
  if (n == 0) {
    const int g = tuple[0];
    const int d = base_->dst(g), s = base_->src(g);
    return (*this)({d}) / (*this)({s});
  }
  // tuple = [g_{n+1}|...|g_1] with tuple[j] = g_{n+1-j}.
  Phase out;
  std::vector<int> face;
  face.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i <= n + 1; ++i) {
    face.clear();
    if (i == 0) {
      face.assign(tuple.begin(), tuple.end() - 1);
    } else if (i == n + 1) {
      face.assign(tuple.begin() + 1, tuple.end());
    } else {
      // merge g_{i+1} (at index n-i) with g_i (at index n+1-i)
      for (int j = 0; j < n - i; ++j) face.push_back(tuple[j]);
      face.push_back(base_->compose(tuple[n - i], tuple[n + 1 - i]));
      for (int j = n + 2 - i; j <= n; ++j) face.push_back(tuple[j]);
    }
    const Phase v = (*this)(std::span<const int>(face.data(), face.size()));
    out *= (i % 2 == 0) ? v : v.inverse();
  }
  return out;
}

Cochain Cochain::coboundary() const {
  return Cochain(*base_, degree_ + 1,
                 [this](std::span<const int> t) { return eval_coboundary(t); });
}

bool Cochain::is_cocycle() const { return !first_violation().has_value(); }

namespace {
struct StopEnumeration {};
}  // namespace

std::optional<std::vector<int>> Cochain::first_violation() const {
  std::optional<std::vector<int>> witness;
  try {
    for_each_composable(*base_, degree_ + 1, [&](std::span<const int> tuple) {
      if (!eval_coboundary(tuple).is_one()) {
        witness.emplace(tuple.begin(), tuple.end());
        throw StopEnumeration{};
      }
    });
  } catch (const StopEnumeration&) {
  }
  return witness;
}

Cochain Cochain::operator*(const Cochain& o) const {
  if (base_ != o.base_ || degree_ != o.degree_)
    throw std::invalid_argument("cochain: product needs matching base and degree");
  return Cochain(*base_, degree_,
                 [&](std::span<const int> t) { return (*this)(t)*o(t); });
}

Cochain Cochain::operator/(const Cochain& o) const {
  if (base_ != o.base_ || degree_ != o.degree_)
    throw std::invalid_argument("cochain: ratio needs matching base and degree");
  return Cochain(*base_, degree_,
                 [&](std::span<const int> t) { return (*this)(t) / o(t); });
}

bool Cochain::same_values(const Cochain& o) const {
  return base_ == o.base_ && degree_ == o.degree_ && values_ == o.values_;
}

Cochain pullback(const GroupoidFunctor& f, const Cochain& c) {
  if (&c.base() != f.target)
    throw std::invalid_argument("pullback: cochain does not live on the functor target");
  const int n = c.degree();
  return Cochain(*f.source, n, [&](std::span<const int> t) {
    std::vector<int> image(t.size());
    if (n == 0) {
      image[0] = f.at_object(t[0]);
    } else {
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = f.at_morphism(t[i]);
    }
    return c(std::span<const int>(image.data(), image.size()));
  });
}

Cochain transgress(const Cochain& c, const LoopGroupoid& loop) {
  if (&c.base() != loop.base)
    throw std::invalid_argument("transgress: loop groupoid has a different base");
  const int n = c.degree();
  if (n < 1) throw std::invalid_argument("transgress: degree must be at least 1");
  if (!c.is_cocycle()) throw std::invalid_argument("transgress: input is not a cocycle");

  const Groupoid& base = c.base();
  const Groupoid& lg = loop.gpd;

  const auto value = [&](std::span<const int> t) {
    // t is a composable (n-1)-tuple of loop morphisms, t[n-2] applied first;
    // for n == 1 it is a 1-element span holding the loop object id.
    const int source_object = n == 1 ? t[0] : lg.src(t[t.size() - 1]);
    const int gamma = loop.object_loop[source_object];
    std::vector<int> gs(static_cast<std::size_t>(n - 1));  // gs[i] = g_{i+1}
    for (int i = 0; i < n - 1; ++i) gs[i] = loop.morphism_g[t[n - 2 - i]];

    Phase out;
    std::vector<int> str(static_cast<std::size_t>(n));
    int transported = gamma;  // l_i = (g_i...g_1) gamma (g_i...g_1)^{-1}
    for (int i = 0; i <= n - 1; ++i) {
      if (i > 0) {
        const int g = gs[i - 1];
        transported = base.compose(g, base.compose(transported, base.inverse(g)));
      }
      // [g_{n-1}|...|g_{i+1}| l_i |g_i|...|g_1]
      for (int j = 0; j < n - 1 - i; ++j) str[j] = gs[n - 2 - j];
      str[n - 1 - i] = transported;
      for (int j = n - i; j < n; ++j) str[j] = gs[n - 1 - j];
      const Phase v = c(std::span<const int>(str.data(), str.size()));
      out *= ((n - 1 - i) % 2 == 0) ? v : v.inverse();
    }
    return out;
  };

  Cochain out(lg, n - 1, value);
  if (c.normalized() && !out.normalized())
    throw std::logic_error("transgress: normalization was not preserved");
  if (!out.is_cocycle())
    throw std::logic_error("transgress: output failed the cocycle check");
  return out;
}

PointedTransgression transgress_at(const FiniteGroup& g, const Cochain& c, int x) {
  const int n = c.degree();
  if (n != 2 && n != 3)
    throw std::invalid_argument("transgress_at: degree must be 2 or 3");
  if (c.base().num_objects() != 1 || c.base().num_morphisms() != g.order())
    throw std::invalid_argument("transgress_at: cochain does not live on the delooping");
  if (x < 0 || x >= g.order())
    throw std::invalid_argument("transgress_at: element out of range");
  if (!c.is_cocycle()) throw std::invalid_argument("transgress_at: input is not a cocycle");

  auto sub = g.centralizer(x);
  auto dl = std::make_unique<Groupoid>(delooping(sub.group));
  const auto& emb = sub.embedding;
  Cochain out(*dl, n - 1, [&](std::span<const int> t) {
    if (n == 2) {
      const int a = emb[t[0]];
      return c({a, x}) / c({x, a});
    }
    const int h = emb[t[0]], k = emb[t[1]];
    return c({h, k, x}) * c({x, h, k}) / c({h, x, k});
  });
  if (c.normalized() && !out.normalized())
    throw std::logic_error("transgress_at: normalization was not preserved");
  if (!out.is_cocycle())
    throw std::logic_error("transgress_at: output failed the cocycle check");
  return PointedTransgression{std::move(sub.group), std::move(sub.embedding),
                              std::move(dl), std::move(out)};
}

Cochain epsilon_correction(const GroupoidFunctor& k, const GroupoidFunctor& k2,
                           const NaturalTransformation& t, const Cochain& theta) {
  if (k.source != k2.source || k.target != k2.target)
    throw std::invalid_argument("epsilon_correction: functors are not parallel");
  if (t.from.source != k.source || t.from.target != k.target ||
      t.from.object_map != k.object_map || t.from.morphism_map != k.morphism_map ||
      t.to.object_map != k2.object_map || t.to.morphism_map != k2.morphism_map)
    throw std::invalid_argument("epsilon_correction: transformation does not join k to k2");
  if (&theta.base() != k.target || theta.degree() != 2)
    throw std::invalid_argument("epsilon_correction: theta must be a 2-cochain on the target");
  if (!theta.is_cocycle())
    throw std::invalid_argument("epsilon_correction: theta is not a cocycle");

  const Groupoid& s = *k.source;
  Cochain eps(s, 1, [&](std::span<const int> tup) {
    const int m = tup[0];
    const int x0 = s.src(m), x1 = s.dst(m);
    return theta({t.at(x1), k.at_morphism(m)}) / theta({k2.at_morphism(m), t.at(x0)});
  });

  const Cochain lhs = pullback(k, theta);
  const Cochain rhs = eps.coboundary() * pullback(k2, theta);
  if (!lhs.same_values(rhs))
    throw std::logic_error("epsilon_correction: comparison identity failed");
  return eps;
}

Cochain random_cocycle(const Groupoid& g, int degree, std::uint64_t seed,
                       const Cochain* base) {
  if (degree < 1 || degree > 3)
    throw std::invalid_argument("random_cocycle: degree must be 1, 2 or 3");
  if (base) {
    if (&base->base() != &g || base->degree() != degree)
      throw std::invalid_argument("random_cocycle: base cochain mismatch");
    if (!base->is_cocycle())
      throw std::invalid_argument("random_cocycle: base is not a cocycle");
  }
  std::mt19937_64 rng(seed);
  static constexpr int kDenominators[] = {1, 2, 3, 4, 6, 8, 12, 24};
  const auto random_phase = [&]() {
    const int q = kDenominators[std::uniform_int_distribution<int>(0, 7)(rng)];
    const int p = std::uniform_int_distribution<int>(0, q - 1)(rng);
    return Phase(p, q);
  };
  // Tabulation visits tuples in the canonical enumeration order, so the
  // draw sequence (and hence the result) is deterministic in the seed.
  Cochain b(g, degree - 1, [&](std::span<const int> t) {
    if (degree - 1 >= 1 && contains_identity(g, t)) return Phase();
    return random_phase();
  });
  Cochain out = base ? *base * b.coboundary() : b.coboundary();
  if (!out.is_cocycle()) throw std::logic_error("random_cocycle: output not closed");
  if ((!base || base->normalized()) && !out.normalized())
    throw std::logic_error("random_cocycle: output not normalized");
  return out;
}

}  // namespace qdouble
