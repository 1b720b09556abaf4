#include "cutideal/groebner.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cutideal {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// TermOrder

TermOrder TermOrder::degrevlex() { return {}; }

TermOrder TermOrder::lex() {
  TermOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

TermOrder TermOrder::elimination(std::vector<std::size_t> block) {
  TermOrder o;
  o.kind_ = Kind::Elimination;
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());
  o.block_ = std::move(block);
  o.mask_.assign(o.block_.empty() ? 0 : o.block_.back() + 1, 0);
  for (std::size_t k : o.block_) o.mask_[k] = 1;
  return o;
}

TermOrder TermOrder::degrevlex_smallest(std::size_t var) {
  TermOrder o;
  o.last_ = static_cast<std::ptrdiff_t>(var);
  return o;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Degrevlex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elimination";
  }
  return "degrevlex";
}


std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t k = 0; k < n; ++k)
        if (a[k] != b[k]) return a[k] <=> b[k];
      return std::strong_ordering::equal;

    case Kind::Degrevlex: {
      if (auto c = degree(a) <=> degree(b); c != 0) return c;
      if (last_ >= 0 && a[last_] != b[last_])
        return a[last_] < b[last_] ? std::strong_ordering::greater : std::strong_ordering::less;
      for (std::size_t k = n; k-- > 0;) {
        if (static_cast<std::ptrdiff_t>(k) == last_) continue;
        if (a[k] != b[k]) return a[k] < b[k] ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
    }

    case Kind::Elimination: {
      int da = 0, db = 0;
      for (std::size_t k : block_) {
        if (k >= n) break;
        da += a[k];
        db += b[k];
      }
      if (auto c = da <=> db; c != 0) return c;
      auto in_block = [this](std::size_t k) { return k < mask_.size() && mask_[k]; };
      for (std::size_t k = n; k-- > 0;)
        if (in_block(k) && a[k] != b[k])
          return a[k] < b[k] ? std::strong_ordering::greater : std::strong_ordering::less;
      int ra = 0, rb = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (!in_block(k)) {
          ra += a[k];
          rb += b[k];
        }
      if (auto c = ra <=> rb; c != 0) return c;
      for (std::size_t k = n; k-- > 0;)
        if (!in_block(k) && a[k] != b[k])
          return a[k] < b[k] ? std::strong_ordering::greater : std::strong_ordering::less;
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Binomial

Binomial::Binomial(Monomial plus, Monomial minus) : plus_(std::move(plus)), minus_(std::move(minus)) {
  if (plus_.size() != minus_.size())
    throw std::invalid_argument("binomial terms live in rings of different size");
  for (std::size_t k = 0; k < plus_.size(); ++k)
    if (plus_[k] < 0 || minus_[k] < 0) throw std::invalid_argument("negative exponent in binomial");
  if (plus_ == minus_) throw std::invalid_argument("zero binomial");
}

std::vector<std::int64_t> Binomial::difference() const {
  std::vector<std::int64_t> d(plus_.size());
  for (std::size_t k = 0; k < d.size(); ++k)
    d[k] = static_cast<std::int64_t>(plus_[k]) - minus_[k];
  return d;
}

Binomial Binomial::oriented(const TermOrder& order) const {
  if (order.less(plus_, minus_)) return Binomial(minus_, plus_);
  return *this;
}

Binomial binomial_from_vector(std::span<const std::int64_t> u) {
  Monomial plus(u.size(), 0), minus(u.size(), 0);
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > std::numeric_limits<Exponent>::max() || u[k] < -std::numeric_limits<Exponent>::max())
      throw std::overflow_error("lattice vector entry too large for an exponent");
    (u[k] > 0 ? plus : minus)[k] = static_cast<Exponent>(u[k] > 0 ? u[k] : -u[k]);
  }
  return Binomial(std::move(plus), std::move(minus));
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m[k] != 0) mask |= std::uint64_t{1} << (k % 64);
  return mask;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

// m / a * b, assuming a | m.
Monomial shift(const Monomial& m, const Monomial& a, const Monomial& b) {
  Monomial out(m.size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const std::int64_t e = static_cast<std::int64_t>(m[k]) - a[k] + b[k];
    if (e > std::numeric_limits<Exponent>::max()) throw std::overflow_error("exponent overflow");
    out[k] = static_cast<Exponent>(e);
  }
  return out;
}

struct Element {
  Monomial lead;
  Monomial trail;
  std::uint64_t mask = 0;
  bool active = true;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int deg;
};

class Buchberger {
 public:
  explicit Buchberger(const TermOrder& order)
      : order_(order), pairs_([this](const Pair& a, const Pair& b) { return before(a, b); }) {}

  void add_generator(const Binomial& b) {
    Monomial p = reduce(b.plus());
    Monomial m = reduce(b.minus());
    insert(std::move(p), std::move(m));
  }

  void run() {
    while (!pairs_.empty()) {
      Pair pr = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const Element& a = elems_[pr.i];
      const Element& b = elems_[pr.j];
      Monomial s1 = reduce(shift(pr.lcm, a.lead, a.trail));
      Monomial s2 = reduce(shift(pr.lcm, b.lead, b.trail));
      insert(std::move(s1), std::move(s2));
    }
  }

  std::vector<Binomial> reduced() {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].active) keep.push_back(k);
    std::vector<Binomial> out;
    out.reserve(keep.size());
    for (std::size_t k : keep) out.emplace_back(elems_[k].lead, reduce(elems_[k].trail));
    std::sort(out.begin(), out.end(),
              [this](const Binomial& x, const Binomial& y) { return order_.less(x.plus(), y.plus()); });
    return out;
  }

 private:
  bool before(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (auto c = order_.compare(a.lcm, b.lcm); c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  Monomial reduce(Monomial m) const {
    bool again = true;
    while (again) {
      again = false;
      const std::uint64_t mask = support_mask(m);
      for (const Element& e : elems_) {
        if (!e.active || (e.mask & ~mask) != 0 || !divides(e.lead, m)) continue;
        m = shift(m, e.lead, e.trail);
        again = true;
        break;
      }
    }
    return m;
  }

  void insert(Monomial x, Monomial y) {
    if (x == y) return;
    if (order_.less(x, y)) std::swap(x, y);
    const std::size_t h = elems_.size();
    elems_.push_back({std::move(x), std::move(y), 0, true});
    elems_[h].mask = support_mask(elems_[h].lead);
    update(h);
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial& lh = elems_[h].lead;
    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < h; ++g) {
      if (!elems_[g].active) continue;
      Monomial l = lcm(lh, elems_[g].lead);
      const int d = degree(l);
      fresh.push_back({g, h, std::move(l), d});
    }
    std::vector<bool> coprime_pair(fresh.size());
    for (std::size_t k = 0; k < fresh.size(); ++k)
      coprime_pair[k] = coprime(lh, elems_[fresh[k].i].lead);

    // Criteria M and F, taking the candidates one at a time: a pair is dropped
    // when another pending or already kept pair has an lcm dividing its own.
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      bool drop = false;
      if (!coprime_pair[k]) {
        for (std::size_t o = k + 1; o < fresh.size() && !drop; ++o)
          drop = divides(fresh[o].lcm, fresh[k].lcm);
        for (std::size_t o : kept) {
          if (drop) break;
          drop = divides(fresh[o].lcm, fresh[k].lcm);
        }
      }
      if (!drop) kept.push_back(k);
    }
    // Criterion B on old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (divides(lh, l) && lcm(elems_[it->i].lead, lh) != l && lcm(elems_[it->j].lead, lh) != l)
        it = pairs_.erase(it);
      else
        ++it;
    }
    // Buchberger's product criterion, then install.
    for (std::size_t k : kept)
      if (!coprime_pair[k]) pairs_.insert(std::move(fresh[k]));

    for (std::size_t g = 0; g < h; ++g)
      if (elems_[g].active && divides(lh, elems_[g].lead)) elems_[g].active = false;
  }

  TermOrder order_;
  std::vector<Element> elems_;
  std::set<Pair, std::function<bool(const Pair&, const Pair&)>> pairs_;
};

}  // namespace

std::vector<Binomial> groebner_basis(std::span<const Binomial> gens, const TermOrder& order) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().variable_count();
  for (const Binomial& b : gens)
    if (b.variable_count() != n) throw std::invalid_argument("generators live in different rings");
  Buchberger engine(order);
  // Cheaper generators first keeps early reductions short.
  std::vector<Binomial> sorted(gens.begin(), gens.end());
  for (Binomial& b : sorted) b = b.oriented(order);
  std::stable_sort(sorted.begin(), sorted.end(), [&order](const Binomial& a, const Binomial& b) {
    return order.less(a.plus(), b.plus());
  });
  for (const Binomial& b : sorted) {
    engine.add_generator(b);
    engine.run();
  }
  return engine.reduced();
}

Monomial normal_form(Monomial m, std::span<const Binomial> basis) {
  bool again = true;
  while (again) {
    again = false;
    for (const Binomial& g : basis) {
      if (!divides(g.plus(), m)) continue;
      m = shift(m, g.plus(), g.minus());
      again = true;
      break;
    }
  }
  return m;
}

bool reduces_to_zero(const Binomial& b, std::span<const Binomial> basis) {
  return normal_form(b.plus(), basis) == normal_form(b.minus(), basis);
}

}  // namespace cutideal
