#include "apolar/groebner.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "apolar/errors.hpp"
#include "apolar/monomial_basis.hpp"
#include "apolar/qmatrix.hpp"

namespace apolar {

namespace {

struct OrderGreater {
  const TermOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const { return ord->compare(a, b) > 0; }
};

using Acc = std::map<Monomial, Rat, OrderGreater>;

struct Term {
  Monomial m;
  Rat c;
};
using Terms = std::vector<Term>;  // descending in the active order

struct Element {
  Terms t;  // monic
  Monomial lt;
  int lt_degree = 0;
  int sugar = 0;
  bool monomial = false;
  bool active = true;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

class Engine {
 public:
  Engine(const TermOrder& ord, int trunc) : ord_(ord), trunc_(trunc) {}

  bool keep(const Monomial& m) const { return trunc_ < 0 || m.degree() < trunc_; }

  Acc make_acc() const { return Acc(OrderGreater{&ord_}); }

  Terms to_terms(const Poly& p) const {
    Acc a = make_acc();
    for (const auto& [m, c] : p.terms())
      if (keep(m)) a.emplace(m, c);
    return drain(a);
  }

  static Terms drain(Acc& a) {
    Terms t;
    t.reserve(a.size());
    for (auto& [m, c] : a) t.push_back({m, std::move(c)});
    a.clear();
    return t;
  }

  // Index of an element whose leading monomial divides m, or -1.
  int find_divisor(const Monomial& m, bool active_only) const {
    const int dm = m.degree();
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      const Element& e = elems_[k];
      if (active_only && !e.active) continue;
      if (e.lt_degree <= dm && e.lt.divides(m)) return static_cast<int>(k);
    }
    return -1;
  }

  // Reduction of the accumulated polynomial by the active elements; with
  // full = false only the leading term is made irreducible. sugar, if given,
  // is raised to cover every reducer used.
  Terms reduce(Acc& acc, bool full = true, int* sugar = nullptr) const {
    Terms out;
    Rat prod;
    while (!acc.empty()) {
      auto it = acc.begin();
      int k = find_divisor(it->first, true);
      if (k < 0) {
        out.push_back({it->first, std::move(it->second)});
        acc.erase(it);
        if (!full) {
          for (auto& [m, c] : acc) out.push_back({m, std::move(c)});
          acc.clear();
        }
        continue;
      }
      const Element& g = elems_[k];
      Monomial q = it->first / g.lt;
      if (sugar) *sugar = std::max(*sugar, q.degree() + g.sugar);
      Rat c = std::move(it->second);
      acc.erase(it);
      for (std::size_t r = 1; r < g.t.size(); ++r) {
        Monomial mm = q * g.t[r].m;
        if (!keep(mm)) continue;
        prod = c * g.t[r].c;
        auto [pos, inserted] = acc.try_emplace(mm);
        pos->second -= prod;
        if (pos->second == 0) acc.erase(pos);
      }
    }
    return out;
  }

  void add_scaled(Acc& acc, const Terms& t, std::size_t from, const Monomial& q, const Rat& c) const {
    for (std::size_t r = from; r < t.size(); ++r) {
      Monomial mm = q * t[r].m;
      if (!keep(mm)) continue;
      auto [pos, inserted] = acc.try_emplace(mm);
      pos->second += c * t[r].c;
      if (pos->second == 0) acc.erase(pos);
    }
  }

  // Adds a monic, fully reduced element and updates the pair set.
  void insert(Terms t, int sugar) {
    Element e;
    e.lt = t.front().m;
    e.lt_degree = e.lt.degree();
    e.sugar = sugar;
    e.monomial = t.size() == 1;
    e.t = std::move(t);
    const int h = static_cast<int>(elems_.size());
    elems_.push_back(std::move(e));
    update(h);
  }

  void update(int h) {
    const Element& eh = elems_[h];
    std::vector<Pair> c;
    for (int g = 0; g < h; ++g) {
      const Element& eg = elems_[g];
      if (!eg.active) continue;
      if (eh.monomial && eg.monomial) continue;  // S-polynomial is zero
      Monomial l = Monomial::lcm(eg.lt, eh.lt);
      const int ld = l.degree();
      c.push_back({g, h, l, std::max(eg.sugar + ld - eg.lt_degree, eh.sugar + ld - eh.lt_degree)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const Pair& p = c[a];
      bool coprime = elems_[p.i].lt.coprime(eh.lt);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < c.size() && !dominated; ++b)
          if (c[b].lcm.divides(p.lcm)) dominated = true;
        for (std::size_t b = 0; b < d.size() && !dominated; ++b)
          if (d[b].lcm.divides(p.lcm)) dominated = true;
      }
      if (coprime || !dominated) d.push_back(p);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (auto& p : pairs_) {
      bool drop = eh.lt.divides(p.lcm) && Monomial::lcm(elems_[p.i].lt, eh.lt) != p.lcm &&
                  Monomial::lcm(elems_[p.j].lt, eh.lt) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d)
      if (!elems_[p.i].lt.coprime(eh.lt)) kept.push_back(std::move(p));
    pairs_ = std::move(kept);
    for (int g = 0; g < h; ++g)
      if (elems_[g].active && eh.lt.divides(elems_[g].lt)) elems_[g].active = false;
  }

  void add_generator(const Poly& p) {
    Acc a = make_acc();
    for (const auto& [m, c] : p.terms())
      if (keep(m)) a.emplace(m, c);
    Terms r = reduce(a);
    if (r.empty()) return;
    make_monic(r);
    int sugar = 0;
    for (const auto& x : r) sugar = std::max(sugar, x.m.degree());
    insert(std::move(r), sugar);
  }

  static void make_monic(Terms& t) {
    if (t.front().c == 1) return;
    Rat inv = 1 / t.front().c;
    for (auto& x : t) x.c *= inv;
  }

  // Sugar strategy: lowest sugar degree first, ties by the smaller lcm. Plain
  // normal selection stalls on the product order, which is not graded.
  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && ord_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      const Element& a = elems_[p.i];
      const Element& b = elems_[p.j];
      Acc acc = make_acc();
      add_scaled(acc, a.t, 1, p.lcm / a.lt, Rat(1));
      add_scaled(acc, b.t, 1, p.lcm / b.lt, Rat(-1));
      int sugar = p.sugar;
      Terms r = reduce(acc, false, &sugar);
      if (r.empty()) continue;
      make_monic(r);
      insert(std::move(r), sugar);
    }
  }

  std::vector<Poly> reduced_basis(int n) {
    std::vector<int> act;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].active) act.push_back(static_cast<int>(k));
    std::vector<Terms> fin;
    for (int k : act) {
      const Element& e = elems_[k];
      Acc tail = make_acc();
      for (std::size_t r = 1; r < e.t.size(); ++r) tail.emplace(e.t[r].m, e.t[r].c);
      Terms t{{e.t.front().m, Rat(1)}};
      for (auto& x : reduce(tail)) t.push_back(std::move(x));
      fin.push_back(std::move(t));
    }
    std::sort(fin.begin(), fin.end(),
              [&](const Terms& x, const Terms& y) { return ord_.compare(x.front().m, y.front().m) < 0; });
    std::vector<Poly> out;
    for (const auto& t : fin) {
      Poly p(n, Side::X);
      for (const auto& x : t) p.add_term(x.m, x.c);
      out.push_back(std::move(p));
    }
    return out;
  }

  // Reduction with an arbitrary list of divisors (not necessarily a basis).
  void load_divisors(std::span<const Poly> g) {
    for (const auto& p : g) {
      if (p.is_zero()) throw DomainError("zero polynomial in divisor list");
      Terms t = to_terms(p);
      if (t.empty()) continue;
      make_monic(t);
      Element e;
      e.lt = t.front().m;
      e.lt_degree = e.lt.degree();
      e.monomial = t.size() == 1;
      e.t = std::move(t);
      elems_.push_back(std::move(e));
    }
  }

 private:
  const TermOrder& ord_;
  int trunc_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
};

Poly from_terms(int n, const Terms& t) {
  Poly p(n, Side::X);
  for (const auto& x : t) p.add_term(x.m, x.c);
  return p;
}

long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

void check_ambient(std::span<const Poly> ps, const TermOrder& ord) {
  for (const auto& p : ps) {
    if (p.n() != ord.n()) throw DomainError("polynomial ambient count differs from the term order's");
    if (p.side() != Side::X) throw DomainError("Groebner computations need operator-side polynomials");
  }
}

}  // namespace

Monomial leading_monomial(const Poly& f, const TermOrder& ord) {
  if (f.is_zero()) throw DomainError("zero polynomial has no leading monomial");
  auto it = f.terms().begin();
  Monomial best = it->first;
  for (++it; it != f.terms().end(); ++it)
    if (ord.compare(it->first, best) > 0) best = it->first;
  return best;
}

Poly normal_form(const Poly& f, std::span<const Poly> g, const TermOrder& ord) {
  check_ambient(g, ord);
  check_ambient(std::span<const Poly>(&f, 1), ord);
  Engine e(ord, -1);
  e.load_divisors(g);
  Acc a = e.make_acc();
  for (const auto& [m, c] : f.terms()) a.emplace(m, c);
  return from_terms(f.n(), e.reduce(a));
}

int explicit_power_degree(std::span<const Poly> gens) {
  if (gens.empty()) return -1;
  const int n = gens.front().n();
  std::map<int, std::unordered_set<std::uint64_t>> by_degree;
  for (const auto& g : gens)
    if (g.size() == 1) {
      const Monomial& m = g.terms().begin()->first;
      by_degree[m.degree()].insert(m.key());
    }
  for (const auto& [d, set] : by_degree)
    if (static_cast<long>(set.size()) == binom(n + d - 1, d)) return d;
  return -1;
}

GrobnerBasis reduced_groebner(std::span<const Poly> gens, const TermOrder& ord) {
  check_ambient(gens, ord);
  const int trunc = explicit_power_degree(gens);
  Engine e(ord, trunc);
  // Monomials first: they are cheap and prune everything after them.
  std::vector<const Poly*> order;
  for (const auto& g : gens)
    if (g.size() == 1) order.push_back(&g);
  for (const auto& g : gens)
    if (g.size() > 1) order.push_back(&g);
  for (const Poly* g : order) {
    if (g->is_zero()) throw DomainError("zero generator");
    if (trunc >= 0 && g->size() == 1 && g->degree() == trunc) {
      Terms t{{g->terms().begin()->first, Rat(1)}};
      if (e.find_divisor(t.front().m, true) < 0) e.insert(std::move(t), trunc);
      continue;
    }
    e.add_generator(*g);
  }
  e.run();
  return GrobnerBasis{ord, e.reduced_basis(ord.n())};
}

std::vector<Monomial> standard_monomials(const GrobnerBasis& g) {
  const int n = g.order.n();
  std::vector<Monomial> lts;
  for (const auto& p : g.polys) lts.push_back(leading_monomial(p, g.order));
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (const auto& m : lts)
      if (m[i] > 0 && m.degree() == m[i]) found = true;
    if (!found) throw DomainError("quotient is not finite-dimensional: x" + std::to_string(i + 1) +
                                  " has no pure power among the leading terms");
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lts)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<Monomial> out;
  std::unordered_set<std::uint64_t> seen;
  std::deque<Monomial> queue;
  Monomial one;
  if (standard(one)) {
    queue.push_back(one);
    seen.insert(one.key());
  }
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    out.push_back(m);
    for (int i = 0; i < n; ++i) {
      Monomial next = m * Monomial::var(i);
      if (seen.count(next.key()) || !standard(next)) continue;
      seen.insert(next.key());
      queue.push_back(next);
    }
  }
  return out;
}

namespace {

HilbertFunction count_by_degree(const std::vector<Monomial>& ms) {
  std::vector<int> counts;
  for (const auto& m : ms) {
    const int d = m.degree();
    if (static_cast<int>(counts.size()) <= d) counts.resize(static_cast<std::size_t>(d) + 1, 0);
    ++counts[static_cast<std::size_t>(d)];
  }
  return HilbertFunction(counts);
}

}  // namespace

HilbertFunction quotient_hilbert(const GrobnerBasis& g) { return count_by_degree(standard_monomials(g)); }

HilbertFunction quotient_hilbert(const GrobnerBasis& g, const TermOrder& target) {
  if (target == g.order) return quotient_hilbert(g);
  if (target.n() != g.order.n()) throw DomainError("term order has the wrong number of variables");
  const int n = g.order.n();
  // Coordinates of normal forms in the standard basis of g.
  const auto basis = standard_monomials(g);
  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k].key()] = static_cast<int>(k);
  auto coords = [&](const Monomial& m) {
    QVector v(basis.size());
    const Poly r = normal_form(Poly::monomial(n, Side::X, m), g.polys, g.order);
    for (const auto& [mono, c] : r.terms())
      v[static_cast<std::size_t>(index.at(mono.key()))] = c;
    return v;
  };
  // FGLM walk: visit candidates in increasing target order; a monomial is
  // standard for the target iff its normal form is independent of the
  // normal forms of the smaller standard monomials.
  auto later = [&](const Monomial& a, const Monomial& b) { return target.compare(a, b) > 0; };
  std::priority_queue<Monomial, std::vector<Monomial>, decltype(later)> queue(later);
  std::unordered_set<std::uint64_t> seen;
  std::vector<Monomial> leading, standard;
  EchelonBasis span(static_cast<int>(basis.size()));
  queue.push(Monomial{});
  seen.insert(Monomial{}.key());
  while (!queue.empty()) {
    Monomial m = queue.top();
    queue.pop();
    bool divisible = false;
    for (const auto& l : leading)
      if (l.divides(m)) divisible = true;
    if (divisible) continue;
    if (!span.insert(coords(m))) {
      leading.push_back(m);
      continue;
    }
    standard.push_back(m);
    for (int i = 0; i < n; ++i) {
      Monomial next = m * Monomial::var(i);
      if (seen.insert(next.key()).second) queue.push(next);
    }
  }
  return count_by_degree(standard);
}

Ideal ideal_square(const Ideal& i) {
  const auto& g = i.generators();
  std::vector<Poly> out;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a; b < g.size(); ++b) out.push_back(g[a] * g[b]);
  return Ideal(i.n(), std::move(out));
}

bool ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& ord) {
  if (a.n() != b.n()) throw DomainError("ideals live in different ambient rings");
  const auto& ga = a.groebner(ord);
  const auto& gb = b.groebner(ord);
  for (const auto& f : a.generators())
    if (!normal_form(f, gb.polys, ord).is_zero()) return false;
  for (const auto& f : b.generators())
    if (!normal_form(f, ga.polys, ord).is_zero()) return false;
  return true;
}

std::vector<Poly> power_generators(int n, int d) {
  std::vector<Poly> out;
  for (const auto& m : monomials_of_degree(n, d)) out.push_back(Poly::monomial(n, Side::X, m));
  return out;
}

Ideal minimal_generators(const Ideal& i) {
  const int n = i.n();
  const auto& gens = i.generators();
  const int d = explicit_power_degree(gens);
  if (d < 0) throw DomainError("minimal_generators needs every monomial of some degree among the generators");
  MonomialBasis basis(n, 0, d);
  EchelonBasis span(basis.size());
  auto vec = [&](const Poly& p) {
    QVector v(static_cast<std::size_t>(basis.size()));
    for (const auto& [m, c] : p.terms())
      if (m.degree() <= d) v[basis.index(m)] = c;
    return v;
  };
  // m*J modulo m^(d+1).
  for (const auto& g : gens) {
    int o = g.order();
    for (int k = 1; k + o <= d; ++k)
      for (const auto& q : monomials_of_degree(n, k))
        span.insert(vec(Poly::monomial(n, Side::X, q) * g));
  }
  std::vector<Poly> out;
  auto consider = [&](const Poly& g) {
    if (span.insert(vec(g))) out.push_back(g.truncated(d + 1));
  };
  for (const auto& g : gens)
    if (!(g.size() == 1 && g.degree() == d)) consider(g);
  for (const auto& p : power_generators(n, d)) consider(p);
  return Ideal(n, std::move(out));
}

}  // namespace apolar
