#include "apolar/ideal.hpp"

#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"

namespace apolar {

Ideal::Ideal(int n, std::vector<Poly> gens) : n_(n) {
  for (auto& g : gens) {
    if (g.n() != n) throw DomainError("generator ambient count differs from the ideal's");
    if (g.side() != Side::X) throw DomainError("ideal generators must be operator-side");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GrobnerBasis& Ideal::groebner(const TermOrder& ord) const {
  if (ord.n() != n_) throw DomainError("term order ambient count differs from the ideal's");
  const std::string key = ord.name();
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->bases.find(key);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto gb = std::make_shared<const GrobnerBasis>(reduced_groebner(gens_, ord));
  std::lock_guard lock(cache_->mu);
  auto [it, inserted] = cache_->bases.emplace(key, gb);
  return *it->second;
}

}  // namespace apolar
