#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "apolar/poly.hpp"
#include "apolar/term_order.hpp"

namespace apolar {

struct GrobnerBasis {
  TermOrder order;
  std::vector<Poly> polys;  // reduced, monic, sorted by increasing leading term
};

// Finite list of x-side generators. The Groebner basis cache is shared between
// copies and guarded by a mutex; cache writes are idempotent.
class Ideal {
 public:
  Ideal() = default;
  Ideal(int n, std::vector<Poly> gens);

  int n() const { return n_; }
  const std::vector<Poly>& generators() const { return gens_; }

  const GrobnerBasis& groebner(const TermOrder& ord) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const GrobnerBasis>> bases;
  };
  int n_ = 0;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace apolar
