#pragma once
// Bounded cochain complexes of modules: d^i: X^i -> X^{i+1}.
//
// Shift: X[p]^n = X^{n+p}, d_{X[p]} = (-1)^p d_X.
// Cone of f: X -> Y: C^n = X^{n+1} ⊕ Y^n, d = [[-d_X, 0], [f, d_Y]].

#include <map>
#include <vector>

#include "svar/module.hpp"

namespace svar {

class BoundedComplex {
 public:
  BoundedComplex() = default;
  /// diffs[j] maps terms[j] -> terms[j+1]; diffs.size() == terms.size() - 1.
  /// Throws UsageError on shape or homomorphism failures and NotAChainMap
  /// when d∘d != 0.
  BoundedComplex(AlgebraPtr A, int lo, std::vector<Representation> terms, std::vector<Matrix> diffs);

  static BoundedComplex stalk(const Representation& M, int degree = 0);
  static BoundedComplex zero(AlgebraPtr A);

  const AlgebraPtr& algebra() const { return A_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }
  const Representation& term(int i) const;
  /// d^i: X^i -> X^{i+1}; zero outside the stored range.
  Matrix diff(int i) const;
  std::size_t dim(int i) const { return term(i).dim(); }
  std::size_t total_dim() const;
  /// Same complex with zero end terms removed.
  BoundedComplex trimmed() const;

  bool operator==(const BoundedComplex& o) const;

 private:
  AlgebraPtr A_;
  int lo_ = 0;
  std::vector<Representation> terms_;
  std::vector<Matrix> diffs_;
  Representation zero_;
};

/// Degreewise maps f^i: X^i -> Y^i; missing degrees are zero.
struct ChainMap {
  std::map<int, Matrix> comps;

  Matrix at(int i, std::size_t rows, std::size_t cols) const;
};

bool is_chain_map(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& f);
ChainMap identity_map(const BoundedComplex& X);

BoundedComplex shift(const BoundedComplex& X, int p);
/// Throws NotAChainMap when f is not a chain map.
BoundedComplex cone(const BoundedComplex& X, const BoundedComplex& Y, const ChainMap& f);
BoundedComplex direct_sum(const BoundedComplex& X, const BoundedComplex& Y);

/// H^i(X) as a module.
Representation homology(const BoundedComplex& X, int i);
std::vector<std::size_t> homology_dims(const BoundedComplex& X, int lo, int hi);
bool is_acyclic(const BoundedComplex& X);

/// Total complex of B ⊗_Λ X for a complex B of bimodules (over the
/// enveloping algebra of X's algebra): d = d_B ⊗ 1 + (-1)^p 1 ⊗ d_X.
BoundedComplex tensor(const BoundedComplex& B, const BoundedComplex& X);
BoundedComplex tensor(const Representation& B, const BoundedComplex& X);

}  // namespace svar
