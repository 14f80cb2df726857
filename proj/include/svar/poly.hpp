#pragma once
// Graded polynomial rings over F_p and Gröbner bases.
//
// Monomial order: weighted degree (variable degrees as weights), ties
// broken reverse-lexicographically. A ring may carry an elimination
// variable, which then dominates every comparison.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "svar/field.hpp"

namespace svar {

using Monomial = std::vector<unsigned>;

struct Term {
  Monomial m;
  Elem c = 0;
};

class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> names, std::vector<unsigned> degrees,
           std::optional<std::size_t> eliminate = std::nullopt);

  const PrimeField& field() const { return F_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  std::optional<std::size_t> elimination_variable() const { return elim_; }

  unsigned degree(const Monomial& m) const;
  /// Strict order: true when a > b.
  bool greater(const Monomial& a, const Monomial& b) const;
  int index_of(const std::string& name) const;  // -1 if absent

  bool operator==(const PolyRing& o) const;

 private:
  PrimeField F_;
  std::vector<std::string> names_;
  std::vector<unsigned> degrees_;
  std::optional<std::size_t> elim_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Polynomial with terms sorted strictly decreasing in the ring order and
/// no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(PolyRingPtr R) : R_(std::move(R)) {}
  static Poly constant(PolyRingPtr R, Elem c);
  static Poly monomial(PolyRingPtr R, Monomial m, Elem c = 1);
  static Poly variable(PolyRingPtr R, std::size_t i);
  /// Builds from arbitrary terms (merged, sorted, zeros dropped).
  static Poly from_terms(PolyRingPtr R, std::vector<Term> terms);

  const PolyRingPtr& ring() const { return R_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& lead() const { return terms_.front(); }
  bool is_homogeneous() const;
  unsigned degree() const;  // max weighted degree; 0 for the zero polynomial
  bool is_constant() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  Poly times_monomial(const Monomial& m, Elem c) const;
  Poly pow(unsigned k) const;
  /// Scales so the leading coefficient is 1.
  Poly monic() const;

  bool operator==(const Poly& o) const;
  std::string to_string() const;

 private:
  PolyRingPtr R_;
  std::vector<Term> terms_;
};

/// Parses "2*z1^2*z2 + z3 - 1" over the ring's variables.
Poly parse_poly(const PolyRingPtr& R, const std::string& text);

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

/// Remainder of f modulo G (full reduction of every term).
Poly normal_form(const Poly& f, const std::vector<Poly>& G);

inline constexpr unsigned kDefaultGroebnerDegreeCap = 40;

/// Reduced Gröbner basis, sorted by leading monomial (ascending). Throws
/// DegreeBudgetExceeded when an S-polynomial exceeds the degree cap.
std::vector<Poly> groebner(const std::vector<Poly>& gens, unsigned degree_cap = kDefaultGroebnerDegreeCap);

/// Every S-polynomial of G reduces to zero modulo G.
bool satisfies_buchberger(const std::vector<Poly>& G);

enum class Tri { No, Yes, Unknown };
const char* to_string(Tri t);

/// Ideal with a lazily computed Gröbner basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(PolyRingPtr R, std::vector<Poly> gens, unsigned degree_cap = kDefaultGroebnerDegreeCap);

  const PolyRingPtr& ring() const { return R_; }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<Poly>& groebner_basis() const;
  unsigned degree_cap() const { return cap_; }

  bool contains(const Poly& f) const;
  bool is_unit() const;
  bool is_zero() const;
  /// f ∈ √I: a bounded power test, then a decisive Rabinowitsch check.
  /// Unknown only when the Gröbner computation runs out of budget.
  Tri radical_contains(const Poly& f) const;
  /// Krull dimension of R/I (−1 for the unit ideal).
  int krull_dim() const;

  std::vector<std::string> generator_strings() const;
  std::vector<std::string> groebner_strings() const;

 private:
  PolyRingPtr R_;
  std::vector<Poly> gens_;
  unsigned cap_ = kDefaultGroebnerDegreeCap;
  struct Cache {
    std::once_flag once;
    std::vector<Poly> gb;
  };
  std::shared_ptr<Cache> cache_;
};

/// I + J.
Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// I ∩ J by eliminating t from tI + (1−t)J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// √J ⊆ √I, i.e. V(I) ⊆ V(J): every generator of J lies in √I.
Tri radical_contains(const Ideal& I, const Ideal& J);
Tri radical_equal(const Ideal& I, const Ideal& J);
Tri operator&&(Tri a, Tri b);

}  // namespace svar
