#include "svar/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "svar/error.hpp"

namespace svar {

// ---------------------------------------------------------------------------
// Presentation

int QuiverPresentation::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int QuiverPresentation::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

void QuiverPresentation::validate() const {
  const int nv = static_cast<int>(vertices.size());
  if (nv == 0) throw MalformedPresentation("quiver has no vertices");
  for (const auto& a : arrows)
    if (a.source < 0 || a.source >= nv || a.target < 0 || a.target >= nv)
      throw MalformedPresentation("arrow '" + a.name + "' has an undeclared endpoint");
  for (std::size_t r = 0; r < relations.size(); ++r) {
    int s = -1, t = -1;
    for (const auto& term : relations[r]) {
      if (term.arrows.size() < 2)
        throw MalformedPresentation("relation " + std::to_string(r + 1) + " has a path of length < 2");
      for (std::size_t k = 0; k < term.arrows.size(); ++k) {
        int a = term.arrows[k];
        if (a < 0 || a >= static_cast<int>(arrows.size()))
          throw MalformedPresentation("relation " + std::to_string(r + 1) + " uses an unknown arrow");
        if (k > 0 && arrows[term.arrows[k - 1]].target != arrows[a].source)
          throw MalformedPresentation("relation " + std::to_string(r + 1) + " contains a non-composable path");
      }
      int ts = arrows[term.arrows.front()].source, tt = arrows[term.arrows.back()].target;
      if (s < 0) {
        s = ts;
        t = tt;
      } else if (s != ts || t != tt) {
        throw MalformedPresentation("relation " + std::to_string(r + 1) + " is not a sum of parallel paths");
      }
    }
  }
  if (nilpotency_cap < 1) throw MalformedPresentation("nilpotency cap must be positive");
}

// ---------------------------------------------------------------------------
// FDAlgebra

FDAlgebra::FDAlgebra(PrimeField F, std::vector<std::string> vertex_names, std::vector<BasisElement> basis,
                     std::vector<AlgebraGenerator> gens, std::vector<SparseVec> mult,
                     std::vector<std::size_t> idempotents)
    : F_(F),
      vertex_names_(std::move(vertex_names)),
      basis_(std::move(basis)),
      gens_(std::move(gens)),
      mult_(std::move(mult)),
      idempotents_(std::move(idempotents)) {
  if (mult_.size() != basis_.size() * basis_.size()) throw UsageError("multiplication table has wrong size");
}

Vec FDAlgebra::multiply(std::span<const Elem> a, std::span<const Elem> b) const {
  Vec out(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!b[j]) continue;
      Elem c = F_.mul(a[i], b[j]);
      for (auto [k, v] : product(i, j)) out[k] = F_.add(out[k], F_.mul(c, v));
    }
  }
  return out;
}

Vec FDAlgebra::unit() const {
  Vec u(dim(), 0);
  for (auto e : idempotents_) u[e] = 1;
  return u;
}

Vec FDAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1;
  return v;
}

std::vector<std::size_t> FDAlgebra::right_ideal_basis(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis_[i].right == v) out.push_back(i);
  return out;
}

int FDAlgebra::max_degree() const {
  int m = 0;
  for (const auto& b : basis_) m = std::max(m, b.degree);
  return m;
}

Matrix FDAlgebra::left_mult_matrix(std::span<const Elem> a) const {
  Matrix L(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (auto [k, v] : product(i, j)) L(k, j) = F_.add(L(k, j), F_.mul(a[i], v));
  }
  return L;
}

Matrix FDAlgebra::right_mult_matrix(std::span<const Elem> a) const {
  Matrix R(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (auto [k, v] : product(j, i)) R(k, j) = F_.add(R(k, j), F_.mul(a[i], v));
  }
  return R;
}

std::string FDAlgebra::describe_element(std::span<const Elem> a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (a[i] != 1) os << a[i] << " ";
    os << basis_[i].label;
  }
  if (first) os << "0";
  return os.str();
}

bool is_associative(const FDAlgebra& A) {
  const std::size_t n = A.dim();
  const auto& F = A.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs(n, 0), rhs(n, 0);
        for (auto [m, c] : A.product(i, j))
          for (auto [r, d] : A.product(m, k)) lhs[r] = F.add(lhs[r], F.mul(c, d));
        for (auto [m, c] : A.product(j, k))
          for (auto [r, d] : A.product(i, m)) rhs[r] = F.add(rhs[r], F.mul(c, d));
        if (lhs != rhs) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// build_algebra

namespace {

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
};

using PathKey = std::pair<int, std::vector<int>>;  // (source, arrows)

PathKey key_of(const Path& p) { return {p.source, p.arrows}; }

// All paths of length < L, grouped by length.
std::vector<Path> paths_below(const QuiverPresentation& Q, int L) {
  std::vector<Path> out;
  std::vector<Path> layer;
  for (int v = 0; v < static_cast<int>(Q.vertices.size()); ++v) layer.push_back({v, v, {}});
  for (int len = 0; len < L; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len + 1 == L) break;
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a = 0; a < static_cast<int>(Q.arrows.size()); ++a)
        if (Q.arrows[a].source == p.target) {
          Path q = p;
          q.arrows.push_back(a);
          q.target = Q.arrows[a].target;
          next.push_back(std::move(q));
        }
    layer = std::move(next);
  }
  return out;
}

struct TruncatedQuotient {
  std::vector<Path> paths;           // all paths of length < L
  std::map<PathKey, std::size_t> index;
  std::vector<std::size_t> order;    // column position of each path (longest first)
  Matrix reduced;                    // rref of relation multiples, columns in `order` layout
  std::vector<std::size_t> pivots;   // column positions
  std::vector<std::size_t> basis;    // path indices of standard monomials, ascending length
  std::vector<long> pivot_row_of;    // per column position, row or -1
};

TruncatedQuotient truncated_quotient(const QuiverPresentation& Q, const PrimeField& F, int L) {
  TruncatedQuotient T;
  T.paths = paths_below(Q, L);
  const std::size_t n = T.paths.size();
  for (std::size_t i = 0; i < n; ++i) T.index[key_of(T.paths[i])] = i;
  // Column layout: longer paths first so they become pivots.
  std::vector<std::size_t> by_col(n);
  for (std::size_t i = 0; i < n; ++i) by_col[i] = i;
  std::stable_sort(by_col.begin(), by_col.end(),
                   [&](std::size_t a, std::size_t b) { return T.paths[a].arrows.size() > T.paths[b].arrows.size(); });
  T.order.assign(n, 0);
  for (std::size_t c = 0; c < n; ++c) T.order[by_col[c]] = c;

  std::vector<Vec> rows;
  for (const auto& rel : Q.relations) {
    int s = Q.arrows[rel.front().arrows.front()].source;
    int t = Q.arrows[rel.front().arrows.back()].target;
    std::size_t minlen = rel.front().arrows.size();
    for (const auto& term : rel) minlen = std::min(minlen, term.arrows.size());
    for (const auto& u : T.paths) {
      if (u.target != s) continue;
      for (const auto& v : T.paths) {
        if (v.source != t) continue;
        if (u.arrows.size() + v.arrows.size() + minlen >= static_cast<std::size_t>(L)) continue;
        Vec row(n, 0);
        bool any = false;
        for (const auto& term : rel) {
          if (u.arrows.size() + v.arrows.size() + term.arrows.size() >= static_cast<std::size_t>(L)) continue;
          Path w{u.source, v.target, u.arrows};
          w.arrows.insert(w.arrows.end(), term.arrows.begin(), term.arrows.end());
          w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
          std::size_t col = T.order[T.index.at(key_of(w))];
          row[col] = F.add(row[col], F.from_int(term.coeff));
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }
  Matrix R(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) std::copy(rows[r].begin(), rows[r].end(), R.row(r));
  T.pivots = rref_in_place(F, R, n);
  R = select_rows(R, [&] {
    std::vector<std::size_t> idx(T.pivots.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
  }());
  T.reduced = std::move(R);
  T.pivot_row_of.assign(n, -1);
  for (std::size_t i = 0; i < T.pivots.size(); ++i) T.pivot_row_of[T.pivots[i]] = static_cast<long>(i);
  for (std::size_t i = 0; i < n; ++i)
    if (T.pivot_row_of[T.order[i]] < 0) T.basis.push_back(i);
  std::stable_sort(T.basis.begin(), T.basis.end(), [&](std::size_t a, std::size_t b) {
    return T.paths[a].arrows.size() < T.paths[b].arrows.size();
  });
  return T;
}

}  // namespace

AlgebraPtr build_algebra(const QuiverPresentation& pres) {
  pres.validate();
  PrimeField F(pres.p);
  std::size_t prev = 0;
  int L = 1;
  TruncatedQuotient T;
  for (;; ++L) {
    if (L > pres.nilpotency_cap + 1)
      throw InfiniteDimensional("new basis elements still appear at path length " +
                                std::to_string(pres.nilpotency_cap));
    T = truncated_quotient(pres, F, L);
    if (L >= 2 && T.basis.size() == prev) break;
    prev = T.basis.size();
  }

  const std::size_t dim = T.basis.size();
  std::vector<long> basis_pos(T.paths.size(), -1);
  for (std::size_t i = 0; i < dim; ++i) basis_pos[T.basis[i]] = static_cast<long>(i);

  // Normal form of the path with index `pi` (length < L) or of a longer path (zero).
  auto normal_form = [&](const Path& w) {
    SparseVec out;
    if (w.arrows.size() >= static_cast<std::size_t>(L)) return out;
    std::size_t pi = T.index.at(key_of(w));
    if (basis_pos[pi] >= 0) {
      out.push_back({static_cast<std::uint32_t>(basis_pos[pi]), 1});
      return out;
    }
    long row = T.pivot_row_of[T.order[pi]];
    std::vector<std::pair<std::uint32_t, Elem>> tmp;
    for (std::size_t b = 0; b < dim; ++b) {
      Elem c = T.reduced(row, T.order[T.basis[b]]);
      if (c) tmp.push_back({static_cast<std::uint32_t>(b), F.neg(c)});
    }
    return tmp;
  };

  std::vector<BasisElement> basis(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const Path& p = T.paths[T.basis[i]];
    BasisElement& b = basis[i];
    b.left = p.target;
    b.right = p.source;
    b.degree = static_cast<int>(p.arrows.size());
    b.start_vertex = p.source;
    b.word = p.arrows;
    if (p.arrows.empty()) {
      b.label = "e_" + pres.vertices[p.source];
    } else {
      for (std::size_t k = 0; k < p.arrows.size(); ++k) b.label += (k ? "*" : "") + pres.arrows[p.arrows[k]].name;
    }
  }

  std::vector<SparseVec> mult(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Path& a = T.paths[T.basis[i]];
      const Path& b = T.paths[T.basis[j]];
      if (b.target != a.source) continue;  // b_i * b_j traverses b_j first
      Path w{b.source, a.target, b.arrows};
      w.arrows.insert(w.arrows.end(), a.arrows.begin(), a.arrows.end());
      mult[i * dim + j] = normal_form(w);
    }

  std::vector<std::size_t> idem(pres.vertices.size());
  for (int v = 0; v < static_cast<int>(pres.vertices.size()); ++v)
    idem[v] = static_cast<std::size_t>(basis_pos[T.index.at({v, {}})]);

  std::vector<AlgebraGenerator> gens;
  for (int a = 0; a < static_cast<int>(pres.arrows.size()); ++a) {
    auto it = T.index.find({pres.arrows[a].source, {a}});
    if (it == T.index.end() || basis_pos[it->second] < 0)
      throw MalformedPresentation("arrow '" + pres.arrows[a].name + "' is killed by the relations");
    gens.push_back({pres.arrows[a].name, static_cast<std::size_t>(basis_pos[it->second]), pres.arrows[a].source,
                    pres.arrows[a].target});
  }
  return std::make_shared<FDAlgebra>(F, pres.vertices, std::move(basis), std::move(gens), std::move(mult),
                                     std::move(idem));
}

QuiverPresentation group_algebra(std::uint32_t p, const std::vector<std::uint64_t>& cyclic_orders) {
  if (!is_prime(p)) throw UsageError("group_algebra: " + std::to_string(p) + " is not prime");
  QuiverPresentation Q;
  Q.p = p;
  Q.vertices = {"1"};
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    std::uint64_t n = cyclic_orders[i];
    while (n > 1 && n % p == 0) n /= p;
    if (cyclic_orders[i] < p || n != 1)
      throw UsageError("group_algebra: order " + std::to_string(cyclic_orders[i]) + " is not a power of " +
                       std::to_string(p));
    Q.arrows.push_back({"t" + std::to_string(i + 1), 0, 0});
  }
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    // (g - 1)^{p^k} = g^{p^k} - 1 = 0 in characteristic p
    Q.relations.push_back({PathTerm{1, std::vector<int>(cyclic_orders[i], static_cast<int>(i))}});
  }
  for (int i = 0; i < static_cast<int>(cyclic_orders.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(cyclic_orders.size()); ++j)
      Q.relations.push_back({PathTerm{1, {i, j}}, PathTerm{-1, {j, i}}});
  Q.nilpotency_cap = 1;
  for (auto o : cyclic_orders) Q.nilpotency_cap += static_cast<int>(o) - 1;
  Q.nilpotency_cap = std::max(Q.nilpotency_cap, 30);
  return Q;
}

QuiverPresentation truncated_polynomial(std::uint32_t p, const std::vector<int>& exponents) {
  QuiverPresentation Q;
  Q.p = p;
  Q.vertices = {"1"};
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 2) throw UsageError("truncated_polynomial: exponents must be at least 2");
    Q.arrows.push_back({"x" + std::to_string(i + 1), 0, 0});
    Q.relations.push_back({PathTerm{1, std::vector<int>(exponents[i], static_cast<int>(i))}});
  }
  for (int i = 0; i < static_cast<int>(exponents.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(exponents.size()); ++j)
      Q.relations.push_back({PathTerm{1, {i, j}}, PathTerm{-1, {j, i}}});
  return Q;
}

// ---------------------------------------------------------------------------
// Enveloping algebra

std::size_t EnvelopingInfo::pair(std::size_t x, std::size_t y) const { return x * base->dim() + y; }

std::pair<std::size_t, std::size_t> EnvelopingInfo::unpair(std::size_t z) const {
  return {z / base->dim(), z % base->dim()};
}

int EnvelopingInfo::vertex_pair(int i, int j) const { return i * base->num_vertices() + j; }

std::pair<int, int> EnvelopingInfo::unvertex(int v) const {
  return {v / base->num_vertices(), v % base->num_vertices()};
}

int EnvelopingInfo::left_generator(int arrow, int j) const { return arrow * base->num_vertices() + j; }

int EnvelopingInfo::right_generator(int i, int arrow) const {
  const int na = static_cast<int>(base->generators().size());
  return na * base->num_vertices() + arrow * base->num_vertices() + i;
}

AlgebraPtr enveloping(const AlgebraPtr& A) {
  const std::size_t d = A->dim();
  const int nv = A->num_vertices();
  const int na = static_cast<int>(A->generators().size());
  const auto& F = A->field();
  EnvelopingInfo info{A};

  std::vector<std::string> vnames;
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) vnames.push_back(A->vertex_names()[i] + "|" + A->vertex_names()[j]);

  std::vector<AlgebraGenerator> gens(static_cast<std::size_t>(2 * na * nv));
  for (int a = 0; a < na; ++a) {
    const auto& g = A->generators()[a];
    for (int j = 0; j < nv; ++j)
      gens[info.left_generator(a, j)] = {g.name + "|e_" + A->vertex_names()[j],
                                         info.pair(g.element, A->idempotent(j)), info.vertex_pair(g.source, j),
                                         info.vertex_pair(g.target, j)};
    for (int i = 0; i < nv; ++i)
      gens[info.right_generator(i, a)] = {"e_" + A->vertex_names()[i] + "|" + g.name,
                                          info.pair(A->idempotent(i), g.element), info.vertex_pair(i, g.target),
                                          info.vertex_pair(i, g.source)};
  }

  std::vector<BasisElement> basis(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const auto& bx = A->basis(x);
      const auto& by = A->basis(y);
      BasisElement& b = basis[info.pair(x, y)];
      b.label = bx.label + "|" + by.label;
      b.left = info.vertex_pair(bx.left, by.right);
      b.right = info.vertex_pair(bx.right, by.left);
      b.degree = bx.degree + by.degree;
      b.start_vertex = info.vertex_pair(bx.right, by.left);
      for (auto it = by.word.rbegin(); it != by.word.rend(); ++it) b.word.push_back(info.right_generator(bx.right, *it));
      for (int a : bx.word) b.word.push_back(info.left_generator(a, by.right));
    }

  // (a⊗b°)(c⊗d°) = ac ⊗ (db)°
  std::vector<SparseVec> mult(d * d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const auto& ac = A->product(a, c);
        if (ac.empty()) continue;
        for (std::size_t e = 0; e < d; ++e) {
          const auto& eb = A->product(e, b);
          if (eb.empty()) continue;
          SparseVec out;
          for (auto [u, cu] : ac)
            for (auto [v, cv] : eb) out.push_back({static_cast<std::uint32_t>(info.pair(u, v)), F.mul(cu, cv)});
          mult[info.pair(a, b) * d * d + info.pair(c, e)] = std::move(out);
        }
      }

  std::vector<std::size_t> idem(static_cast<std::size_t>(nv * nv));
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) idem[info.vertex_pair(i, j)] = info.pair(A->idempotent(i), A->idempotent(j));

  auto env = std::make_shared<FDAlgebra>(F, std::move(vnames), std::move(basis), std::move(gens), std::move(mult),
                                         std::move(idem));
  env->set_enveloping_info(info);
  return env;
}

}  // namespace svar
