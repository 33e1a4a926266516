#include "powerag/rr_space.hpp"

#include <algorithm>
#include <set>

#include "powerag/error.hpp"

namespace powerag {

namespace {

void validate(const Backend& b, const SpaceDescriptor& sp) {
  std::set<std::pair<int, int>> seen;
  for (const auto& c : sp.constraints) {
    if (c.place.infinite) throw Error("rr_space: constraint places must be affine");
    if (c.multiplicity < 1) throw Error("rr_space: constraint multiplicity must be >= 1");
    if (!b.on_curve(c.place.x0, c.place.y0)) throw Error("rr_space: constraint place off curve");
    if (!seen.insert({c.place.x0, c.place.y0}).second)
      throw Error("rr_space: repeated constraint place");
  }
}

std::vector<FunctionElement> monomials_up_to(const Backend& b, int a) {
  std::vector<FunctionElement> out;
  for (int w = 0; w <= a; ++w)
    if (b.pole_order_exists(w)) {
      auto [i, j] = b.monomial_exponents(w);
      out.push_back(b.monomial(i, j));
    }
  return out;
}

// Rows = vanishing functionals (local-expansion coefficients 0..m-1 at each
// constrained place), columns = the unconstrained monomial basis.
Matrix functional_matrix(const Backend& b, const SpaceDescriptor& sp,
                         const std::vector<FunctionElement>& mono) {
  int rows = 0;
  for (const auto& c : sp.constraints) rows += c.multiplicity;
  Matrix f(b.field_ptr(), rows, static_cast<int>(mono.size()));
  for (std::size_t col = 0; col < mono.size(); ++col) {
    int r = 0;
    for (const auto& c : sp.constraints) {
      auto exp = b.local_expansion(mono[col], c.place, c.multiplicity);
      for (int k = 0; k < c.multiplicity; ++k) f(r++, static_cast<int>(col)) = exp[k];
    }
  }
  return f;
}

}  // namespace

RRBasis rr_basis(const Backend& backend, const SpaceDescriptor& space) {
  validate(backend, space);
  RRBasis out{space, {}};
  if (space.pole_bound < 0) return out;
  std::vector<FunctionElement> mono = monomials_up_to(backend, space.pole_bound);
  if (space.constraints.empty()) {
    out.elements = std::move(mono);
    return out;
  }
  Matrix f = functional_matrix(backend, space, mono);
  Matrix ker = right_kernel_basis(f);
  for (int v = 0; v < ker.cols(); ++v) {
    FunctionElement h = backend.zero();
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (ker(static_cast<int>(i), v))
        h = backend.add(h, backend.scale(mono[i], ker(static_cast<int>(i), v)));
    out.elements.push_back(std::move(h));
  }
  return out;
}

int rr_dimension(const Backend& backend, const SpaceDescriptor& space) {
  validate(backend, space);
  const int a = space.pole_bound;
  if (space.constraints.empty()) return backend.semigroup_size_up_to(a);
  const int deg = space.degree();
  if (deg < 0) return 0;
  const int g = backend.genus();
  if (deg >= 2 * g - 1) return deg - g + 1;

  // Uniform multiplicity m over every affine place: x^Q - x (Q = size of the
  // constant field) has divisor D_full - n*Pinf, so multiplication by its
  // m-th power shifts the space to L((a - m*n)*Pinf).
  const long long n_full = backend.affine_place_count();
  if (static_cast<long long>(space.constraints.size()) == n_full) {
    const int m = space.constraints[0].multiplicity;
    bool uniform = true;
    for (const auto& c : space.constraints)
      if (c.multiplicity != m) {
        uniform = false;
        break;
      }
    if (uniform)
      return backend.semigroup_size_up_to(a - static_cast<int>(m * n_full));
  }

  if (a < 0) return 0;
  std::vector<FunctionElement> mono = monomials_up_to(backend, a);
  Matrix f = functional_matrix(backend, space, mono);
  return static_cast<int>(mono.size()) - rank(f);
}

std::vector<std::uint16_t> rr_coords(const Backend& backend, const RRBasis& basis,
                                     const FunctionElement& h) {
  const int dim = basis.dim();
  if (dim == 0) {
    if (!h.is_zero()) throw MembershipError("rr_space: nonzero function in the zero space");
    return {};
  }

  // Monomial-prefix fast path: every basis element a single term with
  // coefficient 1.
  bool plain = true;
  for (const auto& e : basis.elements)
    if (e.terms().size() != 1 || e.terms().begin()->second != 1) {
      plain = false;
      break;
    }
  if (plain) {
    std::map<int, int> index;
    for (int i = 0; i < dim; ++i) index[basis.elements[i].terms().begin()->first] = i;
    std::vector<std::uint16_t> out(dim, 0);
    for (const auto& [w, c] : h.terms()) {
      auto it = index.find(w);
      if (it == index.end()) throw MembershipError("rr_space: function outside the space");
      out[it->second] = c;
    }
    return out;
  }

  // General case: solve over the pole orders appearing anywhere.
  std::set<int> orders;
  for (const auto& e : basis.elements)
    for (const auto& [w, c] : e.terms()) orders.insert(w);
  for (const auto& [w, c] : h.terms()) orders.insert(w);
  std::map<int, int> row_of;
  int r = 0;
  for (int w : orders) row_of[w] = r++;
  Matrix m(backend.field_ptr(), r, dim);
  std::vector<std::uint16_t> rhs(r, 0);
  for (int i = 0; i < dim; ++i)
    for (const auto& [w, c] : basis.elements[i].terms()) m(row_of[w], i) = c;
  for (const auto& [w, c] : h.terms()) rhs[row_of[w]] = c;
  auto sol = solve_any(m, rhs);
  if (!sol) throw MembershipError("rr_space: function outside the space");
  return *sol;
}

Matrix mult_matrix(const Backend& backend, const FunctionElement& p, const RRBasis& target,
                   const RRBasis& source) {
  Matrix out(backend.field_ptr(), target.dim(), source.dim());
  for (int col = 0; col < source.dim(); ++col) {
    std::vector<std::uint16_t> coords;
    try {
      coords = rr_coords(backend, target, backend.multiply(p, source.elements[col]));
    } catch (const MembershipError&) {
      throw MembershipError("rr_space: product escapes the target space at column " +
                            std::to_string(col));
    }
    for (int row = 0; row < target.dim(); ++row) out(row, col) = coords[row];
  }
  return out;
}

Matrix mult_matrix(const Backend& backend, const FunctionElement& p, const SpaceDescriptor& target,
                   const SpaceDescriptor& source) {
  return mult_matrix(backend, p, rr_basis(backend, target), rr_basis(backend, source));
}

}  // namespace powerag
