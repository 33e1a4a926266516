#include "powerag/ag_code.hpp"

#include <set>

#include "powerag/error.hpp"

namespace powerag {

bool CodeSpec::eval_places_are_all() const {
  return static_cast<long long>(n) == backend->affine_place_count();
}

std::shared_ptr<const CodeSpec> code_make(std::shared_ptr<const Backend> backend,
                                          const PlaceSelection& selection, int gamma) {
  if (!backend) throw Error("ag_code: null backend");
  auto spec = std::make_shared<CodeSpec>();
  spec->backend = backend;

  switch (selection.kind) {
    case PlaceSelection::Kind::all:
      spec->eval_places = backend->places();
      break;
    case PlaceSelection::Kind::first_n: {
      auto all = backend->places();
      if (selection.n < 1 || selection.n > static_cast<int>(all.size()))
        throw Error("ag_code: place count out of range");
      spec->eval_places.assign(all.begin(), all.begin() + selection.n);
      break;
    }
    case PlaceSelection::Kind::explicit_list: {
      std::set<std::pair<int, int>> seen;
      for (const auto& p : selection.places) {
        if (p.infinite) throw Error("ag_code: evaluation places must be affine");
        if (!backend->on_curve(p.x0, p.y0)) throw Error("ag_code: evaluation place off curve");
        if (!seen.insert({p.x0, p.y0}).second) throw Error("ag_code: repeated evaluation place");
      }
      spec->eval_places = selection.places;
      break;
    }
  }

  spec->n = static_cast<int>(spec->eval_places.size());
  const int g = backend->genus();
  if (gamma <= 2 * g - 2 || gamma >= spec->n)
    throw Error("ag_code: gamma must satisfy 2g - 2 < gamma < n");
  spec->gamma = gamma;
  spec->dstar = spec->n - gamma;
  spec->message_basis = rr_basis(*backend, SpaceDescriptor::one_point(gamma));
  spec->k = spec->message_basis.dim();

  spec->generator = Matrix(backend->field_ptr(), spec->k, spec->n);
  for (int i = 0; i < spec->k; ++i)
    for (int j = 0; j < spec->n; ++j)
      spec->generator(i, j) = backend->evaluate(spec->message_basis.elements[i],
                                                spec->eval_places[j]);
  if (rank(spec->generator) != spec->k) throw Error("ag_code: generator matrix rank deficient");

  spec->rho = spec->n - gamma + 2 * g - 1;
  spec->interp_basis = rr_basis(*backend, SpaceDescriptor::one_point(gamma + spec->rho));
  spec->interp_matrix = Matrix(backend->field_ptr(), spec->n, spec->interp_basis.dim());
  for (int i = 0; i < spec->n; ++i)
    for (int j = 0; j < spec->interp_basis.dim(); ++j)
      spec->interp_matrix(i, j) = backend->evaluate(spec->interp_basis.elements[j],
                                                    spec->eval_places[i]);
  if (rank(spec->interp_matrix) != spec->n)
    throw Error("ag_code: interpolation matrix rank deficient");

  return spec;
}

std::vector<std::uint16_t> encode(const CodeSpec& code, std::span<const std::uint16_t> msg) {
  if (static_cast<int>(msg.size()) != code.k) throw Error("ag_code: message length mismatch");
  const Field& f = code.field();
  std::vector<std::uint16_t> c(code.n, 0);
  for (int i = 0; i < code.k; ++i) {
    if (!msg[i]) continue;
    if (msg[i] >= f.size()) throw Error("ag_code: message symbol outside field");
    row_addmul(f, c.data(), code.generator.row(i), msg[i], code.n);
  }
  return c;
}

}  // namespace powerag
