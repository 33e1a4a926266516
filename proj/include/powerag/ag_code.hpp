#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "powerag/rr_space.hpp"

namespace powerag {

// Evaluation place selection for D = P_1 + ... + P_n.
struct PlaceSelection {
  enum class Kind { all, first_n, explicit_list };
  Kind kind = Kind::all;
  int n = 0;
  std::vector<Place> places;

  static PlaceSelection all() { return {}; }
  static PlaceSelection first_n(int n) { return {Kind::first_n, n, {}}; }
  static PlaceSelection explicit_list(std::vector<Place> p) {
    return {Kind::explicit_list, 0, std::move(p)};
  }
};

// One-point evaluation code C(D, gamma*Pinf): codewords are (f(P_1),...,f(P_n))
// for f with pole order at most gamma at infinity.
struct CodeSpec {
  std::shared_ptr<const Backend> backend;
  std::vector<Place> eval_places;
  int gamma = 0;
  int n = 0;
  int k = 0;
  int dstar = 0;         // designed minimum distance n - gamma
  RRBasis message_basis; // basis of L(gamma*Pinf)
  Matrix generator;      // k x n, rank k

  // Interpolation data: basis of L((gamma+rho)*Pinf) with
  // rho = n - gamma + 2g - 1, and its n x l evaluation matrix (rank n).
  int rho = 0;
  RRBasis interp_basis;
  Matrix interp_matrix;

  const Field& field() const { return backend->field(); }
  bool eval_places_are_all() const;
};

// Requires 2g - 2 < gamma < n.
std::shared_ptr<const CodeSpec> code_make(std::shared_ptr<const Backend> backend,
                                          const PlaceSelection& selection, int gamma);

std::vector<std::uint16_t> encode(const CodeSpec& code, std::span<const std::uint16_t> msg);

}  // namespace powerag
