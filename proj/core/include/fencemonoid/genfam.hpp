#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "fencemonoid/pinj.hpp"

namespace fencemonoid {

enum class Family { Id, Epsilon, Sigma1, Sigma2, Gamma, Delta, Beta };

// A named transformation; text forms `id`, `eps:i`, `sig1`, `sig2`, `gam:i`,
// `del:i`, `beta:i,j`.
struct GeneratorSpec {
  Family family = Family::Id;
  int i = 0;
  int j = 0;

  static GeneratorSpec id() { return {Family::Id, 0, 0}; }
  static GeneratorSpec eps(int i) { return {Family::Epsilon, i, 0}; }
  static GeneratorSpec sig1() { return {Family::Sigma1, 0, 0}; }
  static GeneratorSpec sig2() { return {Family::Sigma2, 0, 0}; }
  static GeneratorSpec gam(int i) { return {Family::Gamma, i, 0}; }
  static GeneratorSpec del(int i) { return {Family::Delta, i, 0}; }
  static GeneratorSpec beta(int i, int j) { return {Family::Beta, i, j}; }

  friend auto operator<=>(const GeneratorSpec&, const GeneratorSpec&) = default;
};

std::string to_string(const GeneratorSpec& spec);
GeneratorSpec parse_generator_spec(std::string_view text);

// Index constraints for degree n: Epsilon 1 <= i <= n; Gamma even i,
// 4 <= i <= n; Delta odd i, 1 <= i <= n - 3; Beta 1 <= i < j <= n with
// i = j mod 2; Sigma needs even n.
bool valid_for(int n, const GeneratorSpec& spec) noexcept;

// Throws BadIndex, or OddAmbient for sigma on odd n.
//
//   eps:i     identity on {1..n} \ {i}
//   sig1      1 -> n, x -> x - 2 for 3 <= x <= n
//   sig2      inverse of sig1
//   gam:i     x -> i - x below i, i dropped, fixed above
//   del:i     fixed below i, i dropped, x -> n + i + 1 - x above
//   beta:i,j  i and j dropped, x -> i + j - x strictly between, fixed outside
PartialInjection named(int n, const GeneratorSpec& spec);

// {a in IF_n : rank a >= n - 2}, sorted. Built from the at most three
// domain blocks and their possible placements, not by filtering I_n.
std::vector<PartialInjection> set_J(int n);

// {id, sig1, sig2} + {gam:i : i even, 4 <= i <= n} + {del:i : i odd,
// 1 <= i <= n - 3}; n + 1 elements. Throws OddAmbient.
std::vector<GeneratorSpec> set_G_specs(int n);
std::vector<PartialInjection> set_G(int n);

// Every element of IF_n with the given domain and image (both of the same
// size), by matching blocks to blocks. Sorted.
std::vector<PartialInjection> if_maps_between(int n, PointSet domain, PointSet image);

}  // namespace fencemonoid
