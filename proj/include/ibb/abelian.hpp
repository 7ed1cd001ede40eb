#pragma once

#include <cstdint>
#include <string>

#include "ibb/word.hpp"

namespace ibb {

/// An element of Ab(IBB_n) = (E + Z^2) / (eps + tau = eps, eps + sigma = eps)
/// with E = {1, eps}: either the absorbing class of eps, or a free pair of
/// integer degrees. Written additively, matching the defining relations.
struct AbelianImage {
  static AbelianImage absorbed() { return AbelianImage{true, 0, 0}; }
  static AbelianImage free(std::int64_t tau_deg, std::int64_t sigma_deg) {
    return AbelianImage{false, tau_deg, sigma_deg};
  }

  bool is_absorbed;
  std::int64_t tau_deg;    // meaningless when absorbed
  std::int64_t sigma_deg;  // meaningless when absorbed

  friend bool operator==(const AbelianImage& a, const AbelianImage& b) {
    if (a.is_absorbed || b.is_absorbed) return a.is_absorbed == b.is_absorbed;
    return a.tau_deg == b.tau_deg && a.sigma_deg == b.sigma_deg;
  }
};

// Image in Ab(I(B_n)): the same with degrees taken mod 2.
struct AbelianImageMod2 {
  bool is_absorbed;
  int tau_parity;
  int sigma_parity;

  friend bool operator==(const AbelianImageMod2& a, const AbelianImageMod2& b) {
    if (a.is_absorbed || b.is_absorbed) return a.is_absorbed == b.is_absorbed;
    return a.tau_parity == b.tau_parity && a.sigma_parity == b.sigma_parity;
  }
};

/// Free values add componentwise; anything involving the eps class is
/// absorbed.
AbelianImage ab_add(const AbelianImage& x, const AbelianImage& y);

/// eps_i letters map to eps, tau to (1,0), every sigma_i to (0,1); inverse
/// letters contribute -1. Any eps letter absorbs the whole word.
AbelianImage abelianize(const Word& w);

AbelianImageMod2 to_mod2(const AbelianImage& x);

// `eps` or `(tau_deg, sigma_deg)`.
std::string to_string(const AbelianImage& x);
std::string to_string(const AbelianImageMod2& x);

}  // namespace ibb
