#include "ibb/abelian.hpp"

#include <sstream>

namespace ibb {

AbelianImage ab_add(const AbelianImage& x, const AbelianImage& y) {
  if (x.is_absorbed || y.is_absorbed) return AbelianImage::absorbed();
  return AbelianImage::free(x.tau_deg + y.tau_deg, x.sigma_deg + y.sigma_deg);
}

AbelianImage abelianize(const Word& w) {
  std::int64_t tau_deg = 0;
  std::int64_t sigma_deg = 0;
  for (const auto& g : w.letters()) {
    switch (g.kind) {
      case Gen::Eps:
        return AbelianImage::absorbed();
      case Gen::Tau:
        ++tau_deg;
        break;
      case Gen::TauInv:
        --tau_deg;
        break;
      case Gen::Sigma:
        ++sigma_deg;
        break;
      case Gen::SigmaInv:
        --sigma_deg;
        break;
    }
  }
  return AbelianImage::free(tau_deg, sigma_deg);
}

AbelianImageMod2 to_mod2(const AbelianImage& x) {
  if (x.is_absorbed) return AbelianImageMod2{true, 0, 0};
  auto parity = [](std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); };
  return AbelianImageMod2{false, parity(x.tau_deg), parity(x.sigma_deg)};
}

std::string to_string(const AbelianImage& x) {
  if (x.is_absorbed) return "eps";
  std::ostringstream os;
  os << '(' << x.tau_deg << ", " << x.sigma_deg << ')';
  return os.str();
}

std::string to_string(const AbelianImageMod2& x) {
  if (x.is_absorbed) return "eps";
  std::ostringstream os;
  os << '(' << x.tau_parity << ", " << x.sigma_parity << ')';
  return os.str();
}

}  // namespace ibb
