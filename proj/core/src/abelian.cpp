#include "gbh/abelian.hpp"

#include <algorithm>

#include "gbh/error.hpp"

namespace gbh {

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string out;
  if (free_rank > 0) out = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out;
}

AbelianGroup make_abelian(long free_rank, std::vector<mpz_class> torsion) {
  if (free_rank < 0) fail(Errc::DimensionMismatch, "negative free rank");
  AbelianGroup g;
  g.free_rank = free_rank;
  std::erase_if(torsion, [](const mpz_class& d) { return d == 1; });
  for (const auto& d : torsion)
    if (d < 2) fail(Errc::DimensionMismatch, "torsion coefficient below 2");
  for (size_t i = 1; i < torsion.size(); ++i)
    if (torsion[i] % torsion[i - 1] != 0)
      fail(Errc::DimensionMismatch, "torsion coefficients do not form a divisibility chain");
  g.torsion = std::move(torsion);
  return g;
}

}  // namespace gbh
