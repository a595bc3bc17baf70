#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gbh {

// Finitely generated abelian group in canonical form: free rank plus a
// divisibility chain of torsion coefficients d_1 | d_2 | ..., each >= 2.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<mpz_class> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;

  std::string to_string() const;
};

AbelianGroup make_abelian(long free_rank, std::vector<mpz_class> torsion);

}  // namespace gbh
