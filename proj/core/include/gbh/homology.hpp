#pragma once

#include "gbh/abelian.hpp"
#include "gbh/field.hpp"
#include "gbh/swiatkowski.hpp"

namespace gbh {

// Coefficient choice for field computations; Q by default.
struct FieldTag {
  bool rational = true;
  unsigned long prime = 0;

  static FieldTag Q() { return {}; }
  static FieldTag Fp(unsigned long p) {
    if (!is_prime(p) || p >= (1ul << 31))
      fail(Errc::BadField, "field order must be a prime below 2^31");
    return {false, p};
  }
  std::string label() const { return rational ? "Q" : "F" + std::to_string(prime); }
};

FieldTag parse_field(const std::string& s);  // "q", "f2", "f3", ...

// ker(d_out)/im(d_in) in canonical form. Requires d_out * d_in = 0.
AbelianGroup homology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out);

// H_q(UF_n(G)) through the Swiatkowski complex of the graph.
AbelianGroup configuration_homology(const SwComplex& complex, int q, int n);
AbelianGroup configuration_homology(const Graph& g, int q, int n, bool reduced);

// dim_k H_q(UF_n(G); k) by Gaussian elimination over the field
long field_betti(const SwComplex& complex, int q, int n, const FieldTag& field);
long field_betti(const Graph& g, int q, int n, bool reduced, const FieldTag& field);

}  // namespace gbh
