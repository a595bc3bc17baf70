#include "gbh/homology.hpp"

#include <algorithm>
#include <cctype>

namespace gbh {

FieldTag parse_field(const std::string& s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "q" || t == "rational" || t == "rationals") return FieldTag::Q();
  if (t.size() > 1 && t[0] == 'f') {
    try {
      return FieldTag::Fp(std::stoul(t.substr(1)));
    } catch (const std::exception&) {
      fail(Errc::BadField, "cannot parse field '" + s + "'");
    }
  }
  fail(Errc::BadField, "field must be 'q' or 'f<prime>'");
}

AbelianGroup homology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_out.cols() != d_in.rows())
    fail(Errc::DimensionMismatch, "boundary maps are not composable");
  if (!d_out.multiply(d_in).is_zero())
    fail(Errc::NotAComplex, "d_out * d_in is nonzero");

  // im(d_in) sits inside the saturated lattice ker(d_out), so the torsion
  // of the quotient is read off the invariant factors of d_in alone.
  int rank_out = integer_rank(d_out);
  std::vector<mpz_class> factors = invariant_factors(d_in);
  long kernel_rank = d_in.rows() - rank_out;
  long free_rank = kernel_rank - static_cast<long>(factors.size());
  std::vector<mpz_class> torsion;
  for (auto& f : factors)
    if (f > 1) torsion.push_back(std::move(f));
  return make_abelian(free_rank, std::move(torsion));
}

AbelianGroup configuration_homology(const SwComplex& complex, int q, int n) {
  return homology_at(complex.boundary(q + 1, n), complex.boundary(q, n));
}

AbelianGroup configuration_homology(const Graph& g, int q, int n, bool reduced) {
  SwComplex complex(g, reduced);
  return configuration_homology(complex, q, n);
}

namespace {

template <typename F>
long chain_betti(const SwComplex& complex, int q, int n, const F& field) {
  const IntegerMatrix& d_q = complex.boundary(q, n);
  const IntegerMatrix& d_q1 = complex.boundary(q + 1, n);
  int dim = d_q.cols();
  if (dim == 0) return 0;
  int rank_out = field_rank(DenseMatrix<F>::from_integer(d_q, field), field);
  int rank_in = field_rank(DenseMatrix<F>::from_integer(d_q1, field), field);
  return static_cast<long>(dim - rank_out) - rank_in;
}

}  // namespace

long field_betti(const SwComplex& complex, int q, int n, const FieldTag& field) {
  if (field.rational) return chain_betti(complex, q, n, RationalField{});
  return chain_betti(complex, q, n, PrimeField(field.prime));
}

long field_betti(const Graph& g, int q, int n, bool reduced, const FieldTag& field) {
  SwComplex complex(g, reduced);
  return field_betti(complex, q, n, field);
}

}  // namespace gbh
