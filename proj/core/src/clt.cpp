#include "opmono/clt.hpp"

#include <stdexcept>
#include <vector>

#include "opmono/cumulants.hpp"
#include "opmono/moment_oracle.hpp"
#include "opmono/partitions.hpp"

namespace opmono {

void validate_clt_input(const MomentSystem& x) {
  if (x.components() != 1) throw std::invalid_argument("clt: the variable must have exactly one component");
  if (x.degree_cap() < 1) throw std::invalid_argument("clt: degree cap must be at least 1");
  // phi(b X) = 0 for all b iff it vanishes on matrix units.
  const std::vector<int> word{0};
  for (const auto& tuple : basis_tuples(x.dim(), 1)) {
    if (!x(word, tuple).is_zero()) throw std::domain_error("clt: the variable is not centered (phi(X) != 0)");
  }
}

BMatrix clt_limit(const MomentSystem& x, std::span<const BMatrix> args) {
  validate_clt_input(x);
  const std::size_t n = args.size();
  const std::vector<int> idx(n, 0);
  check_call(1, x.dim(), x.degree_cap(), idx, args);
  if (n == 0) return BMatrix::identity(x.dim());
  if (n % 2 == 1) return BMatrix::zero(x.dim());
  const CumulantSystem kappa = cumulant(x);
  const auto& pairs = monotone_weights(static_cast<int>(n), true);
  BMatrix total = BMatrix::zero(x.dim());
  for (std::size_t s = 0; s < pairs.partitions.size(); ++s) {
    total.add_scaled(pairs.weights[s], functional_pi(kappa.evaluator(), pairs.partitions[s].blocks(), idx, args));
  }
  return total;
}

BMatrix clt_oracle(const MomentSystem& x, std::span<const BMatrix> args) {
  validate_clt_input(x);
  const std::size_t n = args.size();
  const std::vector<int> idx(n, 0);
  check_call(1, x.dim(), x.degree_cap(), idx, args);
  if (n == 0) return BMatrix::identity(x.dim());
  const MatrixPolynomial p = dot_polynomial(x, idx, args);
  if (p.degree() > static_cast<int>(n / 2)) {
    throw std::logic_error("clt_oracle: dot polynomial has degree above n/2 for a centered variable");
  }
  if (n % 2 == 1) return BMatrix::zero(x.dim());
  return p.coefficient(n / 2);
}

}  // namespace opmono
