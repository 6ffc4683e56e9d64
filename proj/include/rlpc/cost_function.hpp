#pragma once

#include <string>
#include <vector>

#include "rlpc/code_core.hpp"

namespace rlpc {

enum class CostKind { Identity, Exponential, Table };

// A strictly increasing phi for the quasiarithmetic objective
// phi^-1(sum_i p_i phi(l_i)). Identity phi gives expected length.
class CostFunction {
 public:
  CostFunction() = default;  // identity

  static CostFunction identity() { return {}; }
  // phi(l) = 2^(t*l); throws BadParameter unless t > 0 and finite.
  static CostFunction exponential(double t);
  // phi(l) = values[l-1] for integer l in [1, values.size()], phi(0) = 0, linear
  // in between. Throws NotIncreasing or BadParameter (empty, nonpositive).
  static CostFunction table(std::vector<double> values);

  CostKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return t_; }
  const std::vector<double>& table_values() const noexcept { return table_; }
  std::string name() const;

  double phi(double length) const;
  double phi_inverse(double value) const;
  double phi_at_zero() const { return phi(0.0); }

  // Spot-checks monotonicity and the inverse round trip on every length of ls.
  // Throws BadParameter if ls reaches beyond a table, NotIncreasing otherwise.
  void validate_for(const LengthSet& ls) const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  CostKind kind_ = CostKind::Identity;
  double t_ = 0.0;
  std::vector<double> table_;
};

// Parses "identity", "exp:<t>", or "table:v1,v2,...".
CostFunction parse_cost_function(const std::string& spec);

}  // namespace rlpc
