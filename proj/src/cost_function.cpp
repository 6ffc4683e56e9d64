#include "rlpc/cost_function.hpp"

#include <cmath>
#include <sstream>

#include "rlpc/error.hpp"

namespace rlpc {

CostFunction CostFunction::exponential(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::BadParameter, "exponential cost needs t > 0");
  CostFunction f;
  f.kind_ = CostKind::Exponential;
  f.t_ = t;
  return f;
}

CostFunction CostFunction::table(std::vector<double> values) {
  if (values.empty()) fail(ErrorKind::BadParameter, "cost table is empty");
  if (!(values.front() > 0.0)) fail(ErrorKind::BadParameter, "cost table values must be positive (phi(0) = 0)");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) fail(ErrorKind::BadParameter, "cost table value is not finite");
    if (i > 0 && !(values[i] > values[i - 1]))
      fail(ErrorKind::NotIncreasing, "cost table is not strictly increasing at length " + std::to_string(i + 1));
  }
  CostFunction f;
  f.kind_ = CostKind::Table;
  f.table_ = std::move(values);
  return f;
}

std::string CostFunction::name() const {
  std::ostringstream out;
  switch (kind_) {
    case CostKind::Identity: return "identity";
    case CostKind::Exponential: out << "exp:" << t_; return out.str();
    case CostKind::Table:
      out << "table:";
      for (std::size_t i = 0; i < table_.size(); ++i) out << (i ? "," : "") << table_[i];
      return out.str();
  }
  return "unknown";
}

double CostFunction::phi(double length) const {
  switch (kind_) {
    case CostKind::Identity: return length;
    case CostKind::Exponential: return std::exp2(t_ * length);
    case CostKind::Table: {
      if (length <= 0.0) return 0.0;
      const double top = static_cast<double>(table_.size());
      if (length >= top) return table_.back();
      const auto lo = static_cast<std::size_t>(std::floor(length));
      const double frac = length - static_cast<double>(lo);
      const double a = lo == 0 ? 0.0 : table_[lo - 1];
      if (frac == 0.0) return a;
      return a + frac * (table_[lo] - a);
    }
  }
  return length;
}

double CostFunction::phi_inverse(double value) const {
  switch (kind_) {
    case CostKind::Identity: return value;
    case CostKind::Exponential: return std::log2(value) / t_;
    case CostKind::Table: {
      if (value <= 0.0) return 0.0;
      double prev = 0.0;
      for (std::size_t i = 0; i < table_.size(); ++i) {
        if (value <= table_[i]) {
          if (value == table_[i]) return static_cast<double>(i + 1);
          return static_cast<double>(i) + (value - prev) / (table_[i] - prev);
        }
        prev = table_[i];
      }
      return static_cast<double>(table_.size());
    }
  }
  return value;
}

void CostFunction::validate_for(const LengthSet& ls) const {
  if (kind_ == CostKind::Table && ls.back() > table_.size())
    fail(ErrorKind::BadParameter, "cost table covers lengths up to " + std::to_string(table_.size()) +
                                      ", length set needs " + std::to_string(ls.back()));
  double prev = phi_at_zero();
  for (unsigned lambda : ls.values()) {
    const double v = phi(lambda);
    if (!std::isfinite(v)) fail(ErrorKind::BadParameter, "phi(" + std::to_string(lambda) + ") overflows");
    if (!(v > prev)) fail(ErrorKind::NotIncreasing, "phi is not increasing at length " + std::to_string(lambda));
    if (std::abs(phi_inverse(v) - lambda) > 1e-9)
      fail(ErrorKind::BadParameter, "phi inverse does not round-trip at length " + std::to_string(lambda));
    prev = v;
  }
}

CostFunction parse_cost_function(const std::string& spec) {
  if (spec.empty() || spec == "identity") return CostFunction::identity();
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) fail(ErrorKind::BadParameter, "bad number '" + s + "' in cost spec");
    return v;
  };
  if (spec.rfind("exp:", 0) == 0) return CostFunction::exponential(number(spec.substr(4)));
  if (spec.rfind("table:", 0) == 0) {
    std::vector<double> values;
    std::stringstream list(spec.substr(6));
    std::string item;
    while (std::getline(list, item, ',')) values.push_back(number(item));
    return CostFunction::table(std::move(values));
  }
  fail(ErrorKind::BadParameter, "unknown cost function '" + spec + "'");
}

}  // namespace rlpc
