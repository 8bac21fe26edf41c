#include "ptcomp/proportion.hpp"

#include "ptcomp/error.hpp"

namespace ptcomp {

ProportionFunction::ProportionFunction(std::vector<Rational> props) : props_(std::move(props)) {
  if (props_.empty()) throw InvalidInput("proportion list is empty");
  const Rational zero(0), one(1);
  for (std::size_t i = 0; i < props_.size(); ++i) {
    if (props_[i] < zero || props_[i] > one)
      throw InvalidInput("p(" + std::to_string(i + 1) + ") = " + props_[i].to_string() + " is outside [0,1]");
    if (i > 0 && props_[i] < props_[i - 1])
      throw InvalidInput("proportions must be non-decreasing: p(" + std::to_string(i) + ") = " +
                         props_[i - 1].to_string() + " > p(" + std::to_string(i + 1) + ") = " + props_[i].to_string());
  }
}

ProportionFunction ProportionFunction::parse(std::string_view csv) {
  std::vector<Rational> props;
  while (true) {
    auto comma = csv.find(',');
    props.push_back(Rational::parse(csv.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return ProportionFunction(std::move(props));
}

ProportionFunction ProportionFunction::spanner(unsigned t) {
  if (t == 0) throw InvalidInput("t must be positive");
  std::vector<Rational> props(t, Rational(0));
  props.back() = Rational(1);
  return ProportionFunction(std::move(props));
}

std::string ProportionFunction::to_string() const {
  std::string out;
  for (const auto& p : props_) {
    if (!out.empty()) out += ',';
    out += p.to_string();
  }
  return out;
}

}  // namespace ptcomp
