#include "qwalk/output.hpp"

#include <cstdio>
#include <ostream>

namespace qwalk {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv_header(std::ostream& os) { os << "coin,x,re,im,prob\n"; }

void write_csv_rows(std::ostream& os, const StateVector& state) {
  for (const auto& e : state.entries()) {
    if (e.amp.real() == 0.0 && e.amp.imag() == 0.0) continue;
    os << e.coin << ',' << e.x << ',' << format_g17(e.amp.real()) << ',' << format_g17(e.amp.imag())
       << ',' << format_g17(std::norm(e.amp)) << '\n';
  }
}

nlohmann::ordered_json spec_json(const WalkSpec& spec) {
  return {{"n", spec.steps},
          {"theta", spec.theta.radians},
          {"alpha", spec.alpha},
          {"beta", spec.beta},
          {"phi", spec.phi}};
}

nlohmann::ordered_json state_json(const WalkSpec& spec, std::string_view engine,
                                  const StateVector& state) {
  nlohmann::ordered_json out;
  out["spec"] = spec_json(spec);
  out["engine"] = engine;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : state.entries()) {
    if (e.amp.real() == 0.0 && e.amp.imag() == 0.0) continue;
    entries.push_back({{"coin", e.coin},
                       {"x", e.x},
                       {"re", e.amp.real()},
                       {"im", e.amp.imag()},
                       {"prob", std::norm(e.amp)}});
  }
  out["entries"] = std::move(entries);
  return out;
}

}  // namespace qwalk
