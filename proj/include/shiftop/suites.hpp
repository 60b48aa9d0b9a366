#ifndef SHIFTOP_SUITES_HPP
#define SHIFTOP_SUITES_HPP

#include <string>
#include <utility>
#include <vector>

#include "shiftop/check.hpp"
#include "shiftop/dunkl.hpp"
#include "shiftop/suites_cyclotomic.hpp"
#include "shiftop/suites_embed.hpp"
#include "shiftop/suites_weyl.hpp"
#include "shiftop/suites_yangian.hpp"

namespace shiftop {

using SuiteFn = void (*)(Checker&, const SuiteParams&);

/// All registered verification suites, in report order. "all" is handled by
/// the caller as the concatenation of these.
inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"hgr1", &suite_hgr1},           {"hgr2", &suite_hgr2},
      {"rat", &suite_rat},             {"dunkl", &suite_dunkl},
      {"exchange", &suite_exchange},   {"reorder", &suite_reorder},
      {"leading", &suite_leading},     {"spherical", &suite_spherical},
      {"powersum", &suite_powersum},   {"yangian", &suite_yangian},
      {"tsy", &suite_tsy},             {"tau", &suite_tau},
      {"shifted", &suite_shifted},     {"cyclotomic", &suite_cyclotomic},
      {"poisson", &suite_poisson},
  };
  return reg;
}

inline const SuiteFn* find_suite(const std::string& name) {
  for (const auto& [n, fn] : suite_registry())
    if (n == name) return &fn;
  return nullptr;
}

}  // namespace shiftop

#endif  // SHIFTOP_SUITES_HPP
