#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paracyclic/duplicial.hpp"

namespace paracyclic {

// Relations plus every operator identity, each at every degree the
// truncation allows. Probe entries (inversion-formula variants and the
// printed sigma sentinel) are informational.
IdentityReport check_identity_suite(const TruncatedDuplicialModule& m);

enum class ModuleClass { Duplicial, Paracyclic, Cyclic };
std::string to_string(ModuleClass c);

struct DegreeClassification {
  int degree = 0;
  bool t_available = false;
  bool t_invertible = false;
  bool T_identity = false;
  // Unset when the degree needs n + 1 > n_max or kernels are unavailable.
  std::optional<bool> kappa_N_invertible;
  std::optional<bool> pi_N_invertible;
  std::optional<bool> pi_N_identity;
};

struct Classification {
  ModuleClass kind = ModuleClass::Duplicial;
  std::vector<DegreeClassification> degrees;
};

// Paracyclic iff every available t is invertible; cyclic iff moreover every
// available T is the identity.
Classification classify_module(const TruncatedDuplicialModule& m);

}  // namespace paracyclic
