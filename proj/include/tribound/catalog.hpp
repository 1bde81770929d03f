#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tribound/algebra.hpp"
#include "tribound/covering_type.hpp"

namespace tribound {

enum class FamilyKind { Exceptional, ClassicalParametric };

struct GroupData {
  long dim = 0;
  long rank = 0;
  RationalType type;
  bool simple_simply_connected = false;
  // SO(2n) with n <= 3: the rational generator degrees collide or coincide,
  // so the sorted rational type should be read with care.
  bool degenerate = false;
};

struct CatalogEntry {
  std::string name;
  FamilyKind kind = FamilyKind::Exceptional;
  bool parametric = false;
  std::vector<std::string> fields;  // available labels in the order F2, F3, F5, Q
  std::string citation;             // source of the pinned presentation
};

// Deterministic listing of every built-in group entry.
const std::vector<CatalogEntry>& list_entries();

// The pinned presentation of `group` over `field`.  Parametric families
// require n; fixed groups reject it.  Throws UnknownGroupError,
// UnknownFieldError, MissingParameterError or DomainError.
GradedPresentation presentation(const std::string& group, const std::string& field,
                                std::optional<long> n = std::nullopt);

// Mod-2 presentation of SO(n), n >= 3: generators x_i for odd i <= 2*floor(n/2)-1
// with height alpha_i - 1, where alpha_i is the least power of two such that
// i * alpha_i >= n.
GradedPresentation so_mod2_heights(long n);

// Exact (dimension, rank, rational type) for the group.
GroupData group_data(const std::string& group, std::optional<long> n = std::nullopt);

// The ct bound used as f_0 in face tables: the weighted-length bound of the
// group's strongest pinned presentation (mod 2 where one is pinned).
CtBound canonical_f0(const std::string& group, std::optional<long> n = std::nullopt);

}  // namespace tribound
