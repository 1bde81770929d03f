#include "tribound/catalog.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <utility>

#include "tribound/errors.hpp"

namespace tribound {
namespace {

const std::vector<std::string> kAllFields = {"F2", "F3", "F5", "Q"};
const std::vector<std::string> kOddFields = {"F3", "F5", "Q"};  // no 2-torsion data

struct ExceptionalRecord {
  std::string name;
  long dim;
  long rank;
  std::vector<long> rational_type;
  // generator lists as (degree, height) pairs
  std::map<std::string, std::vector<Generator>> presentations;
};

// Mod-p and rational cohomology of the compact exceptional groups; classical
// results, see e.g. Mimura-Toda, "Topology of Lie Groups I, II".
const std::vector<ExceptionalRecord>& exceptional_records() {
  static const std::vector<ExceptionalRecord> records = {
      {"G2", 14, 2, {1, 5},
       {{"F2", {{3, 3}, {5, 1}}},
        {"F3", {{3, 1}, {11, 1}}},
        {"F5", {{3, 1}, {11, 1}}},
        {"Q", {{3, 1}, {11, 1}}}}},
      {"F4", 52, 4, {1, 5, 7, 11},
       {{"F2", {{3, 3}, {5, 1}, {15, 1}, {23, 1}}},
        {"F3", {{8, 2}, {3, 1}, {7, 1}, {11, 1}, {15, 1}}},
        {"F5", {{3, 1}, {11, 1}, {15, 1}, {23, 1}}},
        {"Q", {{3, 1}, {11, 1}, {15, 1}, {23, 1}}}}},
      {"E6", 78, 6, {1, 4, 5, 7, 8, 11},
       {{"F2", {{3, 3}, {5, 1}, {9, 1}, {15, 1}, {17, 1}, {23, 1}}},
        {"F3", {{8, 2}, {3, 1}, {7, 1}, {9, 1}, {11, 1}, {15, 1}, {17, 1}}},
        {"F5", {{3, 1}, {9, 1}, {11, 1}, {15, 1}, {17, 1}, {23, 1}}},
        {"Q", {{3, 1}, {9, 1}, {11, 1}, {15, 1}, {17, 1}, {23, 1}}}}},
      {"E7", 133, 7, {1, 5, 7, 9, 11, 13, 17},
       {{"F2", {{3, 3}, {5, 3}, {9, 3}, {15, 1}, {17, 1}, {23, 1}, {27, 1}}},
        {"F3",
         {{8, 2}, {3, 1}, {7, 1}, {11, 1}, {15, 1}, {19, 1}, {27, 1}, {35, 1}}},
        {"F5",
         {{3, 1}, {11, 1}, {15, 1}, {19, 1}, {23, 1}, {27, 1}, {35, 1}}},
        {"Q", {{3, 1}, {11, 1}, {15, 1}, {19, 1}, {23, 1}, {27, 1}, {35, 1}}}}},
      {"E8", 248, 8, {1, 7, 11, 13, 17, 19, 23, 29},
       {{"F2",
         {{3, 15}, {5, 7}, {9, 3}, {15, 3}, {17, 1}, {23, 1}, {27, 1}, {29, 1}}},
        {"F3",
         {{8, 2}, {20, 2}, {3, 1}, {7, 1}, {15, 1}, {19, 1}, {27, 1}, {35, 1},
          {39, 1}, {47, 1}}},
        {"F5",
         {{12, 4}, {3, 1}, {11, 1}, {15, 1}, {23, 1}, {27, 1}, {35, 1}, {39, 1},
          {47, 1}}},
        {"Q",
         {{3, 1}, {15, 1}, {23, 1}, {27, 1}, {35, 1}, {39, 1}, {47, 1},
          {59, 1}}}}},
  };
  return records;
}

const ExceptionalRecord* find_exceptional(const std::string& group) {
  for (const auto& r : exceptional_records()) {
    if (r.name == group) return &r;
  }
  return nullptr;
}

bool is_parametric(const std::string& group) {
  static const std::vector<std::string> names = {"Torus",   "U",       "SU",
                                                 "Sp",      "SO_odd",  "SO_even",
                                                 "SO_mod2"};
  return std::find(names.begin(), names.end(), group) != names.end();
}

long require_n(const std::string& group, std::optional<long> n, long min_n) {
  if (!n) {
    throw MissingParameterError("group '" + group + "' is parametric: pass n");
  }
  if (*n < min_n) {
    throw DomainError("group '" + group + "' requires n >= " + std::to_string(min_n));
  }
  return *n;
}

std::vector<Generator> exterior(std::initializer_list<long> degrees) {
  std::vector<Generator> gens;
  for (long deg : degrees) gens.push_back({static_cast<int>(deg), 1});
  return gens;
}

// degrees first, first + step, ..., last (inclusive), all height 1
std::vector<Generator> exterior_range(long first, long step, long last) {
  std::vector<Generator> gens;
  for (long deg = first; deg <= last; deg += step) {
    gens.push_back({static_cast<int>(deg), 1});
  }
  return gens;
}

GradedPresentation make(const std::string& name, const std::string& field,
                        std::vector<Generator> gens) {
  return validate_presentation({name, field, std::move(gens)});
}

void require_field(const std::string& group, const std::string& field,
                   const std::vector<std::string>& available) {
  if (std::find(available.begin(), available.end(), field) == available.end()) {
    std::string fields;
    for (const auto& f : available) {
      fields += fields.empty() ? f : "," + f;
    }
    throw UnknownFieldError("group '" + group + "' has no presentation over '" +
                            field + "' (available: " + fields + ")");
  }
}

}  // namespace

const std::vector<CatalogEntry>& list_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"G2", FamilyKind::Exceptional, false, kAllFields,
       "mod-p and rational cohomology of G2 (Mimura-Toda)"},
      {"F4", FamilyKind::Exceptional, false, kAllFields,
       "mod-p and rational cohomology of F4 (Mimura-Toda)"},
      {"E6", FamilyKind::Exceptional, false, kAllFields,
       "mod-p and rational cohomology of E6 (Mimura-Toda)"},
      {"E7", FamilyKind::Exceptional, false, kAllFields,
       "mod-p and rational cohomology of E7 (Mimura-Toda)"},
      {"E8", FamilyKind::Exceptional, false, kAllFields,
       "mod-p and rational cohomology of E8 (Mimura-Toda)"},
      {"Torus", FamilyKind::ClassicalParametric, true, kAllFields,
       "H*(T^n) exterior on n degree-1 generators"},
      {"U", FamilyKind::ClassicalParametric, true, kAllFields,
       "H*(U(n)) exterior on degrees 1,3,...,2n-1 (torsion-free)"},
      {"SU", FamilyKind::ClassicalParametric, true, kAllFields,
       "H*(SU(n)) exterior on degrees 3,5,...,2n-1 (torsion-free)"},
      {"Sp", FamilyKind::ClassicalParametric, true, kAllFields,
       "H*(Sp(n)) exterior on degrees 3,7,...,4n-1 (torsion-free)"},
      {"SO_odd", FamilyKind::ClassicalParametric, true, kOddFields,
       "H*(SO(2n+1)) away from 2: exterior on degrees 3,7,...,4n-1"},
      {"SO_even", FamilyKind::ClassicalParametric, true, kOddFields,
       "H*(SO(2n)) away from 2: exterior on degrees 3,7,...,4n-5 and 2n-1"},
      {"SO_mod2", FamilyKind::ClassicalParametric, true, {"F2"},
       "H*(SO(n);F2) truncated polynomial on odd degrees < n (Borel)"},
  };
  return entries;
}

GradedPresentation so_mod2_heights(long n) {
  if (n < 3) {
    throw DomainError("so_mod2_heights: requires n >= 3");
  }
  std::vector<Generator> gens;
  for (long i = 1; i <= 2 * (n / 2) - 1; i += 2) {
    long alpha = 1;
    while (i * alpha < n) alpha *= 2;
    gens.push_back({static_cast<int>(i), static_cast<int>(alpha - 1)});
  }
  return make("SO(" + std::to_string(n) + ") mod 2", "F2", std::move(gens));
}

GradedPresentation presentation(const std::string& group, const std::string& field,
                                std::optional<long> n) {
  if (const ExceptionalRecord* rec = find_exceptional(group)) {
    if (n) {
      throw DomainError("group '" + group + "' takes no parameter n");
    }
    auto it = rec->presentations.find(field);
    if (it == rec->presentations.end()) {
      require_field(group, field, kAllFields);
    }
    return make(group, field, it->second);
  }
  if (group == "Torus") {
    long nn = require_n(group, n, 1);
    require_field(group, field, kAllFields);
    return make("T^" + std::to_string(nn), field,
                std::vector<Generator>(static_cast<std::size_t>(nn), {1, 1}));
  }
  if (group == "U") {
    long nn = require_n(group, n, 1);
    require_field(group, field, kAllFields);
    return make("U(" + std::to_string(nn) + ")", field, exterior_range(1, 2, 2 * nn - 1));
  }
  if (group == "SU") {
    long nn = require_n(group, n, 2);
    require_field(group, field, kAllFields);
    return make("SU(" + std::to_string(nn) + ")", field, exterior_range(3, 2, 2 * nn - 1));
  }
  if (group == "Sp") {
    long nn = require_n(group, n, 1);
    require_field(group, field, kAllFields);
    return make("Sp(" + std::to_string(nn) + ")", field, exterior_range(3, 4, 4 * nn - 1));
  }
  if (group == "SO_odd") {
    long nn = require_n(group, n, 1);
    require_field(group, field, kOddFields);
    return make("SO(" + std::to_string(2 * nn + 1) + ")", field,
                exterior_range(3, 4, 4 * nn - 1));
  }
  if (group == "SO_even") {
    long nn = require_n(group, n, 2);
    require_field(group, field, kOddFields);
    std::vector<Generator> gens = exterior_range(3, 4, 4 * nn - 5);
    gens.push_back({static_cast<int>(2 * nn - 1), 1});
    return make("SO(" + std::to_string(2 * nn) + ")", field, std::move(gens));
  }
  if (group == "SO_mod2") {
    long nn = require_n(group, n, 3);
    require_field(group, field, {"F2"});
    return so_mod2_heights(nn);
  }
  throw UnknownGroupError("unknown group '" + group + "'");
}

GroupData group_data(const std::string& group, std::optional<long> n) {
  if (const ExceptionalRecord* rec = find_exceptional(group)) {
    if (n) {
      throw DomainError("group '" + group + "' takes no parameter n");
    }
    return {rec->dim, rec->rank, RationalType(rec->rational_type), true, false};
  }
  auto type_from_degrees = [](std::vector<long> degrees) {
    std::sort(degrees.begin(), degrees.end());
    for (long& deg : degrees) deg = (deg - 1) / 2;
    return RationalType(std::move(degrees));
  };
  if (group == "Torus") {
    long nn = require_n(group, n, 1);
    return {nn, nn, RationalType(std::vector<long>(static_cast<std::size_t>(nn), 0)),
            false, false};
  }
  if (group == "U") {
    long nn = require_n(group, n, 1);
    std::vector<long> m(static_cast<std::size_t>(nn));
    for (long j = 0; j < nn; ++j) m[static_cast<std::size_t>(j)] = j;
    return {nn * nn, nn, RationalType(std::move(m)), false, false};
  }
  if (group == "SU") {
    long nn = require_n(group, n, 2);
    std::vector<long> m(static_cast<std::size_t>(nn) - 1);
    for (long j = 1; j < nn; ++j) m[static_cast<std::size_t>(j - 1)] = j;
    return {nn * nn - 1, nn - 1, RationalType(std::move(m)), true, false};
  }
  if (group == "Sp") {
    long nn = require_n(group, n, 1);
    std::vector<long> m(static_cast<std::size_t>(nn));
    for (long j = 0; j < nn; ++j) m[static_cast<std::size_t>(j)] = 2 * j + 1;
    return {nn * (2 * nn + 1), nn, RationalType(std::move(m)), true, false};
  }
  if (group == "SO_odd") {
    long nn = require_n(group, n, 1);
    std::vector<long> m(static_cast<std::size_t>(nn));
    for (long j = 0; j < nn; ++j) m[static_cast<std::size_t>(j)] = 2 * j + 1;
    return {nn * (2 * nn + 1), nn, RationalType(std::move(m)), false, false};
  }
  if (group == "SO_even") {
    long nn = require_n(group, n, 2);
    std::vector<long> degrees;
    for (long deg = 3; deg <= 4 * nn - 5; deg += 4) degrees.push_back(deg);
    degrees.push_back(2 * nn - 1);
    return {nn * (2 * nn - 1), nn, type_from_degrees(std::move(degrees)), false,
            nn <= 3};
  }
  if (group == "SO_mod2") {
    // Same underlying group as SO_odd / SO_even; rational data by parity.
    long nn = require_n(group, n, 3);
    GroupData data = nn % 2 == 1 ? group_data("SO_odd", (nn - 1) / 2)
                                 : group_data("SO_even", nn / 2);
    return data;
  }
  throw UnknownGroupError("unknown group '" + group + "'");
}

CtBound canonical_f0(const std::string& group, std::optional<long> n) {
  if (find_exceptional(group) != nullptr) {
    return weighted_length_bound(presentation(group, "F2"));
  }
  if (group == "SO_odd") {
    return weighted_length_bound(so_mod2_heights(2 * require_n(group, n, 1) + 1));
  }
  if (group == "SO_even") {
    return weighted_length_bound(so_mod2_heights(2 * require_n(group, n, 2)));
  }
  if (group == "SO_mod2") {
    return weighted_length_bound(so_mod2_heights(require_n(group, n, 3)));
  }
  if (is_parametric(group)) {
    // Torus, U, SU, Sp: a single presentation shape for every field.
    return weighted_length_bound(presentation(group, "Q", n));
  }
  throw UnknownGroupError("unknown group '" + group + "'");
}

}  // namespace tribound
