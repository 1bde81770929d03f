#include "tribound/check.hpp"

#include <map>
#include <sstream>
#include <string>

#include "tribound/catalog.hpp"
#include "tribound/covering_type.hpp"
#include "tribound/face_bounds.hpp"
#include "tribound/fixtures.hpp"

namespace tribound {
namespace {

// Documented discrepancies in the recorded closed forms.  Entries listed
// here are reported but do not fail the check; everything else must match
// digit for digit.
const std::map<std::string, std::string>& known_discrepancies() {
  static const std::map<std::string, std::string> notes = [] {
    std::map<std::string, std::string> m;
    m["totals.E7.F3"] =
        "recorded total is inconsistent with the neighbouring magnitudes; "
        "computed value reported, not enforced";
    for (int n = 3; n <= 8; ++n) {
      m["so.ct.SO(" + std::to_string(n) + ")"] =
          "cubic closed form vs mod-2 derivational bound; recorded side by "
          "side, not asserted equal (the derivational value is the "
          "defensible one)";
    }
    for (int n = 2; n <= 5; ++n) {
      m["facet.SU.n" + std::to_string(n)] =
          "closed form drops a 5n/6 term; the derived value is canonical";
      m["facet.SO_even.n" + std::to_string(n)] =
          "closed form printed with mixed variables; evaluated reading every "
          "variable as n, it matches the derived value";
      m["facet.Sp.n" + std::to_string(n)] =
          "closed form was assembled with an incorrect dimension for the "
          "family; the derived value is canonical";
    }
    for (int n = 1; n <= 4; ++n) {
      m["facet.SO_odd.n" + std::to_string(n)] =
          "closed form printed with mixed variables; evaluated reading every "
          "variable as n, it matches the derived value";
      m["facet.Sp.n" + std::to_string(n)] =
          "closed form was assembled with an incorrect dimension for the "
          "family; the derived value is canonical";
    }
    for (int mm = 1; mm <= 4; ++mm) {
      m["facet.kahler.m" + std::to_string(mm)] =
          "closed form's stated leading term does not track direct evaluation "
          "of the top-degree bound for general m; the derived value is "
          "canonical";
    }
    return m;
  }();
  return notes;
}

std::string note_for(const std::string& id) {
  auto it = known_discrepancies().find(id);
  return it == known_discrepancies().end() ? std::string() : it->second;
}

void push(CheckLedger& ledger, std::string id, std::string expected,
          std::string computed) {
  CheckEntry e;
  e.match = expected == computed;
  e.note = note_for(id);
  e.id = std::move(id);
  e.expected = std::move(expected);
  e.computed = std::move(computed);
  ledger.entries.push_back(std::move(e));
}

void push_flag(CheckLedger& ledger, std::string id, std::string expected,
               std::string computed, bool match) {
  CheckEntry e;
  e.match = match;
  e.note = note_for(id);
  e.id = std::move(id);
  e.expected = std::move(expected);
  e.computed = std::move(computed);
  ledger.entries.push_back(std::move(e));
}

std::string format_sci(const std::string& digits, int exponent) {
  std::string out(1, digits[0]);
  if (digits.size() > 1) {
    out += '.';
    out += digits.substr(1);
  }
  out += 'e';
  out += std::to_string(exponent);
  return out;
}

// |computed - digits*10^k| / computed <= 5 * 10^-s with s = #digits, exact.
bool within_printed_precision(const BigInt& computed, std::string_view digits,
                              int exponent) {
  BigInt literal{std::string(digits)};
  const int shift = exponent - (static_cast<int>(digits.size()) - 1);
  for (int i = 0; i < shift; ++i) literal *= 10;
  BigInt diff = computed > literal ? computed - literal : literal - computed;
  BigInt scale = 2;
  for (std::size_t i = 1; i < digits.size(); ++i) scale *= 10;
  return scale * diff <= computed;
}

}  // namespace

std::string to_sig_figs(const BigInt& value, int digits) {
  std::string s = value.str();
  const int exponent = static_cast<int>(s.size()) - 1;
  std::string kept = s.substr(0, static_cast<std::size_t>(digits));
  while (static_cast<int>(kept.size()) < digits) kept += '0';
  // round half up on the first dropped digit
  if (static_cast<int>(s.size()) > digits && s[static_cast<std::size_t>(digits)] >= '5') {
    int i = digits - 1;
    while (i >= 0 && kept[static_cast<std::size_t>(i)] == '9') {
      kept[static_cast<std::size_t>(i)] = '0';
      --i;
    }
    if (i < 0) {
      kept.insert(kept.begin(), '1');
      kept.pop_back();
      return format_sci(kept, exponent + 1);
    }
    ++kept[static_cast<std::size_t>(i)];
  }
  return format_sci(kept, exponent);
}

CheckLedger check_against_embedded() {
  CheckLedger ledger;

  // covering-type bounds of the exceptional groups
  for (const auto& fx : fixtures::kExceptionalCt) {
    const std::string group(fx.group);
    CtBound ct = weighted_length_bound(presentation(group, "F2"));
    push(ledger, "ct." + group, std::to_string(fx.value), ct.value.str());
  }

  // G2 face-number bounds over F2 and the per-field totals
  {
    GroupData g2 = group_data("G2");
    const BigInt f0 = 44;
    FaceBoundVector v = face_bound_vector(
        g2.dim, f0, betti_vector(poincare_polynomial(presentation("G2", "F2"))));
    for (long i = 0; i <= v.d; ++i) {
      push(ledger, "G2.F2.f" + std::to_string(i),
           std::string(fixtures::kG2F2Faces[static_cast<std::size_t>(i)]),
           v.bounds[static_cast<std::size_t>(i)].str());
    }
    push(ledger, "G2.total.F2", std::string(fixtures::kG2TotalF2),
         total_bound(v).str());
    for (const char* field : {"F3", "F5", "Q"}) {
      FaceBoundVector w = face_bound_vector(
          g2.dim, f0,
          betti_vector(poincare_polynomial(presentation("G2", field))));
      push(ledger, std::string("G2.total.") + field,
           std::string(fixtures::kG2TotalOther), total_bound(w).str());
    }
  }

  // the full F4 table, digit for digit
  {
    const BigInt f0 = 259;
    const char* fields[3] = {"F2", "F3", "F5"};
    for (int c = 0; c < 3; ++c) {
      FaceBoundVector v = face_bound_vector(
          52, f0,
          betti_vector(poincare_polynomial(presentation("F4", fields[c]))));
      for (long i = 0; i <= 52; ++i) {
        push(ledger,
             std::string("F4.") + fields[c] + ".f" + std::to_string(i),
             std::string(
                 fixtures::kF4Table[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]),
             v.bounds[static_cast<std::size_t>(i)].str());
      }
    }
  }

  // totals for F4..E8 against the recorded significant figures
  for (const auto& fx : fixtures::kSciTotals) {
    const std::string group(fx.group);
    const std::string field(fx.field);
    GroupData data = group_data(group);
    BigInt f0 = canonical_f0(group).value;
    FaceBoundVector v = face_bound_vector(
        data.dim, f0,
        betti_vector(poincare_polynomial(presentation(group, field))));
    BigInt total = total_bound(v);
    const bool match =
        fx.asserted && within_printed_precision(total, fx.digits, fx.exponent);
    std::ostringstream expected;
    expected << fx.digits[0] << "." << fx.digits.substr(1) << "e" << fx.exponent;
    push_flag(ledger, "totals." + group + "." + field, expected.str(),
              to_sig_figs(total, static_cast<int>(fx.digits.size())), match);
  }

  // SO(n): cubic closed form vs the mod-2 derivational bound, side by side
  for (long n = 3; n <= 8; ++n) {
    CtBound cubic = classical_ct_bound(ClassicalFamily::SO, n);
    CtBound derivational = weighted_length_bound(so_mod2_heights(n));
    push_flag(ledger, "so.ct.SO(" + std::to_string(n) + ")", cubic.value.str(),
              derivational.value.str(), cubic.value == derivational.value);
  }

  // facet bounds: derived route vs recorded closed forms
  const struct {
    FacetFamily family;
    const char* name;
    long first_n;
  } facet_families[] = {{FacetFamily::U, "U", 2},
                        {FacetFamily::SU, "SU", 2},
                        {FacetFamily::SO_odd, "SO_odd", 1},
                        {FacetFamily::SO_even, "SO_even", 2},
                        {FacetFamily::Sp, "Sp", 1}};
  for (const auto& fam : facet_families) {
    for (long n = fam.first_n; n < fam.first_n + 4; ++n) {
      FacetBound fb = classical_facet_bound(fam.family, n);
      push_flag(ledger,
                std::string("facet.") + fam.name + ".n" + std::to_string(n),
                fb.closed_form.str(), fb.derived.str(), fb.agree);
    }
  }
  for (long m = 1; m <= 4; ++m) {
    FacetBound fb = kahler_facet_bound(m);
    push_flag(ledger, "facet.kahler.m" + std::to_string(m),
              fb.closed_form.str(), fb.derived.str(), fb.agree);
  }

  return ledger;
}

bool CheckLedger::clean() const {
  for (const auto& e : entries) {
    if (!e.match && e.note.empty()) {
      return false;
    }
  }
  return true;
}

long CheckLedger::mismatches() const {
  long count = 0;
  for (const auto& e : entries) count += e.match ? 0 : 1;
  return count;
}

long CheckLedger::annotated_mismatches() const {
  long count = 0;
  for (const auto& e : entries) count += (!e.match && !e.note.empty()) ? 1 : 0;
  return count;
}

}  // namespace tribound
