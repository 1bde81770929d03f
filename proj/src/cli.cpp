#include "tribound/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "tribound/algebra_file.hpp"
#include "tribound/catalog.hpp"
#include "tribound/check.hpp"
#include "tribound/covering_type.hpp"
#include "tribound/errors.hpp"
#include "tribound/face_bounds.hpp"
#include "tribound/render.hpp"

namespace tribound {
namespace {

std::string poly_to_string(const IntPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::ostringstream out;
  bool first = true;
  for (long i = 0; i <= p.degree(); ++i) {
    const BigInt& c = p.coeff(i);
    if (c == 0) continue;
    if (!first) out << " + ";
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "t^" << i;
    }
    first = false;
  }
  return out.str();
}

std::vector<std::string> split_fields(const std::string& list) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : list) {
    if (ch == ',') {
      if (!cur.empty()) fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) fields.push_back(cur);
  return fields;
}

TableFormat parse_format(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  return TableFormat::Text;
}

void warn_nonintegral(const CtBound& ct, std::ostream& err) {
  if (ct.nonintegral) {
    err << "warning: closed form evaluated to a non-integer; "
           "the bound was rounded up\n";
  }
}

struct GroupArgs {
  std::string group;
  std::string field = "F2";
  long n = 0;
  bool has_n = false;

  std::optional<long> n_opt() const {
    return has_n ? std::optional<long>(n) : std::nullopt;
  }
};

FaceBoundVector faces_for(const GroupArgs& a, const std::string& field,
                          const BigInt& f0) {
  GradedPresentation pres = presentation(a.group, field, a.n_opt());
  BettiVector betti = betti_vector(poincare_polynomial(pres));
  return face_bound_vector(betti.d, f0, betti);
}

int cmd_poincare(const GroupArgs& a, std::ostream& out) {
  GradedPresentation pres = presentation(a.group, a.field, a.n_opt());
  PoincarePolynomial pp = poincare_polynomial(pres);
  out << poly_to_string(pp.poly()) << "\n";
  return 0;
}

int cmd_ct(const GroupArgs& a, const std::string& file, const std::string& method,
           std::ostream& out, std::ostream& err) {
  CtBound ct;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      throw Error("cannot open algebra file '" + file + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    ct = weighted_length_bound(parse_algebra_file(buf.str()));
  } else if (method == "rational") {
    ct = rational_type_bound(group_data(a.group, a.n_opt()).type);
  } else if (method == "rankdim") {
    GroupData data = group_data(a.group, a.n_opt());
    ct = rank_dim_bound(data.dim, data.rank);
  } else {
    ct = weighted_length_bound(presentation(a.group, a.field, a.n_opt()));
  }
  warn_nonintegral(ct, err);
  out << ct.value << "\n";
  return 0;
}

int cmd_faces(const GroupArgs& a, bool has_i, long i, const std::string& format,
              std::ostream& out, std::ostream& err) {
  const std::vector<std::string> fields = split_fields(a.field);
  if (fields.empty()) {
    throw Error("no field given");
  }
  CtBound f0 = canonical_f0(a.group, a.n_opt());
  warn_nonintegral(f0, err);

  if (has_i) {
    if (fields.size() != 1) {
      throw Error("--i expects a single field column");
    }
    FaceBoundVector v = faces_for(a, fields[0], f0.value);
    if (i < 0 || i > v.d) {
      throw IndexError("index " + std::to_string(i) + " outside 0.." +
                       std::to_string(v.d));
    }
    out << v.bounds[static_cast<std::size_t>(i)] << "\n";
    return 0;
  }

  FaceTable table;
  table.columns = fields;
  for (const std::string& field : fields) {
    table.vectors.push_back(faces_for(a, field, f0.value));
    table.d = table.vectors.back().d;
  }
  out << render_table(table, parse_format(format));
  return 0;
}

int cmd_total(const GroupArgs& a, std::ostream& out, std::ostream& err) {
  CtBound f0 = canonical_f0(a.group, a.n_opt());
  warn_nonintegral(f0, err);
  out << total_bound(faces_for(a, a.field, f0.value)) << "\n";
  return 0;
}

int cmd_classical(const std::string& family, long n, bool facets,
                  std::ostream& out, std::ostream& err) {
  if (facets) {
    FacetFamily fam;
    if (family == "U") fam = FacetFamily::U;
    else if (family == "SU") fam = FacetFamily::SU;
    else if (family == "SO_odd") fam = FacetFamily::SO_odd;
    else if (family == "SO_even") fam = FacetFamily::SO_even;
    else if (family == "Sp") fam = FacetFamily::Sp;
    else {
      throw Error("--facets needs a family among U, SU, SO_odd, SO_even, Sp");
    }
    FacetBound fb = classical_facet_bound(fam, n);
    if (fb.nonintegral) {
      err << "warning: a closed form evaluated to a non-integer and was "
             "rounded up\n";
    }
    out << "derived: " << fb.derived << "\n";
    out << "closed-form: " << fb.closed_form << "\n";
    out << "agree: " << (fb.agree ? "yes" : "no") << "\n";
    return 0;
  }

  CtBound ct;
  if (family == "Torus") ct = classical_ct_bound(ClassicalFamily::Torus, n);
  else if (family == "U") ct = classical_ct_bound(ClassicalFamily::U, n);
  else if (family == "SU") ct = classical_ct_bound(ClassicalFamily::SU, n);
  else if (family == "Sp") ct = classical_ct_bound(ClassicalFamily::Sp, n);
  else if (family == "SO") ct = classical_ct_bound(ClassicalFamily::SO, n);
  else if (family == "SO_odd") ct = classical_ct_bound(ClassicalFamily::SO, 2 * n + 1);
  else if (family == "SO_even") ct = classical_ct_bound(ClassicalFamily::SO, 2 * n);
  else throw Error("unknown family '" + family + "'");
  warn_nonintegral(ct, err);
  out << ct.value << "\n";
  return 0;
}

int cmd_catalog_list(std::ostream& out) {
  for (const CatalogEntry& e : list_entries()) {
    out << e.name;
    if (e.parametric) out << " (parametric n)";
    out << " [";
    for (std::size_t i = 0; i < e.fields.size(); ++i) {
      if (i) out << ",";
      out << e.fields[i];
    }
    out << "]\n";
  }
  return 0;
}

int cmd_report(bool check, std::ostream& out) {
  if (check) {
    CheckLedger ledger = check_against_embedded();
    for (const CheckEntry& e : ledger.entries) {
      out << e.id << " expected=" << e.expected << " computed=" << e.computed
          << (e.match ? " ok" : " MISMATCH");
      if (!e.note.empty()) {
        out << " # " << e.note;
      }
      out << "\n";
    }
    out << "summary: " << ledger.entries.size() << " entries, "
        << ledger.mismatches() << " mismatches ("
        << ledger.annotated_mismatches() << " annotated)\n";
    return ledger.clean() ? 0 : 3;
  }

  for (const CatalogEntry& entry : list_entries()) {
    if (entry.kind != FamilyKind::Exceptional) {
      continue;
    }
    GroupData data = group_data(entry.name);
    CtBound f0 = canonical_f0(entry.name);
    out << entry.name << ": dim=" << data.dim << " rank=" << data.rank
        << " f0=" << f0.value << "\n";
    out << "  source: " << entry.citation << "\n";
    for (const std::string& field : entry.fields) {
      GradedPresentation pres = presentation(entry.name, field);
      CtBound wlb = weighted_length_bound(pres);
      BettiVector betti = betti_vector(poincare_polynomial(pres));
      BigInt total = total_bound(face_bound_vector(betti.d, f0.value, betti));
      out << "  " << field << ": wlb=" << wlb.value << " total=" << total
          << " (~" << to_sig_figs(total, 6) << ")\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"covering-type and face-number lower bounds for triangulations"};
  app.require_subcommand(1);

  GroupArgs ga;
  std::string file;
  std::string method = "weighted";
  std::string format = "text";
  std::string family;
  long index = 0;
  long family_n = 0;
  bool facets = false;
  bool check = false;

  CLI::App* cat = app.add_subcommand("catalog", "browse the built-in groups");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "list every catalog entry");

  CLI::App* poin = app.add_subcommand("poincare", "print a Poincare polynomial");
  poin->add_option("--group", ga.group, "catalog group name")->required();
  poin->add_option("--field", ga.field, "coefficient field label")->required();
  CLI::Option* poin_n = poin->add_option("--n", ga.n, "family parameter");

  CLI::App* ct = app.add_subcommand("ct", "covering-type lower bound");
  ct->add_option("--group", ga.group, "catalog group name");
  ct->add_option("--field", ga.field, "coefficient field label (default F2)");
  CLI::Option* ct_n = ct->add_option("--n", ga.n, "family parameter");
  ct->add_option("--file", file, "algebra file with a presentation");
  ct->add_option("--method", method, "weighted|rational|rankdim")
      ->check(CLI::IsMember({"weighted", "rational", "rankdim"}));

  CLI::App* faces = app.add_subcommand("faces", "face-number lower bounds");
  faces->add_option("--group", ga.group, "catalog group name")->required();
  faces->add_option("--field", ga.field, "field label, or comma list for comparison")
      ->required();
  CLI::Option* faces_n = faces->add_option("--n", ga.n, "family parameter");
  CLI::Option* faces_i = faces->add_option("--i", index, "print the bound for f_i only");
  faces->add_option("--format", format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* total = app.add_subcommand("total", "bound on the number of all simplices");
  total->add_option("--group", ga.group, "catalog group name")->required();
  total->add_option("--field", ga.field, "coefficient field label")->required();
  CLI::Option* total_n = total->add_option("--n", ga.n, "family parameter");

  CLI::App* classical = app.add_subcommand("classical", "closed-form family bounds");
  classical->add_option("--family", family, "Torus|U|SU|Sp|SO|SO_odd|SO_even")
      ->required();
  classical->add_option("--n", family_n, "family parameter")->required();
  classical->add_flag("--facets", facets, "print the facet-bound comparison");

  CLI::App* report = app.add_subcommand("report", "summary of the built-in bounds");
  report->add_flag("--check", check, "recompute and compare the reference set");

  std::vector<const char*> argv;
  argv.push_back("tribound");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  ga.has_n = (poin_n->count() | ct_n->count() | faces_n->count() |
              total_n->count()) > 0;

  try {
    if (app.got_subcommand(cat)) {
      return cmd_catalog_list(out);
    }
    if (app.got_subcommand(poin)) {
      return cmd_poincare(ga, out);
    }
    if (app.got_subcommand(ct)) {
      if (file.empty() == ga.group.empty()) {
        err << "error: ct needs exactly one of --group or --file\n";
        return 1;
      }
      if (!file.empty() && method != "weighted") {
        err << "error: --file supports only --method weighted\n";
        return 1;
      }
      return cmd_ct(ga, file, method, out, err);
    }
    if (app.got_subcommand(faces)) {
      return cmd_faces(ga, faces_i->count() > 0, index, format, out, err);
    }
    if (app.got_subcommand(total)) {
      return cmd_total(ga, out, err);
    }
    if (app.got_subcommand(classical)) {
      return cmd_classical(family, family_n, facets, out, err);
    }
    if (app.got_subcommand(report)) {
      return cmd_report(check, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace tribound
