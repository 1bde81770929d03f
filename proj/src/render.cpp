#include "tribound/render.hpp"

#include <json.hpp>
#include <sstream>

namespace tribound {
namespace {

long table_rows(const FaceTable& t) {
  long rows = 0;
  for (const auto& v : t.vectors) {
    rows = std::max(rows, static_cast<long>(v.bounds.size()));
  }
  return rows;
}

std::string render_text(const FaceTable& t) {
  std::ostringstream out;
  const bool multi = t.columns.size() > 1;
  if (multi) {
    out << "i";
    for (const auto& c : t.columns) out << "  " << c;
    out << "\n";
  }
  const long rows = table_rows(t);
  for (long i = 0; i < rows; ++i) {
    BigInt row_max = -1;
    if (multi) {
      for (const auto& v : t.vectors) {
        if (i < static_cast<long>(v.bounds.size())) {
          row_max = std::max(row_max, v.bounds[static_cast<std::size_t>(i)]);
        }
      }
    }
    out << i;
    for (const auto& v : t.vectors) {
      out << "  ";
      if (i < static_cast<long>(v.bounds.size())) {
        const BigInt& x = v.bounds[static_cast<std::size_t>(i)];
        out << x;
        if (multi && x == row_max) out << "*";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_csv(const FaceTable& t) {
  std::ostringstream out;
  out << "i";
  if (t.columns.size() <= 1) {
    out << ",bound";
  } else {
    for (const auto& c : t.columns) out << "," << c;
  }
  out << "\n";
  const long rows = table_rows(t);
  for (long i = 0; i < rows; ++i) {
    out << i;
    for (const auto& v : t.vectors) {
      out << ",";
      if (i < static_cast<long>(v.bounds.size())) {
        out << v.bounds[static_cast<std::size_t>(i)];
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string render_json(const FaceTable& t) {
  nlohmann::json doc;
  doc["d"] = t.d;
  doc["columns"] = t.columns.empty() ? nlohmann::json::array()
                                     : nlohmann::json(t.columns);
  nlohmann::json f0 = nlohmann::json::object();
  nlohmann::json bounds = nlohmann::json::object();
  for (std::size_t c = 0; c < t.vectors.size(); ++c) {
    const std::string key = c < t.columns.size() ? t.columns[c] : "bound";
    f0[key] = t.vectors[c].f0_input.str();
    auto arr = nlohmann::json::array();
    for (const BigInt& x : t.vectors[c].bounds) {
      arr.push_back(x.str());
    }
    bounds[key] = std::move(arr);
  }
  doc["f0"] = std::move(f0);
  doc["bounds"] = std::move(bounds);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_table(const FaceTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::Text:
      return render_text(table);
    case TableFormat::Csv:
      return render_csv(table);
    case TableFormat::Json:
      return render_json(table);
  }
  return {};
}

std::string render_table(const FaceBoundVector& v, TableFormat format) {
  FaceTable t;
  t.d = v.d;
  t.columns = {"bound"};
  t.vectors = {v};
  return render_table(t, format);
}

}  // namespace tribound
