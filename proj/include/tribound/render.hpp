#pragma once

#include <string>
#include <vector>

#include "tribound/face_bounds.hpp"

namespace tribound {

enum class TableFormat { Text, Csv, Json };

// A face-bound table with one column per field label.  All columns share
// the dimension d.
struct FaceTable {
  long d = 0;
  std::vector<std::string> columns;      // e.g. {"F2", "F3", "F5"}
  std::vector<FaceBoundVector> vectors;  // parallel to columns
};

// Text: one row per i; with several columns the per-row maxima are marked
// with '*'.  Csv: header `i,bound` or `i,<col>,...`, full decimal digits.
// Json: lossless, bounds as decimal strings.  Never scientific notation.
std::string render_table(const FaceTable& table, TableFormat format);
std::string render_table(const FaceBoundVector& v, TableFormat format);

}  // namespace tribound
