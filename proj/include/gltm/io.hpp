#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "gltm/geometry.hpp"
#include "gltm/inference.hpp"
#include "gltm/simlab.hpp"
#include "gltm/sym_matrix.hpp"

namespace gltm {

using Json = nlohmann::ordered_json;

// Numeric table with an optional header row of names. Blank lines are
// skipped; fields may be double-quoted. The first row is a header when any
// field is quoted or non-numeric. Throws ParseError with line/column.
struct Table {
  std::vector<std::string> names;  // empty when there was no header
  Matrix values;
};
Table read_table(std::istream& in);
Table read_table_file(const std::string& path);

// Square table as a symmetric matrix; names default to "1".."m".
SymMatrix read_matrix(std::istream& in, MatrixRole role);
SymMatrix read_matrix_file(const std::string& path, MatrixRole role);
void write_matrix(std::ostream& out, const SymMatrix& s);
void write_data(std::ostream& out, const Matrix& x, const std::vector<std::string>& names);

std::string read_text_file(const std::string& path);

Json to_json(const Witness& w);
Json to_json(const MembershipVerdict& v);
Json to_json(const QuartetSet& q);
Json to_json(const TestReport& r);
Json to_json(const ExploratoryReport& r);
Json to_json(const std::vector<ScreenEntry>& screen);
Json to_json(const BayesReport& r);
Json to_json(const Histogram& h);
Json to_json(const VolumeEstimate& v);
Json to_json(const RecoveryResult& r);
// Summary of an experiment; statistics themselves go to CSV.
Json to_json(const ExperimentResult& r);
Json to_json(const ExperimentConfig& cfg);

void write_histogram_csv(std::ostream& out, const Histogram& h);

}  // namespace gltm
