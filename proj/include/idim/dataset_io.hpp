#pragma once

#include <iosfwd>
#include <string>

#include "idim/metric.hpp"

namespace idim {

// Text ingestion format, one point per row:
//   real metrics: numbers separated by whitespace and/or commas
//   hamming:      a single string of '0'/'1' characters
// Blank lines and lines starting with '#' are skipped. The metric is always
// supplied by the caller, never inferred from the content. Parse failures
// throw InvalidInput naming the offending line number.
Dataset read_dataset(std::istream& in, const MetricDescriptor& metric);
Dataset read_dataset_file(const std::string& path, const MetricDescriptor& metric);

// Writes rows in the ingestion format; real coordinates use 17 significant
// digits so a round trip is exact.
void write_dataset(std::ostream& out, const Dataset& ds);

}  // namespace idim
