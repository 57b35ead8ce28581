#pragma once

// HEF1 field container: magic "HEF1", u32le version = 1, u32le plane count,
// u32le n, then plane-count n*n float64le planes, row-major.  Plus plain
// CSV export (one plane per file).

#include <string>
#include <vector>

#include "hetoda/grid.hpp"

namespace hetoda {

void write_hef1(const std::string& path, const std::vector<ScalarField>& planes);
std::vector<ScalarField> read_hef1(const std::string& path);

void write_csv_plane(const std::string& path, const ScalarField& f);

// Shortest decimal form that round-trips a double.
std::string format_double(double v);

}  // namespace hetoda
