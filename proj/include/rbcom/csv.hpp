#pragma once

#include <string>
#include <vector>

namespace rbcom {

// Render a CSV document: header row plus numeric rows, every value in
// full-precision scientific notation. The same inputs always produce the
// same bytes.
std::string csv_document(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows);

// Write a CSV document to a file, creating parent directories.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

// Parse a CSV document produced by csv_document: returns the header and
// fills rows. Used by round-trip checks and downstream tooling.
std::vector<std::string> parse_csv(const std::string& text,
                                   std::vector<std::vector<double>>& rows);

}  // namespace rbcom
