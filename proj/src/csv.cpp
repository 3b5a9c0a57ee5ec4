#include "rbcom/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rbcom/errors.hpp"

namespace rbcom {

std::string csv_document(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows)
{
    if (header.empty())
        throw DomainError("csv: header must not be empty");
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i)
            out += ',';
        out += header[i];
    }
    out += '\n';

    char buf[32];
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw DomainError("csv: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            std::snprintf(buf, sizeof buf, "%.17e", row[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows)
{
    const std::filesystem::path p(path);
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw ConfigError("csv: cannot open '" + path + "' for writing");
    out << csv_document(header, rows);
}

std::vector<std::string> parse_csv(const std::string& text,
                                   std::vector<std::vector<double>>& rows)
{
    rows.clear();
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("csv: empty document");

    std::vector<std::string> header;
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ','))
        header.push_back(cell);

    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ConfigError("csv: non-numeric cell '" + cell + "'");
            }
        }
        if (row.size() != header.size())
            throw ConfigError("csv: row width does not match header");
        rows.push_back(std::move(row));
    }
    return header;
}

}  // namespace rbcom
