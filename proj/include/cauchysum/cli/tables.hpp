#ifndef CAUCHYSUM_CLI_TABLES_HPP
#define CAUCHYSUM_CLI_TABLES_HPP

#include "cauchysum/exact/big_rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cauchysum::cli {

struct TableRow {
    std::vector<long> index;
    BigRational value;
};

struct Table {
    std::string family;
    std::vector<std::string> index_names;
    std::vector<TableRow> rows;
};

struct TableBounds {
    std::optional<long> n, r, m;
};

const std::vector<std::string>& table_families();

/// Throws std::invalid_argument for an unknown family or bad bounds and
/// exact::IndexBoundError beyond the kernel caps.
Table make_table(const std::string& family, const TableBounds& b);

}  // namespace cauchysum::cli

#endif
