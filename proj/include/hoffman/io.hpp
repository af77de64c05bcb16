#pragma once

#include "hoffman/engine.hpp"
#include "hoffman/types.hpp"

#include <json.hpp>

#include <string>

namespace hoffman {

struct IOError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a dense matrix from a CSV file (rows = matrix rows) or a
/// MatrixMarket array file, chosen by extension (.mtx / .mm vs anything
/// else). An empty file yields a 0 x 0 matrix.
Matrix read_matrix(const std::string& path);

Matrix parse_csv(const std::string& text);
Matrix parse_matrix_market(const std::string& text);

/// Parses "1,3,5" into an IndexSet over {1..universe}.
IndexSet parse_index_list(const std::string& text, Index universe);

NormTag parse_norm_tag(const std::string& text);

nlohmann::json ledger_to_json(const CertificateLedger& ledger);
CertificateLedger ledger_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const HoffmanReport& report);

}  // namespace hoffman
