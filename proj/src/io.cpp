#include "hoffman/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hoffman {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Matrix parse_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), ::isspace), trimmed.end());
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IOError("malformed CSV cell: '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw IOError("ragged CSV: row with " + std::to_string(row.size()) + " cells");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Matrix(0, 0);
  Matrix M(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j)
      M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return M;
}

Matrix parse_matrix_market(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return Matrix(0, 0);
  if (line.rfind("%%MatrixMarket", 0) != 0)
    throw IOError("missing MatrixMarket banner");
  if (lower(line).find("array") == std::string::npos)
    throw IOError("only the MatrixMarket array format is supported");
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream dims(line);
  Index m = 0, n = 0;
  if (!(dims >> m >> n)) throw IOError("malformed MatrixMarket size line");
  Matrix M(m, n);
  // Array format lists entries column-major.
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) {
      double v;
      if (!(in >> v)) throw IOError("MatrixMarket file ended early");
      M(i, j) = v;
    }
  }
  return M;
}

Matrix read_matrix(const std::string& path) {
  const std::string text = read_file(path);
  const std::string p = lower(path);
  if (has_suffix(p, ".mtx") || has_suffix(p, ".mm")) return parse_matrix_market(text);
  return parse_csv(text);
}

IndexSet parse_index_list(const std::string& text, Index universe) {
  std::vector<int> members;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
    if (cell.empty()) continue;
    try {
      members.push_back(std::stoi(cell));
    } catch (const std::exception&) {
      throw IOError("malformed index: '" + cell + "'");
    }
  }
  return IndexSet(universe, std::move(members));
}

NormTag parse_norm_tag(const std::string& text) {
  const std::string t = lower(text);
  if (t == "l1") return NormTag::L1;
  if (t == "l2") return NormTag::L2;
  if (t == "linf" || t == "loo" || t == "lmax") return NormTag::LInf;
  throw IOError("unknown norm '" + text + "' (expected l1, l2 or linf)");
}

namespace {

nlohmann::json sets_to_json(const std::vector<IndexSet>& sets) {
  // Sorted output keeps serialized ledgers byte-stable.
  std::vector<IndexSet> sorted = sets;
  std::sort(sorted.begin(), sorted.end());
  nlohmann::json arr = nlohmann::json::array();
  for (const IndexSet& s : sorted) arr.push_back(s.members());
  return arr;
}

}  // namespace

nlohmann::json ledger_to_json(const CertificateLedger& ledger) {
  nlohmann::json j;
  j["m"] = ledger.m;
  j["F"] = sets_to_json(ledger.surjective_F);
  j["I"] = sets_to_json(ledger.nonsurjective_I);
  j["H"] = ledger.best_H;
  nlohmann::json per;
  for (const auto& [F, value] : ledger.per_F_values) per[F.to_string()] = value;
  j["per_F"] = per;
  return j;
}

CertificateLedger ledger_from_json(const nlohmann::json& j) {
  CertificateLedger led;
  led.m = j.at("m").get<Index>();
  for (const auto& arr : j.at("F"))
    led.surjective_F.emplace_back(led.m, arr.get<std::vector<int>>());
  for (const auto& arr : j.at("I"))
    led.nonsurjective_I.emplace_back(led.m, arr.get<std::vector<int>>());
  led.best_H = j.at("H").get<double>();
  if (j.contains("per_F")) {
    for (const auto& [key, value] : j.at("per_F").items()) {
      IndexSet F = parse_index_list(key, led.m);
      led.per_F_values[F] = value.get<double>();
    }
  }
  return led;
}

nlohmann::json report_to_json(const HoffmanReport& report) {
  nlohmann::json j = ledger_to_json(report.ledger);
  j["schema"] = 1;
  j["variant"] = to_string(report.variant);
  j["norm_dom"] = to_string(report.norms.domain);
  j["norm_cod"] = to_string(report.norms.codomain);
  if (report.one_over_H) j["one_over_H"] = *report.one_over_H;
  if (report.facial_distance) j["facial_distance"] = *report.facial_distance;
  if (report.witness) {
    nlohmann::json w;
    w["b"] = std::vector<double>(report.witness->b.data(),
                                 report.witness->b.data() + report.witness->b.size());
    w["u"] = std::vector<double>(report.witness->u.data(),
                                 report.witness->u.data() + report.witness->u.size());
    w["ratio"] = report.witness->ratio;
    j["witness"] = w;
  }
  return j;
}

}  // namespace hoffman
