#include <algorithm>
#include <sstream>

#include "apolar/obstruction.hpp"
#include "json.hpp"

namespace apolar {

namespace {

std::string tri(const std::optional<bool>& v) {
  if (!v) return "-";
  return *v ? "yes" : "no";
}

}  // namespace

std::string reports_to_json(const std::vector<ObstructionReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json b = nlohmann::json::array();
    for (const auto& x : r.b) b.push_back(to_string(x));
    nlohmann::json o;
    o["case"] = r.case_id;
    o["H"] = r.h_name;
    o["b"] = b;
    o["t"] = r.t ? nlohmann::json(to_string(*r.t)) : nlohmann::json(nullptr);
    o["in_BH"] = r.in_BH;
    o["hilbert_J"] = r.hilbert_J.values;
    o["hilbert_J2"] = r.hilbert_J2.values;
    o["N"] = r.N;
    o["predicted"] = r.predicted ? nlohmann::json(*r.predicted) : nlohmann::json(nullptr);
    o["computed"] = r.computed;
    o["agree"] = r.agree;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

std::string reports_to_table(const std::vector<ObstructionReport>& reports) {
  const std::vector<std::string> head = {"case", "t", "b", "H(S/J)", "H(S/J^2)", "N", "predicted", "computed", "agree"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    if (!r.in_BH) {
      rows.push_back({r.case_id, r.t ? to_string(*r.t) : "", "(" + to_string(r.b) + ")", "not in B_H", "", "", "", "", ""});
      continue;
    }
    rows.push_back({r.case_id, r.t ? to_string(*r.t) : "", "(" + to_string(r.b) + ")", r.hilbert_J.str(),
                    r.hilbert_J2.str(), std::to_string(r.N), tri(r.predicted), r.computed ? "yes" : "no",
                    r.agree ? "yes" : "NO"});
  }
  std::vector<std::size_t> w(head.size());
  for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i];
      if (i + 1 < row.size()) out << std::string(w[i] - row[i].size() + 2, ' ');
    }
    out << '\n';
  };
  emit(head);
  for (const auto& row : rows) emit(row);
  return out.str();
}

}  // namespace apolar
