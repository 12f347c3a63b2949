#include "app/format.hpp"

#include <algorithm>
#include <cstdio>

namespace ndagg::app {

using nlohmann::json;

std::string formatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string formatTuple(const std::vector<double>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += formatNumber(x[i]);
  }
  return out + ")";
}

std::string formatTuple(const NDimInterval& x) {
  return formatTuple(std::vector<double>(x.components().begin(), x.components().end()));
}

std::string renderTable(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      line += rows[r][c];
      if (c + 1 < rows[r].size()) line += std::string(width[c] - rows[r][c].size() + 2, ' ');
    }
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
      out += std::string(total, '-') + "\n";
    }
  }
  return out;
}

std::string rankTable(const json& r) {
  std::vector<std::vector<std::string>> rows{{"position", "alternative", "score"}};
  const auto& labels = r.at("alternatives");
  const auto& worst = r.at("ranking").at("worstToBest");
  for (std::size_t k = 0; k < worst.size(); ++k) {
    const std::string label = worst[k].get<std::string>();
    std::size_t idx = 0;
    while (idx < labels.size() && labels[idx] != label) ++idx;
    rows.push_back({std::to_string(k + 1), label,
                    formatTuple(r.at("scores")[idx].get<std::vector<double>>())});
  }
  std::string out = renderTable(rows);
  out += "\nranking: " + r.at("ranking").at("text").get<std::string>() + "\n";
  for (const auto& a : r.at("annotations")) {
    out += "note [" + a.at("code").get<std::string>() + "]: " + a.at("message").get<std::string>() + "\n";
    if (a.at("code") == "erratum") {
      out += "  printed ranking:  " + a.at("detail").at("printedRanking").get<std::string>() + "\n";
      out += "  computed ranking: " + a.at("detail").at("computedRanking").get<std::string>() + "\n";
    }
  }
  return out;
}

std::string collectiveTable(const json& c) {
  std::vector<std::vector<std::string>> rows{{""}};
  for (const auto& crit : c.at("criteria")) rows[0].push_back(crit.get<std::string>());
  for (std::size_t i = 0; i < c.at("alternatives").size(); ++i) {
    std::vector<std::string> row{c.at("alternatives")[i].get<std::string>()};
    for (const auto& cell : c.at("collective")[i]) row.push_back(formatTuple(cell.get<std::vector<double>>()));
    rows.push_back(std::move(row));
  }
  return renderTable(rows);
}

std::string reportsTable(const json& reports) {
  std::vector<std::vector<std::string>> rows{{"check", "holds", "violations", "samples"}};
  std::vector<std::string> witnesses;
  auto add = [&](const std::string& prefix, const json& rep) {
    const std::string name = prefix + rep.at("axiom").get<std::string>();
    rows.push_back({name, rep.at("holds").get<bool>() ? "yes" : "NO",
                    std::to_string(rep.at("violations").get<std::size_t>()),
                    std::to_string(rep.at("samples").get<std::size_t>())});
    if (rep.contains("witness")) {
      std::string w = name + ":";
      for (const auto& v : rep.at("witness").at("values")) {
        w += " " + v.at("name").get<std::string>() + "=";
        w += v.at("value").is_array() ? formatTuple(v.at("value").get<std::vector<double>>())
                                      : formatNumber(v.at("value").get<double>());
      }
      if (rep.at("witness").contains("note")) w += " (" + rep.at("witness").at("note").get<std::string>() + ")";
      witnesses.push_back(w);
    }
  };
  for (const auto& [section, body] : reports.items()) {
    if (body.is_array()) {
      for (const auto& rep : body) add(section + ".", rep);
    } else if (body.is_object() && body.contains("axiom")) {
      add(section + ".", body);
    } else if (body.is_object()) {
      for (const auto& [k, rep] : body.items()) {
        if (rep.is_object() && rep.contains("axiom")) add(section + ".", rep);
      }
    }
  }
  std::string out = renderTable(rows);
  if (!witnesses.empty()) {
    out += "\nwitnesses:\n";
    for (const auto& w : witnesses) out += "  " + w + "\n";
  }
  return out;
}

}  // namespace ndagg::app
