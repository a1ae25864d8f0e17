#include "knotcalc/report.hpp"

#include "knotcalc/errors.hpp"

namespace knotcalc {

using nlohmann::json;

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw InputError("unknown parity \"" + text + "\"");
}

json to_json(const PageReport& report) {
  json cells = json::array();
  for (const PageCell& c : report.cells)
    cells.push_back({{"p", c.p},
                     {"k", c.k},
                     {"q", c.q},
                     {"total_degree", c.total_degree},
                     {"dim", c.dim},
                     {"exact", c.exact}});
  json betti = json::array();
  for (const BettiEntry& b : report.betti) betti.push_back({{"degree", b.degree}, {"dim", b.dim}, {"exact", b.exact}});
  return {{"engine_version", report.engine_version},
          {"n", report.n},
          {"parity", to_string(report.parity)},
          {"cells", std::move(cells)},
          {"betti", std::move(betti)}};
}

PageReport report_from_json(const json& j) {
  try {
    PageReport report;
    report.engine_version = j.at("engine_version").get<std::string>();
    report.n = j.at("n").get<int>();
    report.parity = parse_parity(j.at("parity").get<std::string>());
    for (const json& c : j.at("cells")) {
      report.cells.push_back({c.at("p").get<int>(), c.at("k").get<int>(), c.at("q").get<int>(),
                              c.at("total_degree").get<int>(), c.at("dim").get<std::size_t>(),
                              c.at("exact").get<bool>()});
    }
    for (const json& b : j.at("betti"))
      report.betti.push_back({b.at("degree").get<int>(), b.at("dim").get<std::size_t>(), b.at("exact").get<bool>()});
    return report;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed page report: ") + e.what());
  }
}

std::string emit_report(const PageReport& report) { return to_json(report).dump(2) + "\n"; }

PageReport parse_report(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw InputError("page report is not valid JSON");
  return report_from_json(j);
}

}  // namespace knotcalc
