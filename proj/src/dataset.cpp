#include "datagrowth/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "datagrowth/errors.hpp"
#include "json.hpp"

namespace datagrowth {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(field, &pos);
    if (pos != field.size() || !std::isfinite(x)) throw std::invalid_argument(field);
    return x;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + field + "'");
  }
}

}  // namespace

AnnualSeries::AnnualSeries(Eigen::ArrayXd years, Eigen::ArrayXd volumes_eb) {
  if (years.size() != volumes_eb.size()) {
    throw ValidationError("series: years and volumes differ in length");
  }
  if (years.size() < 1) throw ValidationError("series: empty");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(years.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return years[i] < years[j]; });

  years_.resize(years.size());
  volumes_.resize(years.size());
  for (Eigen::Index k = 0; k < years.size(); ++k) {
    years_[k] = years[order[static_cast<std::size_t>(k)]];
    volumes_[k] = volumes_eb[order[static_cast<std::size_t>(k)]];
  }

  for (Eigen::Index k = 0; k < years_.size(); ++k) {
    if (!std::isfinite(years_[k]) || !std::isfinite(volumes_[k])) {
      throw ValidationError("series: non-finite entry at row " + std::to_string(k));
    }
    if (!(volumes_[k] > 0.0)) {
      throw ValidationError("series: volume must be > 0 (year " + std::to_string(years_[k]) + ")");
    }
    if (k > 0 && !(years_[k] > years_[k - 1])) {
      throw ValidationError("series: duplicate year " + std::to_string(years_[k]));
    }
  }
}

void validate(const AnchorSet& set) {
  if (set.anchors.empty()) throw ValidationError("anchors: at least one required");
  double total = 0.0;
  for (const auto& a : set.anchors) {
    if (!(a.weight >= 0.0)) throw ValidationError("anchors: negative weight");
    total += a.weight;
  }
  if (!(total > 0.0)) throw ValidationError("anchors: weights must not all be zero");
}

AnnualSeries reference_table1() {
  Eigen::ArrayXd years(7), volumes(7);
  years << 2006, 2007, 2008, 2009, 2010, 2011, 2012;
  volumes << 185.62, 319.71, 486.52, 762.89, 1143.23, 1699.48, 2502;
  return AnnualSeries(years, volumes);
}

AnchorSet reference_anchors() {
  AnchorSet set;
  set.anchors = {{1883.0, "naive average of 8 historical dates", 1.0},
                 {1900.0, "empirical estimate", 1.0}};
  set.raw_dates = {1832, 1848, 1850, 1869, 1870, 1920, 1932, 1943};
  return set;
}

AnnualSeries load_series(std::istream& in, SeriesFormat format) {
  std::vector<double> years, volumes;

  if (format == SeriesFormat::Csv) {
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string row = trim(line);
      if (row.empty() || row[0] == '#') continue;
      if (!saw_header) {
        if (row != "year,volume_eb") {
          throw ParseError("line " + std::to_string(line_no) +
                           ": expected header 'year,volume_eb', got '" + row + "'");
        }
        saw_header = true;
        continue;
      }
      const auto comma = row.find(',');
      if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'year,volume'");
      }
      years.push_back(parse_number(trim(row.substr(0, comma)), line_no, "year"));
      volumes.push_back(parse_number(trim(row.substr(comma + 1)), line_no, "volume"));
    }
    if (!saw_header) throw ParseError("empty CSV input");
  } else {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("JSON: expected an array of observations");
    int row = 0;
    for (const auto& item : doc) {
      ++row;
      if (!item.is_object() || !item.contains("year") || !item.contains("volume_eb") ||
          !item["year"].is_number() || !item["volume_eb"].is_number()) {
        throw ParseError("JSON: row " + std::to_string(row) +
                         " must be {\"year\": <num>, \"volume_eb\": <num>}");
      }
      years.push_back(item["year"].get<double>());
      volumes.push_back(item["volume_eb"].get<double>());
    }
  }

  if (years.empty()) throw ValidationError("series: no observations");
  Eigen::ArrayXd y = Eigen::Map<Eigen::ArrayXd>(years.data(), static_cast<Eigen::Index>(years.size()));
  Eigen::ArrayXd v =
      Eigen::Map<Eigen::ArrayXd>(volumes.data(), static_cast<Eigen::Index>(volumes.size()));
  return AnnualSeries(y, v);
}

AnnualSeries load_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return load_series(in, json ? SeriesFormat::Json : SeriesFormat::Csv);
}

std::string to_csv(const AnnualSeries& series, int significant_digits) {
  std::ostringstream out;
  out << "year,volume_eb\n";
  char buf[64];
  for (Eigen::Index i = 0; i < series.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, series.years()[i]);
    out << buf << ',';
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, series.volumes()[i]);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace datagrowth
