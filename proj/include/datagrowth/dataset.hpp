#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "datagrowth/units.hpp"

namespace datagrowth {

// Ordered (year, annual volume) observations. Rows are sorted by year on
// construction; duplicate years or nonpositive volumes are rejected.
class AnnualSeries {
 public:
  AnnualSeries(Eigen::ArrayXd years, Eigen::ArrayXd volumes_eb);

  const Eigen::ArrayXd& years() const { return years_; }
  const Eigen::ArrayXd& volumes() const { return volumes_; }
  Eigen::Index size() const { return years_.size(); }

  TimeYears first_year() const { return years_[0]; }

 private:
  Eigen::ArrayXd years_;
  Eigen::ArrayXd volumes_;
};

struct Anchor {
  TimeYears year;
  std::string label;
  double weight;
};

// Historical reference dates a backcast is scored against. The weighted
// anchors drive the score; raw_dates are context only.
struct AnchorSet {
  std::vector<Anchor> anchors;
  std::vector<TimeYears> raw_dates;
};

void validate(const AnchorSet& set);

enum class SeriesFormat { Csv, Json };

// Embedded 2006-2012 reference observations (EB per year).
AnnualSeries reference_table1();

// Default anchors: 1883 (average of the eight telegraph-to-computer dates,
// which is exactly their arithmetic mean) and 1900 (published empirical
// estimate), both weight 1.
AnchorSet reference_anchors();

// CSV: header "year,volume_eb", one observation per row.
// JSON: array of {"year": <num>, "volume_eb": <num>} objects.
// Rows may arrive unordered; the result is the same as for sorted input.
AnnualSeries load_series(std::istream& in, SeriesFormat format);

AnnualSeries load_series_file(const std::string& path);

std::string to_csv(const AnnualSeries& series, int significant_digits = 17);

}  // namespace datagrowth
