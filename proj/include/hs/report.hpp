#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hs/disk.hpp"

namespace hs {

/// One inequality verdict: pass iff lhs <= rhs * (1 + tol).
struct BoundReport {
    std::string check;
    cd at_z{0.0};
    std::optional<cd> at_w;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double tol = 0.0;
    bool pass = false;
};

BoundReport make_report(std::string check, cd z, std::optional<cd> w, double lhs,
                        double rhs, double tol);

/// Fixed 17-significant-digit formatting, used everywhere a float is
/// serialized so reports are byte-reproducible.
std::string format_double(double x);

struct GridSpec {
    int radial = 64;
    int angular = 128;
    double max_radius = 0.99;

    double radius_at(int i) const;  // i in [0, radial)
    double angle_at(int j) const;   // j in [0, angular)
};

/// Bound ratios over a polar grid; sharpness landscape.
struct RatioField {
    GridSpec grid;
    std::vector<double> values;  // radius-major
    double max_ratio = 0.0;
    cd argmax{0.0};

    double at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.angular) +
                      static_cast<std::size_t>(j)];
    }
};

/// CSV with header r,theta,ratio.
void write_ratio_field_csv(std::ostream& out, const RatioField& field);

/// CSV with header check,re_z,im_z,re_w,im_w,lhs,rhs,ratio,pass.
void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports);

/// JSON array of report records, ordered keys, 17-significant-digit floats.
void write_reports_json(std::ostream& out, const std::vector<BoundReport>& reports,
                        int indent = 0);

}  // namespace hs
