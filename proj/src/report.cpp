#include "hs/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace hs {

BoundReport make_report(std::string check, cd z, std::optional<cd> w, double lhs,
                        double rhs, double tol) {
    BoundReport r;
    r.check = std::move(check);
    r.at_z = z;
    r.at_w = w;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tol = tol;
    if (rhs > 0.0)
        r.ratio = lhs / rhs;
    else
        r.ratio = (lhs == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
    r.pass = lhs <= rhs * (1.0 + tol);
    return r;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double GridSpec::radius_at(int i) const {
    return max_radius * static_cast<double>(i + 1) / static_cast<double>(radial);
}

double GridSpec::angle_at(int j) const {
    return 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular);
}

void write_ratio_field_csv(std::ostream& out, const RatioField& field) {
    out << "r,theta,ratio\n";
    for (int i = 0; i < field.grid.radial; ++i)
        for (int j = 0; j < field.grid.angular; ++j)
            out << format_double(field.grid.radius_at(i)) << ','
                << format_double(field.grid.angle_at(j)) << ','
                << format_double(field.at(i, j)) << '\n';
}

void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports) {
    out << "check,re_z,im_z,re_w,im_w,lhs,rhs,ratio,pass\n";
    for (const auto& r : reports) {
        out << r.check << ',' << format_double(r.at_z.real()) << ','
            << format_double(r.at_z.imag()) << ',';
        if (r.at_w)
            out << format_double(r.at_w->real()) << ',' << format_double(r.at_w->imag());
        else
            out << ',';
        out << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
            << format_double(r.ratio) << ',' << (r.pass ? "true" : "false") << '\n';
    }
}

void write_reports_json(std::ostream& out, const std::vector<BoundReport>& reports,
                        int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    out << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i) out << ",";
        out << "\n" << pad << "  {\"check\":\"" << r.check << "\""
            << ",\"re_z\":" << format_double(r.at_z.real())
            << ",\"im_z\":" << format_double(r.at_z.imag());
        if (r.at_w)
            out << ",\"re_w\":" << format_double(r.at_w->real())
                << ",\"im_w\":" << format_double(r.at_w->imag());
        out << ",\"lhs\":" << format_double(r.lhs) << ",\"rhs\":" << format_double(r.rhs)
            << ",\"ratio\":" << format_double(r.ratio) << ",\"tol\":" << format_double(r.tol)
            << ",\"pass\":" << (r.pass ? "true" : "false") << "}";
    }
    if (!reports.empty()) out << "\n" << pad;
    out << "]";
}

}  // namespace hs
