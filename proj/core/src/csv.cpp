// SPDX-License-Identifier: Apache-2.0
#include "arraysim/csv.hpp"

#include <cstdio>

namespace arraysim {

std::string format_csv_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

void write_records_csv(std::ostream &out, const std::vector<SweepRecord> &records) {
    out << "swept_param,swept_value,ap_type,realization,pose_x,pose_y,pose_theta,"
           "predicted_se,mean_se\n";
    for (const auto &record : records) {
        out << to_string(record.swept) << ',' << format_csv_double(record.swept_value) << ','
            << to_string(record.ap_type) << ',' << record.realization_index << ','
            << format_csv_double(record.pose.x) << ',' << format_csv_double(record.pose.y) << ','
            << format_csv_double(record.pose.theta) << ','
            << format_csv_double(record.predicted_objective) << ','
            << format_csv_double(record.mean_se) << '\n';
    }
}

void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows) {
    out << "swept_param,swept_value,ap_type,mean,stderr,n\n";
    for (const auto &row : rows) {
        out << to_string(row.swept) << ',' << format_csv_double(row.swept_value) << ','
            << to_string(row.ap_type) << ',' << format_csv_double(row.mean) << ','
            << format_csv_double(row.std_error) << ',' << row.n << '\n';
    }
}

} // namespace arraysim
