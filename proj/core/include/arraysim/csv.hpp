// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "arraysim/experiment.hpp"

namespace arraysim {

/// Shortest representation with 9 significant digits ("%.9g").
std::string format_csv_double(double value);

/// Schema:
/// swept_param,swept_value,ap_type,realization,pose_x,pose_y,pose_theta,predicted_se,mean_se
void write_records_csv(std::ostream &out, const std::vector<SweepRecord> &records);

/// Schema: swept_param,swept_value,ap_type,mean,stderr,n
void write_summary_csv(std::ostream &out, const std::vector<SummaryRow> &rows);

} // namespace arraysim
