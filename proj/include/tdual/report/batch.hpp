#pragma once

#include <vector>

#include "tdual/report/report.hpp"

namespace tdual {

// Jobs are independent; results keep the input order.
std::vector<ReportDocument> run_jobs_serial(const std::vector<JobSpec>& jobs);
std::vector<ReportDocument> run_jobs(const std::vector<JobSpec>& jobs);

}  // namespace tdual
