#include "tdual/report/batch.hpp"

#include <exception>

namespace tdual {

std::vector<ReportDocument> run_jobs_serial(const std::vector<JobSpec>& jobs) {
  std::vector<ReportDocument> out;
  out.reserve(jobs.size());
  for (const auto& j : jobs) out.push_back(run_job(j));
  return out;
}

std::vector<ReportDocument> run_jobs(const std::vector<JobSpec>& jobs) {
  std::vector<ReportDocument> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_job(jobs[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace tdual
