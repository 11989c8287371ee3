#include "ridepool/io.h"

#include <iomanip>
#include <sstream>

namespace ridepool {

std::string csv_header() {
  return "instance,mode,seed,unassigned,cost,vehicles,wall_time,ils_iterations,rnr_iterations";
}

std::string csv_row(const RunRecord& record) {
  std::ostringstream out;
  out << record.instance << ',' << record.mode << ',' << record.seed << ','
      << record.unassigned << ',' << record.cost << ',' << record.vehicles << ','
      << std::fixed << std::setprecision(3) << record.wall_time << ','
      << record.ils_iterations << ',' << record.rnr_iterations;
  return out.str();
}

} // namespace ridepool
