#ifndef CONEMOD_DRIVER_IO_HPP
#define CONEMOD_DRIVER_IO_HPP

#include <stdexcept>
#include <string>

#include "conemod/driver/algorithm.hpp"
#include "json.hpp"

namespace conemod {

using Json = nlohmann::ordered_json;

/// Malformed input file or document.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

Json instance_to_json(const ConeInstance& inst);
ConeInstance instance_from_json(const Json& doc, const GroebnerLimits& limits = {});

Json index_to_json(const IndexPair& index);
IndexPair index_from_json(const Json& doc);

Json verification_to_json(const VerificationReport& report);
Json fitting_report_to_json(const FittingReport& report);
Json centre_to_json(const CentreData& centre, const Chart& chart);
Json chart_to_json(const Chart& chart);
Json slice_to_json(const SliceData& slice);
Json quotient_to_json(const QuotientPresentation& q);

Json tree_to_json(const ChartTree& tree);
ChartTree tree_from_json(const Json& doc, const GroebnerLimits& limits = {});

/// Tree shape only.
std::string tree_to_dot(const ChartTree& tree);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace conemod

#endif
