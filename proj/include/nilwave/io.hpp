/**
 * @file io.hpp
 * @brief JSON records and Markdown tables for the library's values and reports.
 *
 * Field order is fixed so that output is byte-stable for a given input.
 */

#ifndef NILWAVE_IO_HPP
#define NILWAVE_IO_HPP

#include <ostream>
#include <vector>

#include <json.hpp>

#include "nilwave/duality.hpp"
#include "nilwave/supports.hpp"
#include "nilwave/verify.hpp"

namespace nilwave {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const TypedOrbit& o);
Json to_json(const MarkedOrbit& o);
Json to_json(const PiCertificate& c);
Json to_json(const SupportFamily& f);
Json to_json(const ExceptionalRow& row);
Json to_json(const LiftResult& r);
Json to_json(const VerificationReport& r);
Json to_json(const AggregateReport& r);

/// Throws Error(InvalidInput) unless @p j is an array of weakly decreasing positive integers.
Partition partition_from_json(const Json& j);

/// One table per family group: n, twist, a, b, lambda, lift, d_A, pass.
void write_markdown(std::ostream& os, const AggregateReport& report);
void write_markdown(std::ostream& os, const std::vector<VerificationReport>& exceptional);

}  // namespace nilwave

#endif  // NILWAVE_IO_HPP
