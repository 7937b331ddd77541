#pragma once

#include <string>
#include <string_view>

#include "colsum/partition.hpp"

// Text grammar shared by the CLI and tests:
//   partition     "3,2,2" | "1^2 2^3" | "-" (empty)
//   bipartition   "lambda|mu", e.g. "2,1|-"
//   r-partite     "r=3: 2|1,1|-"
//   D_n class     bipartition with a "+"/"-" suffix on split classes: "2,2|-+", "2,2|--"
namespace colsum {

Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

Bipartition parse_bipartition(std::string_view text);
std::string format_bipartition(const Bipartition& b);

RPartiteType parse_r_partite(std::string_view text);
std::string format_r_partite(const RPartiteType& t);

// When r is known from context the "r=" prefix may be omitted.
RPartiteType parse_r_partite(std::string_view text, int r);

DnClass parse_dn_class(std::string_view text);
std::string format_dn_class(const DnClass& c);

}  // namespace colsum
