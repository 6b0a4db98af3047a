#ifndef BCLASS_SRC_TABLE_JSON_HPP
#define BCLASS_SRC_TABLE_JSON_HPP

#include <json.hpp>

#include "bclass/dtransform.hpp"

namespace bclass::detail {

nlohmann::json table_to_json(const ExtrapolationTable& table);

}  // namespace bclass::detail

#endif
