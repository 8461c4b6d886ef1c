#pragma once

#include <json.hpp>

#include "invgen/census.hpp"
#include "invgen/dimensions.hpp"
#include "invgen/generation.hpp"

namespace invgen {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);  // array of arrays of entry strings
Matrix matrix_from_json(const FieldSpec& f, const Json& j);
Matrix matrix_from_json(const FieldSpec& f, const Json& j, std::size_t rows,
                        std::size_t cols);

Json space_to_json(const BilinearSpace& space);
BilinearSpace space_from_json(const Json& j);

Json tuple_to_json(const GeneratorTuple& t);
GeneratorTuple tuple_from_json(const Json& j);

struct CheckReport {
  bool generates = false;
  int closure_dim = 0;
  InvariantProfile witnesses;  // empty unless a witness search ran
};
Json check_report_to_json(const CheckReport& rep);

Json count_table_to_json(const CountTable& table);
std::string count_table_to_csv(const CountTable& table);

Json census_record_to_json(const CensusRecord& rec);
Json extremal_to_json(const Extremal& ext);

}  // namespace invgen
