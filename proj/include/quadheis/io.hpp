#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "quadheis/bounds.hpp"
#include "quadheis/splitting.hpp"
#include "quadheis/vacuum.hpp"

namespace quadheis {

using Json = nlohmann::ordered_json;

// Structurally invalid input (bad JSON, wrong types, missing fields).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(cplx z);
Json to_json(const CMatrix& M);
Json to_json(const CVector& v);
Json to_json(const QuadElement& E);
Json to_json(const FirstKindCoords& w);
Json to_json(const SecondKindCoords& g);
Json to_json(const BoundReport& r);

cplx complex_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j);
CVector vector_from_json(const Json& j);
QuadElement element_from_json(const Json& j);
FirstKindCoords first_from_json(const Json& j);
SecondKindCoords second_from_json(const Json& j);
Observable observable_from_json(const Json& j);

// Field access that reports missing keys as InputError.
const Json& field(const Json& j, const char* key);
int int_field(const Json& j, const char* key);
double number_field(const Json& j, const char* key);

Json parse_json(const std::string& text);

// Deterministic serialization; every double printed with 17 significant digits.
std::string dump(const Json& j, int indent = -1);

}  // namespace quadheis
