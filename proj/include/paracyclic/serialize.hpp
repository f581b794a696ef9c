#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "paracyclic/constructions.hpp"
#include "paracyclic/dold_kan.hpp"
#include "paracyclic/duplicial.hpp"
#include "paracyclic/homology.hpp"
#include "paracyclic/identities.hpp"
#include "paracyclic/index_category.hpp"

namespace paracyclic {

using Json = nlohmann::ordered_json;

// All parse failures throw Error(ParseError) with a path-like location.

Json to_json(const Ring& r);
Ring ring_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Ring& ring, const Json& j);

// Row-major array of entry strings. An empty array cannot carry a column
// count, so readers pass the expected shape when they know it.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const Json& j,
                        std::optional<std::pair<std::size_t, std::size_t>> shape = std::nullopt);

Json to_json(const Vector& v);
Vector vector_from_json(const Ring& ring, const Json& j);
// "1,0,-2/3" or a JSON array.
Vector parse_vector(const Ring& ring, const std::string& text);

Json to_json(const TruncatedDuplicialModule& m);
TruncatedDuplicialModule module_from_json(const Json& j);

Json to_json(const DuchainComplex& v);
DuchainComplex duchain_from_json(const Json& j);

Json to_json(const AlgebraSpec& a);
AlgebraSpec algebra_from_json(const Ring& ring, const Json& j);

Json to_json(const IdentityReport& r);
Json to_json(const HomologyGroup& h);
Json to_json(const std::vector<HomologyGroup>& hs);
Json to_json(const DKDecomposition& d);

Json to_json(const IndexMorphism& f);
IndexMorphism morphism_from_json(const Json& j);
Json to_json(const GeneratorWord& w);
GeneratorWord word_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace paracyclic
