#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "serreloc/commspec.hpp"
#include "serreloc/functor.hpp"
#include "serreloc/model.hpp"

namespace serreloc {

using Json = nlohmann::json;

FinitePoset poset_from_json(const Json& j);
Json poset_to_json(const FinitePoset& p);
QuiverPtr quiver_from_json(const Json& j);
Json quiver_to_json(const BoundQuiver& q);
Representation representation_from_json(const QuiverPtr& q, const Json& j);
Json representation_to_json(const Representation& r);

CategoryModel model_from_json(const Json& j);
Json model_to_json(const CategoryModel& m);
ModelObject object_from_json(const CategoryModel& m, const Json& j);
Json object_to_json(const CategoryModel& m, const ModelObject& o);

/// Reads a set of base labels into a mask. Throws ValidationError for unknown labels.
Mask labels_to_mask(const FinitePoset& base, const Json& labels);
Json mask_to_labels(const Preorder& base, Mask m);

/// A bundled or user-supplied input document.
struct Fixture {
  std::string name;
  std::string kind;  ///< length, spectral, exactsub, inclusion, quotient or composite
  CategoryModel model;  ///< the model itself, or the source of a functor
  std::optional<SpectralPoset> spectral;
  std::optional<ExactFunctorModel> functor;
  std::vector<std::pair<std::string, ModelObject>> objects;
};

/// Throws ValidationError on malformed or inconsistent documents.
Fixture fixture_from_json(const Json& j, std::string name);
Fixture load_fixture(const std::filesystem::path& path);
/// Every *.json file in `dir`, sorted by file name.
std::vector<Fixture> load_fixture_dir(const std::filesystem::path& dir);

/// Hasse diagram with edges from each element to its upper covers.
std::string hasse_dot(const std::string& graph_name, const FinitePoset& poset);

}  // namespace serreloc
