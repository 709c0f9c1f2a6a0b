#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sagp/classify.hpp"
#include "sagp/core.hpp"
#include "sagp/palindromes.hpp"
#include "sagp/text_index.hpp"
#include "sagp/type1.hpp"
#include "sagp/type2.hpp"

namespace sagp {

enum class Backend { Naive, Traverse, PredSuccBaseline, PredSuccVeb, PredSuccYFast, Stree };

/// naive, traverse, predsucc:baseline, predsucc:veb, predsucc:yfast, stree
std::string_view backend_name(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);
const std::vector<Backend>& all_backends();

/// Everything type-1 backends share: the T' index, radii and classes.
struct Prepared {
    Index n = 0;
    SuffixArrayIndex idx;
    PalsArray pals;
    PalBuckets buckets;
    ClassifyTables tables;
    PivotClasses classes;
};

Prepared prepare(const Text& text);

struct Type1Run {
    std::vector<Sagp> sagps;
    std::optional<TraversalStats> traversal; ///< traverse backend only
    std::optional<QueryStats> queries;       ///< predsucc backends only
};

Type1Run compute_type1(const Text& text, const Prepared& prep, Backend backend);
/// Builds the shared structures first; this is the unit the benchmark times.
Type1Run compute_type1(const Text& text, Backend backend);

/// Full pipeline: classification, the chosen type-1 backend and type-2.
SagpReport compute_sagps(const Text& text, Backend backend);

} // namespace sagp
