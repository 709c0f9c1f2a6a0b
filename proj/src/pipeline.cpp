#include "sagp/pipeline.hpp"

#include <array>

#include "sagp/type1_stree.hpp"

namespace sagp {
namespace {

constexpr std::array<std::pair<Backend, std::string_view>, 6> kNames{{
    {Backend::Naive, "naive"},
    {Backend::Traverse, "traverse"},
    {Backend::PredSuccBaseline, "predsucc:baseline"},
    {Backend::PredSuccVeb, "predsucc:veb"},
    {Backend::PredSuccYFast, "predsucc:yfast"},
    {Backend::Stree, "stree"},
}};

} // namespace

std::string_view backend_name(Backend backend) {
    for (const auto& [b, name] : kNames) {
        if (b == backend) return name;
    }
    return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
    for (const auto& [b, label] : kNames) {
        if (label == name) return b;
    }
    if (name == "predsucc") return Backend::PredSuccVeb;
    return std::nullopt;
}

const std::vector<Backend>& all_backends() {
    static const std::vector<Backend> backends{Backend::Naive,       Backend::Traverse,
                                               Backend::PredSuccBaseline, Backend::PredSuccVeb,
                                               Backend::PredSuccYFast,    Backend::Stree};
    return backends;
}

Prepared prepare(const Text& text) {
    Prepared prep;
    prep.n = text.size();
    prep.idx = build_index(augment(text));
    prep.pals = compute_pals(text);
    prep.buckets = compute_buckets(prep.pals);
    prep.tables = build_tables(text);
    prep.classes = classify_pivots(text, prep.pals, prep.tables);
    return prep;
}

Type1Run compute_type1(const Text& text, const Prepared& prep, Backend backend) {
    Type1Run run;
    switch (backend) {
    case Backend::Naive: {
        const RmqTable rmq = build_lcp_rmq(prep.idx);
        run.sagps = find_type1_naive(text, prep.idx, rmq, prep.pals, prep.classes);
        break;
    }
    case Backend::Traverse: {
        auto r = find_type1_traverse(text, prep.idx, prep.pals, prep.classes);
        run.sagps = std::move(r.sagps);
        run.traversal = r.stats;
        break;
    }
    case Backend::PredSuccBaseline:
    case Backend::PredSuccVeb:
    case Backend::PredSuccYFast: {
        const RmqTable rmq = build_lcp_rmq(prep.idx);
        const PredSuccBackend set = backend == Backend::PredSuccBaseline ? PredSuccBackend::Baseline
                                    : backend == Backend::PredSuccVeb    ? PredSuccBackend::Veb
                                                                         : PredSuccBackend::YFast;
        auto r = find_type1_predsucc(text, prep.idx, rmq, prep.buckets, prep.classes, set);
        run.sagps = std::move(r.sagps);
        run.queries = r.stats;
        break;
    }
    case Backend::Stree:
        run.sagps = find_type1_stree(text, prep.idx, prep.buckets, prep.classes);
        break;
    }
    return run;
}

Type1Run compute_type1(const Text& text, Backend backend) {
    return compute_type1(text, prepare(text), backend);
}

SagpReport compute_sagps(const Text& text, Backend backend) {
    const Index n = text.size();
    if (n == 0) return make_report(0, {PivotType::Type2}, {}, {});
    const Prepared prep = prepare(text);
    auto type1 = compute_type1(text, prep, backend);
    const FindRTable findr = build_findr(text, prep.tables);
    auto type2 = find_type2(text, prep.pals, prep.tables, findr, prep.classes);
    return make_report(n, prep.classes.type, std::move(type1.sagps), std::move(type2));
}

} // namespace sagp
