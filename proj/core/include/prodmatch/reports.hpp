#ifndef PRODMATCH_REPORTS_HPP
#define PRODMATCH_REPORTS_HPP

#include <string>
#include <vector>

#include "prodmatch/bounds.hpp"
#include "prodmatch/matching.hpp"
#include "prodmatch/montecarlo.hpp"
#include "prodmatch/search.hpp"
#include "prodmatch/shifting.hpp"
#include "prodmatch/spectral.hpp"

namespace prodmatch {

/// Every document is a single-line JSON object with sorted keys and a
/// "schema": 1 field; big integers are decimal strings, exact rationals are
/// {"num": ..., "den": ...} objects with an "approx" double for reading.
/// Output is byte-deterministic for identical inputs.

std::string certificate_json(const ProductSpace& space, const MatchingCertificate& cert);
std::string matching_result_json(const ProductSpace& space, const MatchingResult& result);
std::string rainbow_result_json(const ProductSpace& space, const RainbowResult& result);
std::string overlap_result_json(const ProductSpace& space, const OverlapResult& result, int s);
std::string bound_report_json(const BoundReport& report);
std::string composition_min_json(const std::vector<int>& n, const std::vector<int>& k,
                                 int total, const std::string& method,
                                 const CompositionMin& result);
std::string ratio_chain_json(const RatioChainReport& report);
std::string spectrum_report_json(const SpectrumReport& report);
std::string mixing_report_json(const MixingReport& report);
std::string shift_summary_json(const ProductSpace& space, std::size_t family_size,
                               const ShiftLog& log);
std::string shift_log_jsonl(const ShiftLog& log); // one JSON object per step
std::string sample_report_json(const ProductSpace& space, const std::vector<Edge>& edges);
std::string averaging_report_json(const AveragingReport& report);
std::string concentration_report_json(const ConcentrationReport& report);
std::string rainbow_run_report_json(const ProductSpace& space, const RainbowRunReport& report);
std::string family_search_json(const ProductSpace& space, const FamilySearchResult& result);
std::string tuple_search_json(const ProductSpace& space, const TupleSearchResult& result);
std::string verdict_report_json(const ProductSpace& space, const VerdictReport& report);
std::string construct_summary_json(const std::string& path, std::size_t size);

} // namespace prodmatch

#endif
