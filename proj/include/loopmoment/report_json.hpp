#pragma once

#include "loopmoment/affine.hpp"
#include "loopmoment/betti.hpp"
#include "loopmoment/involution.hpp"
#include "loopmoment/laurent.hpp"
#include "loopmoment/moment.hpp"

#include <json.hpp>

namespace loopmoment::report {

using Json = nlohmann::ordered_json;

Json root_system_json(const cartan::RootSystem& rs);
Json cell_table_json(const cartan::RootSystem& rs,
                     const affine::CellTable& table);
Json polytope_json(const moment::MomentPolytope& poly);
Json betti_series_json(const betti::BettiSeries& s);
Json compare_report_json(const betti::CompareReport& r);
Json convexity_report_json(const cartan::RootSystem& rs,
                           const lie::LatticeInvolution& iota,
                           const lie::ConvexityReport& rep);
Json involution_check_json(const lie::LieInvolution& inv,
                           const lie::InvolutionCheckReport& rep);
Json laurent_loop_json(const laurent::LaurentLoop& g);

// Standard envelope: resolved config, normalization tag, library version.
Json wrap_report(Json config, Json payload);

}  // namespace loopmoment::report
