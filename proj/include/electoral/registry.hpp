#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ballots.hpp"
#include "candidates.hpp"
#include "election_result.hpp"
#include "electorate.hpp"
#include "fractional.hpp"
#include "systems.hpp"

namespace electoral {

struct SystemInputs {
    const BallotProfile& profile;
    const CandidateSet& candidates;
    const Electorate& electorate;
    int total_seats = 100;
};

struct SystemEntry {
    std::string name;
    std::function<ElectionResult(const SystemInputs&)> run;
};

// The fixed evaluation order: nine standard systems, then the Fractional
// Ballot Discrete/Continuous pairs across the temperature grid.  Report
// rows and heatmap rows follow this order.
inline std::vector<SystemEntry> system_registry(std::vector<double> sigma_grid = {0.1, 0.3,
                                                                                  1.0}) {
    std::vector<SystemEntry> entries{
        {"Plurality",
         [](const SystemInputs& in) { return run_plurality(in.profile, in.candidates); }},
        {"Two-Round Runoff",
         [](const SystemInputs& in) { return run_two_round(in.profile, in.candidates); }},
        {"IRV", [](const SystemInputs& in) { return run_irv(in.profile, in.candidates); }},
        {"Borda", [](const SystemInputs& in) { return run_borda(in.profile, in.candidates); }},
        {"Approval",
         [](const SystemInputs& in) { return run_approval(in.profile, in.candidates); }},
        {"Score", [](const SystemInputs& in) { return run_score(in.profile, in.candidates); }},
        {"Schulze",
         [](const SystemInputs& in) { return run_schulze(in.profile, in.candidates); }},
        {"Party-List PR (D'Hondt)",
         [](const SystemInputs& in) {
             return run_party_list_pr(in.profile, in.candidates, in.total_seats);
         }},
        {"MMP",
         [](const SystemInputs& in) {
             return run_mmp(in.profile, in.candidates, in.electorate, in.total_seats);
         }},
    };
    for (FractionalVariant variant : {FractionalVariant::Discrete, FractionalVariant::Continuous})
        for (double sigma : sigma_grid) {
            FractionalConfig config{sigma, variant};
            std::string prefix = variant == FractionalVariant::Discrete ? "FBD" : "FBC";
            entries.push_back({prefix + " (sigma=" + format_sigma(sigma) + ")",
                               [config](const SystemInputs& in) {
                                   return run_fractional(in.profile, in.candidates, config);
                               }});
        }
    return entries;
}

}  // namespace electoral
